#pragma once

#include <cstddef>
#include <functional>
#include <future>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pqgf/genfun.hpp"
#include "pqgf/report.hpp"
#include "pqgf/symfun.hpp"

namespace pqgf {

enum class Scope {
  all,
  theorems,
  lemmas,
  families,
  shapes,
  generic,
  products,
  bridge,
  consistency,
  tables,
};

inline constexpr std::array<std::string_view, 10> kScopeNames{
    "all",    "theorems", "lemmas", "families",    "shapes",
    "generic", "products", "bridge", "consistency", "tables"};

inline Scope parse_scope(std::string_view name) {
  for (std::size_t i = 0; i < kScopeNames.size(); ++i) {
    if (kScopeNames[i] == name) return static_cast<Scope>(i);
  }
  throw std::invalid_argument("unknown scope '" + std::string(name) + "'");
}

inline constexpr std::size_t kBridgeLast = 16;

struct Check {
  std::string id;
  std::function<VerificationReport()> run;
};

/// Stated Lucas-type numerator against the one re-derived from the shapes.
inline VerificationReport consistency_check(const CatalogEntry& entry) {
  const bool product = entry.category == EntryCategory::product;
  const auto derived = derived_lucas_numerator(entry.oracle.family, entry.oracle.parity, product);
  const auto& stated = entry.gf.numer();
  const std::size_t len = std::max(derived.size(), stated.size());
  std::vector<MPoly> padded = stated;
  padded.resize(len);
  VerificationReport r = compare_coefficients("consistency_" + entry.id, derived, TruncSeries(padded));
  if (!r.passed()) r.suggested_numer = derived;
  return r;
}

namespace detail {

inline void add_catalog(std::vector<Check>& out, EntryCategory cat, std::optional<std::size_t> order) {
  for (auto& e : catalog(cat)) {
    const std::size_t n = order.value_or(default_order(e));
    out.push_back({e.id, [e, n] { return verify_entry(e, n); }});
  }
}

}  // namespace detail

/// Checks of one scope, in a fixed order. `order` overrides every default.
inline std::vector<Check> suite_checks(Scope scope, std::optional<std::size_t> order = std::nullopt) {
  if (order && *order < kMinCheckOrder) throw std::invalid_argument("verification order must be >= 4");
  std::vector<Check> out;
  auto want = [scope](Scope s) { return scope == Scope::all || scope == s; };
  if (want(Scope::theorems)) {
    for (TheoremId id : kAllTheorems) {
      const std::size_t n = order.value_or(kTheoremOrder);
      out.push_back({std::string(theorem_name(id)), [id, n] { return theorem_check(id, n); }});
    }
  }
  if (want(Scope::lemmas)) detail::add_catalog(out, EntryCategory::lemma, order);
  if (want(Scope::families)) detail::add_catalog(out, EntryCategory::family, order);
  if (want(Scope::shapes)) detail::add_catalog(out, EntryCategory::shape, order);
  if (want(Scope::generic)) {
    for (ProductShape s : kAllShapes) {
      const std::size_t n = order.value_or(kGenericShapeOrder);
      out.push_back({"generic_" + std::string(shape_name(s)), [s, n] { return generic_shape_check(s, n); }});
    }
  }
  if (want(Scope::products)) detail::add_catalog(out, EntryCategory::product, order);
  if (want(Scope::bridge)) {
    for (FamilyId f : kSpecialFamilies) {
      const std::size_t n = order.value_or(kBridgeLast);
      out.push_back({"bridge_" + std::string(family_name(f)), [f, n] { return bridge_check(f, n); }});
    }
  }
  if (want(Scope::consistency)) {
    for (auto& e : catalog()) {
      const bool lucas_entry =
          (e.category == EntryCategory::family || e.category == EntryCategory::product) &&
          is_lucas_type(e.oracle.family);
      if (lucas_entry) out.push_back({"consistency_" + e.id, [e] { return consistency_check(e); }});
    }
  }
  if (want(Scope::tables)) {
    for (int t = 2; t <= 7; ++t) {
      for (auto& e : table_entries(parse_table(t))) {
        const std::size_t n = order.value_or(default_order(e));
        out.push_back({e.id, [e, n] { return verify_entry(e, n); }});
      }
    }
  }
  return out;
}

/// Runs the checks concurrently; results come back in input order.
inline std::vector<VerificationReport> run_checks(const std::vector<Check>& checks) {
  std::vector<std::future<VerificationReport>> pending;
  pending.reserve(checks.size());
  for (const auto& c : checks) pending.push_back(std::async(std::launch::async, c.run));
  std::vector<VerificationReport> out;
  out.reserve(checks.size());
  for (auto& f : pending) out.push_back(f.get());
  return out;
}

inline bool all_passed(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports) {
    if (!r.passed()) return false;
  }
  return true;
}

}  // namespace pqgf
