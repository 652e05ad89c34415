#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pqgf/mpoly.hpp"

namespace pqgf {

enum class FamilyId { GenFib, GenPell, GenJac, Fib, Pell, Jac, Lucas, PellLucas, JacLucas };

inline constexpr std::array<FamilyId, 6> kSpecialFamilies{
    FamilyId::Fib, FamilyId::Lucas, FamilyId::Pell, FamilyId::PellLucas, FamilyId::Jac,
    FamilyId::JacLucas};

/// Kebab-case name used on the command line and in JSON.
inline std::string_view family_name(FamilyId f) {
  switch (f) {
    case FamilyId::GenFib: return "gen-fib";
    case FamilyId::GenPell: return "gen-pell";
    case FamilyId::GenJac: return "gen-jac";
    case FamilyId::Fib: return "fib";
    case FamilyId::Pell: return "pell";
    case FamilyId::Jac: return "jac";
    case FamilyId::Lucas: return "lucas";
    case FamilyId::PellLucas: return "pell-lucas";
    case FamilyId::JacLucas: return "jac-lucas";
  }
  throw std::invalid_argument("bad family id");
}

inline FamilyId parse_family(std::string_view name) {
  for (FamilyId f : {FamilyId::GenFib, FamilyId::GenPell, FamilyId::GenJac, FamilyId::Fib,
                     FamilyId::Pell, FamilyId::Jac, FamilyId::Lucas, FamilyId::PellLucas,
                     FamilyId::JacLucas}) {
    if (family_name(f) == name) return f;
  }
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

/// Letter used for the family in tables: F, P, J, L, Q, j.
inline std::string_view family_symbol(FamilyId f) {
  switch (f) {
    case FamilyId::Fib: return "F";
    case FamilyId::Pell: return "P";
    case FamilyId::Jac: return "J";
    case FamilyId::Lucas: return "L";
    case FamilyId::PellLucas: return "Q";
    case FamilyId::JacLucas: return "j";
    case FamilyId::GenFib: return "f";
    case FamilyId::GenPell: return "l";
    case FamilyId::GenJac: return "C";
  }
  throw std::invalid_argument("bad family id");
}

inline bool is_generalized(FamilyId f) {
  return f == FamilyId::GenFib || f == FamilyId::GenPell || f == FamilyId::GenJac;
}

inline bool is_lucas_type(FamilyId f) {
  return f == FamilyId::Lucas || f == FamilyId::PellLucas || f == FamilyId::JacLucas;
}

/// Recurrence shape shared by a Fibonacci-type family and its Lucas partner.
enum class RecurrenceCase { fibonacci, pell, jacobsthal };

inline RecurrenceCase recurrence_case(FamilyId f) {
  switch (f) {
    case FamilyId::GenFib:
    case FamilyId::Fib:
    case FamilyId::Lucas: return RecurrenceCase::fibonacci;
    case FamilyId::GenPell:
    case FamilyId::Pell:
    case FamilyId::PellLucas: return RecurrenceCase::pell;
    case FamilyId::GenJac:
    case FamilyId::Jac:
    case FamilyId::JacLucas: return RecurrenceCase::jacobsthal;
  }
  throw std::invalid_argument("bad family id");
}

struct Seeds {
  MPoly alpha;
  MPoly beta;
  MPoly gamma;
  friend bool operator==(const Seeds&, const Seeds&) = default;
};

/// A family with its parameter bindings. p and q are polynomials: the symbols
/// themselves, an integer, or an expression in k.
class SequenceSpec {
 public:
  SequenceSpec(FamilyId family, MPoly p, MPoly q, std::optional<Seeds> seeds = std::nullopt)
      : family_(family), p_(std::move(p)), q_(std::move(q)), seeds_(std::move(seeds)) {
    if (is_generalized(family_) && !seeds_) {
      throw std::invalid_argument(std::string(family_name(family_)) + " requires seeds alpha, beta, gamma");
    }
    if (!is_generalized(family_) && seeds_) {
      throw std::invalid_argument(std::string(family_name(family_)) + " has fixed seeds");
    }
  }

  /// Symbolic p and q.
  static SequenceSpec symbolic(FamilyId family) { return {family, Var::p, Var::q}; }

  FamilyId family() const noexcept { return family_; }
  const MPoly& p() const noexcept { return p_; }
  const MPoly& q() const noexcept { return q_; }
  const std::optional<Seeds>& seeds() const noexcept { return seeds_; }

  /// x_n = first * x_{n-1} + second * x_{n-2}.
  MPoly first_multiplier() const {
    return recurrence_case(family_) == RecurrenceCase::pell ? 2 * p_ : p_;
  }
  MPoly second_multiplier() const {
    return recurrence_case(family_) == RecurrenceCase::jacobsthal ? 2 * q_ : q_;
  }

  std::pair<MPoly, MPoly> initial_terms() const {
    if (seeds_) {
      const MPoly gp = recurrence_case(family_) == RecurrenceCase::pell ? 2 * seeds_->gamma * p_
                                                                        : seeds_->gamma * p_;
      return {seeds_->alpha, seeds_->beta + gp};
    }
    if (is_lucas_type(family_)) return {MPoly(2), first_multiplier()};
    return {MPoly(0), MPoly(1)};
  }

  friend bool operator==(const SequenceSpec&, const SequenceSpec&) = default;

 private:
  FamilyId family_;
  MPoly p_;
  MPoly q_;
  std::optional<Seeds> seeds_;
};

/// Terms n = 0..count-1, by direct iteration of the recurrence.
inline std::vector<MPoly> seq_terms(const SequenceSpec& spec, std::size_t count) {
  if (count == 0) throw std::invalid_argument("term count must be at least 1");
  const MPoly c1 = spec.first_multiplier();
  const MPoly c2 = spec.second_multiplier();
  auto [x0, x1] = spec.initial_terms();
  std::vector<MPoly> out;
  out.reserve(count);
  out.push_back(x0);
  if (count > 1) out.push_back(x1);
  while (out.size() < count) {
    const std::size_t n = out.size();
    out.push_back(c1 * out[n - 1] + c2 * out[n - 2]);
  }
  return out;
}

/// (p, q) bindings of the k-numbers: (k, 1) for Fibonacci and Jacobsthal
/// types, (1, k) for the Pell types.
inline SequenceSpec k_specialize(FamilyId family) {
  if (is_generalized(family)) {
    throw std::invalid_argument("k-specialization is defined only for the special families");
  }
  if (recurrence_case(family) == RecurrenceCase::pell) return {family, MPoly(1), Var::k};
  return {family, Var::k, MPoly(1)};
}

enum class ParitySelector { all_n, even_2n, odd_2n_plus_1 };

inline std::string_view parity_name(ParitySelector p) {
  switch (p) {
    case ParitySelector::all_n: return "all";
    case ParitySelector::even_2n: return "even";
    case ParitySelector::odd_2n_plus_1: return "odd";
  }
  throw std::invalid_argument("bad parity");
}

inline ParitySelector parse_parity(std::string_view name) {
  for (ParitySelector p :
       {ParitySelector::all_n, ParitySelector::even_2n, ParitySelector::odd_2n_plus_1}) {
    if (parity_name(p) == name) return p;
  }
  throw std::invalid_argument("unknown parity '" + std::string(name) + "'");
}

inline std::size_t parity_offset(ParitySelector p) {
  return p == ParitySelector::odd_2n_plus_1 ? 1 : 0;
}

/// Terms at indices 2n (even) or 2n+1 (odd). Without `count`, takes as many
/// as the input provides.
inline std::vector<MPoly> parity_subsequence(const std::vector<MPoly>& terms, ParitySelector parity,
                                             std::optional<std::size_t> count = std::nullopt) {
  if (parity == ParitySelector::all_n) {
    if (count && *count > terms.size()) throw std::out_of_range("not enough terms");
    return count ? std::vector<MPoly>(terms.begin(), terms.begin() + *count) : terms;
  }
  const std::size_t off = parity_offset(parity);
  const std::size_t available = terms.size() > off ? (terms.size() - off + 1) / 2 : 0;
  const std::size_t wanted = count.value_or(available);
  if (wanted > available) {
    throw std::out_of_range("need " + std::to_string(2 * wanted - 1 + off) + " terms, have " +
                            std::to_string(terms.size()));
  }
  std::vector<MPoly> out;
  out.reserve(wanted);
  for (std::size_t n = 0; n < wanted; ++n) out.push_back(terms[2 * n + off]);
  return out;
}

/// A_n * E_{2n} (even) or A_n * E_{2n+1} (odd), n = 0..count-1.
inline std::vector<MPoly> product_terms(const SequenceSpec& a, const SequenceSpec& e,
                                        ParitySelector parity, std::size_t count) {
  if (parity == ParitySelector::all_n) {
    throw std::invalid_argument("product streams need an even or odd selector");
  }
  if (a.p() != e.p() || a.q() != e.q()) {
    throw std::invalid_argument("product factors must share p and q bindings");
  }
  if (count == 0) return {};
  const auto as = seq_terms(a, count);
  const auto es = parity_subsequence(seq_terms(e, 2 * count), parity, count);
  std::vector<MPoly> out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) out.push_back(as[n] * es[n]);
  return out;
}

}  // namespace pqgf
