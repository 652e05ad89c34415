#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pqgf/mpoly.hpp"
#include "pqgf/report.hpp"
#include "pqgf/sequences.hpp"
#include "pqgf/series.hpp"
#include "pqgf/symfun.hpp"

namespace pqgf {

inline constexpr std::size_t kSingleOrder = 32;
inline constexpr std::size_t kProductOrder = 24;
inline constexpr std::size_t kLemmaOrder = 16;
inline constexpr std::size_t kGenericShapeOrder = 10;
inline constexpr std::size_t kTheoremOrder = 12;

/// Elementary data of the signed alphabet behind each recurrence:
/// (s, t) = (p, q), (2p, q) or (p, 2q).
inline AlphabetPair case_pair(RecurrenceCase c, const MPoly& p, const MPoly& q) {
  switch (c) {
    case RecurrenceCase::fibonacci: return AlphabetPair::signed_pair(p, q);
    case RecurrenceCase::pell: return AlphabetPair::signed_pair(2 * p, q);
    case RecurrenceCase::jacobsthal: return AlphabetPair::signed_pair(p, 2 * q);
  }
  throw std::invalid_argument("bad recurrence case");
}

/// Multiplier c in X_n = 2 S_n - c S_{n-1} for the Lucas-type families.
inline MPoly lucas_multiplier(RecurrenceCase c, const MPoly& p) {
  return c == RecurrenceCase::pell ? 2 * p : p;
}

// ---------------------------------------------------------------------------
// Single-alphabet series sum_n S_{2n+d}(e1 + [-e2]) z^n.

enum class LemmaKind { S_2n_minus_1, S_2n, S_2n_plus_1 };

inline constexpr std::array<LemmaKind, 3> kAllLemmaKinds{LemmaKind::S_2n_minus_1, LemmaKind::S_2n,
                                                         LemmaKind::S_2n_plus_1};

inline int lemma_shift(LemmaKind kind) {
  switch (kind) {
    case LemmaKind::S_2n_minus_1: return -1;
    case LemmaKind::S_2n: return 0;
    case LemmaKind::S_2n_plus_1: return 1;
  }
  throw std::invalid_argument("bad lemma kind");
}

inline std::vector<MPoly> lemma_denominator(const AlphabetPair& pair) {
  return {1, -(pair.s * pair.s + 2 * pair.t), pair.t * pair.t};
}

inline RationalGF lemma_gf(LemmaKind kind, const AlphabetPair& pair) {
  if (!pair.is_signed) throw std::invalid_argument("lemma_gf needs a signed alphabet pair");
  std::vector<MPoly> numer;
  switch (kind) {
    case LemmaKind::S_2n_minus_1: numer = {0, pair.s}; break;
    case LemmaKind::S_2n: numer = {1, -pair.t}; break;
    case LemmaKind::S_2n_plus_1: numer = {pair.s}; break;
  }
  return RationalGF(std::move(numer), lemma_denominator(pair));
}

// ---------------------------------------------------------------------------
// Two-alphabet series sum_n S_{n+da}(a1 + [-a2]) S_{2n+de}(e1 + [-e2]) z^n.

enum class ProductShape { Sn_S2nm1, Sn_S2n, Sn_S2np1, Snm1_S2nm1, Snm1_S2n, Snm1_S2np1 };

inline constexpr std::array<ProductShape, 6> kAllShapes{
    ProductShape::Sn_S2nm1,   ProductShape::Sn_S2n,   ProductShape::Sn_S2np1,
    ProductShape::Snm1_S2nm1, ProductShape::Snm1_S2n, ProductShape::Snm1_S2np1};

inline std::string_view shape_name(ProductShape s) {
  switch (s) {
    case ProductShape::Sn_S2nm1: return "Sn_S2nm1";
    case ProductShape::Sn_S2n: return "Sn_S2n";
    case ProductShape::Sn_S2np1: return "Sn_S2np1";
    case ProductShape::Snm1_S2nm1: return "Snm1_S2nm1";
    case ProductShape::Snm1_S2n: return "Snm1_S2n";
    case ProductShape::Snm1_S2np1: return "Snm1_S2np1";
  }
  throw std::invalid_argument("bad product shape");
}

inline IndexShift shape_shift(ProductShape s) {
  switch (s) {
    case ProductShape::Sn_S2nm1: return {0, -1};
    case ProductShape::Sn_S2n: return {0, 0};
    case ProductShape::Sn_S2np1: return {0, 1};
    case ProductShape::Snm1_S2nm1: return {-1, -1};
    case ProductShape::Snm1_S2n: return {-1, 0};
    case ProductShape::Snm1_S2np1: return {-1, 1};
  }
  throw std::invalid_argument("bad product shape");
}

/// Numerator over P(z), ascending in z, in terms of the pairs' elementary data.
inline std::vector<MPoly> product_numerator(ProductShape shape, const AlphabetPair& a,
                                            const AlphabetPair& e) {
  if (!a.is_signed || !e.is_signed) {
    throw std::invalid_argument("product_numerator needs signed alphabet pairs");
  }
  const MPoly& sA = a.s;
  const MPoly& tA = a.t;
  const MPoly& sE = e.s;
  const MPoly& tE = e.t;
  const MPoly tE2 = tE * tE;
  const MPoly u = sE * sE + 2 * tE;  // e1^2 + e2^2
  switch (shape) {
    case ProductShape::Sn_S2nm1: return {0, sA * sE, tA * sE * u};
    case ProductShape::Sn_S2n: return {1, -(tE * sA), -(tE * tA * (sE * sE + tE))};
    case ProductShape::Sn_S2np1: return {sE, 0, tA * tE2 * sE};
    case ProductShape::Snm1_S2nm1: return {0, sE, 0, tA * tE2 * sE};
    case ProductShape::Snm1_S2n: return {0, sE * sE + tE, -(tE2 * sA), -(tA * tE2 * tE)};
    case ProductShape::Snm1_S2np1: return {0, sE * u, -(tE2 * sA * sE)};
  }
  throw std::invalid_argument("bad product shape");
}

/// P(z) = prod over a in {a1, -a2}, x in {e1^2, e2^2} of (1 - a x z), written
/// with u = e1^2 + e2^2 and v = e1^2 e2^2.
inline std::vector<MPoly> product_denominator(const AlphabetPair& a, const AlphabetPair& e) {
  if (!a.is_signed || !e.is_signed) {
    throw std::invalid_argument("product_denominator needs signed alphabet pairs");
  }
  const MPoly u = e.s * e.s + 2 * e.t;
  const MPoly v = e.t * e.t;
  return {1, -(a.s * u), v * (a.s * a.s + 2 * a.t) - a.t * u * u, a.s * a.t * u * v,
          a.t * a.t * v * v};
}

// ---------------------------------------------------------------------------
// Catalog.

/// Describes the coefficient stream a catalog generating function claims.
struct Oracle {
  enum class Kind {
    pair_series,     // S_{2n+shift.e}(pair)
    pair_product,    // S_{n+shift.a}(pair) * S_{2n+shift.e}(pair)
    family,          // X_{2n} or X_{2n+1}
    family_product,  // X_n * X_{2n} or X_n * X_{2n+1}
  };

  Kind kind = Kind::family;
  FamilyId family = FamilyId::Fib;  // for pair kinds, names the recurrence case
  ParitySelector parity = ParitySelector::even_2n;
  IndexShift shift{0, 0};
  MPoly p = Var::p;
  MPoly q = Var::q;

  friend bool operator==(const Oracle& x, const Oracle& y) {
    return x.kind == y.kind && x.family == y.family && x.parity == y.parity &&
           x.shift.a == y.shift.a && x.shift.e == y.shift.e && x.p == y.p && x.q == y.q;
  }
};

inline std::string_view oracle_kind_name(Oracle::Kind k) {
  switch (k) {
    case Oracle::Kind::pair_series: return "pair_series";
    case Oracle::Kind::pair_product: return "pair_product";
    case Oracle::Kind::family: return "family";
    case Oracle::Kind::family_product: return "family_product";
  }
  throw std::invalid_argument("bad oracle kind");
}

/// First `count` coefficients of the oracle stream, generated by recurrence.
inline std::vector<MPoly> oracle_stream(const Oracle& o, std::size_t count) {
  if (count == 0) return {};
  const int last = 2 * static_cast<int>(count) + 2;
  switch (o.kind) {
    case Oracle::Kind::pair_series:
    case Oracle::Kind::pair_product: {
      const AlphabetPair pair = case_pair(recurrence_case(o.family), o.p, o.q);
      const auto s = s_pair_stream(last, pair);  // s[i] = S_{i-1}
      auto at = [&](int n) -> const MPoly& {
        static const MPoly zero;
        return n < 0 ? zero : s.at(static_cast<std::size_t>(n) + 1);
      };
      std::vector<MPoly> out;
      out.reserve(count);
      for (int n = 0; n < static_cast<int>(count); ++n) {
        if (o.kind == Oracle::Kind::pair_series) {
          out.push_back(at(2 * n + o.shift.e));
        } else {
          out.push_back(at(n + o.shift.a) * at(2 * n + o.shift.e));
        }
      }
      return out;
    }
    case Oracle::Kind::family: {
      const SequenceSpec spec(o.family, o.p, o.q);
      return parity_subsequence(seq_terms(spec, 2 * count), o.parity, count);
    }
    case Oracle::Kind::family_product: {
      const SequenceSpec spec(o.family, o.p, o.q);
      return product_terms(spec, spec, o.parity, count);
    }
  }
  throw std::invalid_argument("bad oracle kind");
}

enum class EntryCategory { lemma, family, shape, product, table };

struct CatalogEntry {
  std::string id;     // catalog key, e.g. "3.7", "4.16", or "T5.1" for table rows
  std::string label;  // e.g. "F_{p,q,2n}"
  EntryCategory category = EntryCategory::family;
  RationalGF gf;
  Oracle oracle;
};

namespace detail {

inline RecurrenceCase case_of_index(int i) { return static_cast<RecurrenceCase>(i); }

inline FamilyId fib_type(RecurrenceCase c) {
  switch (c) {
    case RecurrenceCase::fibonacci: return FamilyId::Fib;
    case RecurrenceCase::pell: return FamilyId::Pell;
    case RecurrenceCase::jacobsthal: return FamilyId::Jac;
  }
  throw std::invalid_argument("bad recurrence case");
}

// First catalog number of each case block.
inline int lemma_base(RecurrenceCase c) {
  switch (c) {
    case RecurrenceCase::fibonacci: return 4;
    case RecurrenceCase::pell: return 11;
    case RecurrenceCase::jacobsthal: return 18;
  }
  return 0;
}
inline int shape_base(RecurrenceCase c) {
  switch (c) {
    case RecurrenceCase::fibonacci: return 7;
    case RecurrenceCase::pell: return 17;
    case RecurrenceCase::jacobsthal: return 27;
  }
  return 0;
}

inline std::string family_label(FamilyId f, ParitySelector parity, std::string_view sub) {
  const std::string idx = parity == ParitySelector::even_2n ? "2n" : "2n+1";
  return std::string(family_symbol(f)) + "_{" + std::string(sub) + idx + "}";
}

inline std::string product_label(FamilyId f, ParitySelector parity, std::string_view sub) {
  const std::string sym(family_symbol(f));
  const std::string idx = parity == ParitySelector::even_2n ? "2n" : "2n+1";
  return sym + "_{" + std::string(sub) + "n}" + sym + "_{" + std::string(sub) + idx + "}";
}

inline const MPoly& P() {
  static const MPoly v(Var::p);
  return v;
}
inline const MPoly& Q() {
  static const MPoly v(Var::q);
  return v;
}

/// Simplified closed forms of the Lucas-type series, kept as given.
inline std::vector<MPoly> stated_lucas_numerator(FamilyId f, ParitySelector parity) {
  const MPoly& p = P();
  const MPoly& q = Q();
  const bool even = parity == ParitySelector::even_2n;
  switch (f) {
    case FamilyId::Lucas:
      return even ? std::vector<MPoly>{2, -(p * p + 2 * q)} : std::vector<MPoly>{p, p * q};
    case FamilyId::PellLucas:
      return even ? std::vector<MPoly>{2, -(2 * (2 * p * p + q))}
                  : std::vector<MPoly>{2 * p, 2 * p * q};
    case FamilyId::JacLucas:
      return even ? std::vector<MPoly>{2, -(p * p + 4 * q)} : std::vector<MPoly>{p, 2 * p * q};
    default: break;
  }
  throw std::invalid_argument("not a Lucas-type family");
}

/// Simplified Lucas-type product closed forms, kept as given (4.25 included).
inline std::vector<MPoly> stated_lucas_product_numerator(FamilyId f, ParitySelector parity) {
  const MPoly& p = P();
  const MPoly& q = Q();
  const MPoly p2 = p * p, q2 = q * q, q3 = q2 * q, q4 = q2 * q2, p4 = p2 * p2;
  const bool even = parity == ParitySelector::even_2n;
  switch (f) {
    case FamilyId::Lucas:
      if (even) {
        return {4, -(3 * p * (p2 + 2 * q)), -(2 * q * (p4 + 3 * p2 * q + 2 * q2)),
                p * q3 * (p2 + 2 * q)};
      }
      return {2 * p, -(p2 * (p2 + q)), 3 * p * q2 * (p2 + 2 * q), -(p2 * q4)};
    case FamilyId::PellLucas:
      if (even) {
        return {4, -(12 * p * (2 * p2 + q)), -(4 * q * (8 * p4 + 4 * p2 * q + q2)),
                4 * p * q3 * (2 * p2 + q)};
      }
      return {4 * p, -(4 * p2 * (4 * p2 + q)), 12 * p * q2 * (2 * p2 + q), -(4 * p2 * q4)};
    case FamilyId::JacLucas:
      if (even) {
        return {4, -(3 * p * (p2 + 4 * q)), -(4 * q * (p4 + 6 * p2 * q + 8 * q2)),
                8 * p * q3 * (p2 + 4 * q)};
      }
      return {2 * p, -(p2 * (p2 + 2 * q)), 12 * p * q2 * (p2 + 4 * q), -(16 * p2 * q4)};
    default: break;
  }
  throw std::invalid_argument("not a Lucas-type family");
}

inline std::vector<MPoly> axpy(const std::vector<MPoly>& acc, const MPoly& c,
                               const std::vector<MPoly>& x) {
  std::vector<MPoly> out = acc;
  if (out.size() < x.size()) out.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] += c * x[i];
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

}  // namespace detail

inline std::string_view category_name(EntryCategory c) {
  switch (c) {
    case EntryCategory::lemma: return "lemma";
    case EntryCategory::family: return "family";
    case EntryCategory::shape: return "shape";
    case EntryCategory::product: return "product";
    case EntryCategory::table: return "table";
  }
  throw std::invalid_argument("bad category");
}

/// S_{2n+d} series of one case, d = -1, 0, 1 (symbolic p, q).
inline CatalogEntry lemma_entry(RecurrenceCase c, LemmaKind kind) {
  const AlphabetPair pair = case_pair(c, detail::P(), detail::Q());
  const int number = detail::lemma_base(c) + static_cast<int>(kind);
  const int shift = lemma_shift(kind);
  const std::string idx = shift < 0 ? "2n-1" : shift == 0 ? "2n" : "2n+1";
  Oracle o;
  o.kind = Oracle::Kind::pair_series;
  o.family = detail::fib_type(c);
  o.shift = {0, shift};
  return {"3." + std::to_string(number), "S_{" + idx + "}(e1+[-e2])", EntryCategory::lemma,
          lemma_gf(kind, pair), o};
}

/// S_{n+da} S_{2n+de} series of one case (symbolic p, q).
inline CatalogEntry shape_entry(RecurrenceCase c, ProductShape shape) {
  const AlphabetPair pair = case_pair(c, detail::P(), detail::Q());
  const int number = detail::shape_base(c) + static_cast<int>(shape);
  Oracle o;
  o.kind = Oracle::Kind::pair_product;
  o.family = detail::fib_type(c);
  o.shift = shape_shift(shape);
  return {"4." + std::to_string(number), std::string(shape_name(shape)), EntryCategory::shape,
          RationalGF(product_numerator(shape, pair, pair), product_denominator(pair, pair)), o};
}

/// Generating function of the even or odd terms of a special family.
inline CatalogEntry family_gf(FamilyId family, ParitySelector parity) {
  if (is_generalized(family)) {
    throw std::invalid_argument("no closed form catalogued for generalized families");
  }
  if (parity == ParitySelector::all_n) {
    throw std::invalid_argument("family_gf needs an even or odd selector");
  }
  const RecurrenceCase c = recurrence_case(family);
  const AlphabetPair pair = case_pair(c, detail::P(), detail::Q());
  const bool even = parity == ParitySelector::even_2n;
  const int base = detail::lemma_base(c) + 3;  // 3.7, 3.14, 3.21
  const int number = base + (is_lucas_type(family) ? 2 : 0) + (even ? 0 : 1);

  std::vector<MPoly> numer =
      is_lucas_type(family)
          ? detail::stated_lucas_numerator(family, parity)
          : lemma_gf(even ? LemmaKind::S_2n_minus_1 : LemmaKind::S_2n, pair).numer();
  Oracle o;
  o.kind = Oracle::Kind::family;
  o.family = family;
  o.parity = parity;
  return {"3." + std::to_string(number), detail::family_label(family, parity, "p,q,"),
          EntryCategory::family, RationalGF(std::move(numer), lemma_denominator(pair)), o};
}

/// Generating function of X_n X_{2n} or X_n X_{2n+1} for a special family.
inline CatalogEntry product_gf(FamilyId a, FamilyId e, ParitySelector parity) {
  if (a != e) throw std::invalid_argument("only products within one family are catalogued");
  if (is_generalized(a)) {
    throw std::invalid_argument("no closed form catalogued for generalized families");
  }
  if (parity == ParitySelector::all_n) {
    throw std::invalid_argument("product_gf needs an even or odd selector");
  }
  const RecurrenceCase c = recurrence_case(a);
  const AlphabetPair pair = case_pair(c, detail::P(), detail::Q());
  const bool even = parity == ParitySelector::even_2n;
  const int base = detail::shape_base(c) + 6;  // 4.13, 4.23, 4.33
  const int number = base + (is_lucas_type(a) ? 2 : 0) + (even ? 0 : 1);

  std::vector<MPoly> numer =
      is_lucas_type(a)
          ? detail::stated_lucas_product_numerator(a, parity)
          : product_numerator(even ? ProductShape::Snm1_S2nm1 : ProductShape::Snm1_S2n, pair, pair);
  Oracle o;
  o.kind = Oracle::Kind::family_product;
  o.family = a;
  o.parity = parity;
  return {"4." + std::to_string(number), detail::product_label(a, parity, "p,q,"),
          EntryCategory::product, RationalGF(std::move(numer), product_denominator(pair, pair)),
          o};
}

/// Numerator re-derived from the Lucas relation X_n = 2 S_n - c S_{n-1}
/// applied to the Fibonacci-type building blocks. Only for Lucas-type
/// family and product entries; the denominator is shared.
inline std::vector<MPoly> derived_lucas_numerator(FamilyId family, ParitySelector parity,
                                                  bool product) {
  if (!is_lucas_type(family)) throw std::invalid_argument("not a Lucas-type family");
  const RecurrenceCase rc = recurrence_case(family);
  const AlphabetPair pair = case_pair(rc, detail::P(), detail::Q());
  const MPoly c = lucas_multiplier(rc, detail::P());
  const bool even = parity == ParitySelector::even_2n;
  if (!product) {
    const LemmaKind hi = even ? LemmaKind::S_2n : LemmaKind::S_2n_plus_1;
    const LemmaKind lo = even ? LemmaKind::S_2n_minus_1 : LemmaKind::S_2n;
    auto acc = detail::axpy({}, 2, lemma_gf(hi, pair).numer());
    return detail::axpy(acc, -c, lemma_gf(lo, pair).numer());
  }
  const ProductShape hh = even ? ProductShape::Sn_S2n : ProductShape::Sn_S2np1;
  const ProductShape hl = even ? ProductShape::Sn_S2nm1 : ProductShape::Sn_S2n;
  const ProductShape lh = even ? ProductShape::Snm1_S2n : ProductShape::Snm1_S2np1;
  const ProductShape ll = even ? ProductShape::Snm1_S2nm1 : ProductShape::Snm1_S2n;
  auto acc = detail::axpy({}, 4, product_numerator(hh, pair, pair));
  acc = detail::axpy(acc, -(2 * c), product_numerator(hl, pair, pair));
  acc = detail::axpy(acc, -(2 * c), product_numerator(lh, pair, pair));
  return detail::axpy(acc, c * c, product_numerator(ll, pair, pair));
}

/// Every catalogued generating function with symbolic p, q: lemma series,
/// single families, two-alphabet shapes and family products.
inline std::vector<CatalogEntry> catalog() {
  std::vector<CatalogEntry> out;
  for (int ci = 0; ci < 3; ++ci) {
    const RecurrenceCase c = detail::case_of_index(ci);
    for (LemmaKind k : kAllLemmaKinds) out.push_back(lemma_entry(c, k));
  }
  for (FamilyId f : kSpecialFamilies) {
    for (ParitySelector par : {ParitySelector::even_2n, ParitySelector::odd_2n_plus_1}) {
      out.push_back(family_gf(f, par));
    }
  }
  for (int ci = 0; ci < 3; ++ci) {
    const RecurrenceCase c = detail::case_of_index(ci);
    for (ProductShape s : kAllShapes) out.push_back(shape_entry(c, s));
  }
  for (FamilyId f : kSpecialFamilies) {
    for (ParitySelector par : {ParitySelector::even_2n, ParitySelector::odd_2n_plus_1}) {
      out.push_back(product_gf(f, f, par));
    }
  }
  std::sort(out.begin(), out.end(), [](const CatalogEntry& x, const CatalogEntry& y) {
    auto key = [](const std::string& id) {
      const auto dot = id.find('.');
      return std::pair{std::stoi(id.substr(0, dot)), std::stoi(id.substr(dot + 1))};
    };
    return key(x.id) < key(y.id);
  });
  return out;
}

inline std::vector<CatalogEntry> catalog(EntryCategory category) {
  auto all = catalog();
  std::erase_if(all, [category](const CatalogEntry& e) { return e.category != category; });
  return all;
}

inline CatalogEntry find_entry(std::string_view id) {
  for (auto& e : catalog()) {
    if (e.id == id) return e;
  }
  throw std::invalid_argument("no catalog entry '" + std::string(id) + "'");
}

/// Binds p and q in both the closed form and the oracle.
inline CatalogEntry instantiate(const CatalogEntry& entry, const MPoly& p, const MPoly& q) {
  CatalogEntry out = entry;
  auto bind = [&](const MPoly& f) { return substitute(f, {{Var::p, p}, {Var::q, q}}); };
  out.gf = RationalGF(map_coeffs(entry.gf.numer(), bind), map_coeffs(entry.gf.denom(), bind));
  out.oracle.p = bind(entry.oracle.p);
  out.oracle.q = bind(entry.oracle.q);
  return out;
}

/// Numerator that the oracle stream requires over the entry's denominator:
/// (stream * denom) truncated at the degree the closed form could have.
inline std::vector<MPoly> numerator_from_stream(std::span<const MPoly> stream,
                                                const std::vector<MPoly>& denom,
                                                std::size_t degree) {
  std::vector<MPoly> out(degree + 1);
  for (std::size_t n = 0; n <= degree; ++n) {
    for (std::size_t j = 0; j < denom.size() && j <= n; ++j) {
      if (n - j < stream.size()) out[n] += denom[j] * stream[n - j];
    }
  }
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

/// Expands `gf` to z^order and compares with the oracle stream of `entry`.
inline VerificationReport verify_gf(const CatalogEntry& entry, const RationalGF& gf,
                                    std::size_t order) {
  if (order < kMinCheckOrder) throw std::invalid_argument("verification order must be >= 4");
  const auto stream = oracle_stream(entry.oracle, order + 1);
  VerificationReport report = compare_coefficients(entry.id, stream, expand(gf, order));
  if (!report.passed()) {
    const std::size_t degree = std::max(gf.numer().size(), gf.denom().size()) - 1;
    report.suggested_numer = numerator_from_stream(stream, gf.denom(), degree);
  }
  return report;
}

inline VerificationReport verify_entry(const CatalogEntry& entry, std::size_t order) {
  return verify_gf(entry, entry.gf, order);
}

inline std::size_t default_order(const CatalogEntry& entry) {
  switch (entry.oracle.kind) {
    case Oracle::Kind::pair_series: return kLemmaOrder;
    case Oracle::Kind::pair_product: return kProductOrder;
    case Oracle::Kind::family: return kSingleOrder;
    case Oracle::Kind::family_product: return kProductOrder;
  }
  return kSingleOrder;
}

// ---------------------------------------------------------------------------
// Bridge between the families and S_n of the signed pair.

/// X_n for a special family written through S_n(pair) of its case:
/// S_{n-1} for the Fibonacci types, 2 S_n - c S_{n-1} for the Lucas types.
inline MPoly bridge_term(FamilyId family, int n, const MPoly& p, const MPoly& q) {
  if (is_generalized(family)) throw std::invalid_argument("bridge is defined for special families");
  const RecurrenceCase rc = recurrence_case(family);
  const AlphabetPair pair = case_pair(rc, p, q);
  if (!is_lucas_type(family)) return s_pair(n - 1, pair);
  return 2 * s_pair(n, pair) - lucas_multiplier(rc, p) * s_pair(n - 1, pair);
}

/// Compares seq_terms with bridge_term for n = 0..last, symbolic p, q.
inline VerificationReport bridge_check(FamilyId family, std::size_t last) {
  const SequenceSpec spec = SequenceSpec::symbolic(family);
  const auto terms = seq_terms(spec, last + 1);
  std::vector<MPoly> bridged;
  for (std::size_t n = 0; n <= last; ++n) {
    bridged.push_back(bridge_term(family, static_cast<int>(n), spec.p(), spec.q()));
  }
  return compare_coefficients("bridge_" + std::string(family_name(family)), terms,
                              TruncSeries(bridged));
}

// ---------------------------------------------------------------------------
// Tables of k-numbers (2-4: symbolic k) and classic numbers (5-7: k = 1).

enum class TableId { T2 = 2, T3, T4, T5, T6, T7 };

inline TableId parse_table(int n) {
  if (n < 2 || n > 7) throw std::invalid_argument("table id must be 2..7");
  return static_cast<TableId>(n);
}

inline std::vector<CatalogEntry> table_entries(TableId table) {
  const int t = static_cast<int>(table);
  const bool products = t >= 5;
  FamilyId fib = FamilyId::Fib;
  FamilyId lucas = FamilyId::Lucas;
  if (t == 3 || t == 6) {
    fib = FamilyId::Pell;
    lucas = FamilyId::PellLucas;
  } else if (t == 4 || t == 7) {
    fib = FamilyId::Jac;
    lucas = FamilyId::JacLucas;
  }
  const SequenceSpec kspec = k_specialize(fib);
  MPoly p = kspec.p();
  MPoly q = kspec.q();
  if (products) {
    p = substitute(p, Var::k, MPoly(1));
    q = substitute(q, Var::k, MPoly(1));
  }

  std::vector<CatalogEntry> rows;
  int row = 1;
  for (FamilyId f : {fib, lucas}) {
    for (ParitySelector par : {ParitySelector::even_2n, ParitySelector::odd_2n_plus_1}) {
      const CatalogEntry base = products ? product_gf(f, f, par) : family_gf(f, par);
      CatalogEntry e = instantiate(base, p, q);
      e.id = "T" + std::to_string(t) + "." + std::to_string(row++);
      e.label = products ? detail::product_label(f, par, "") : detail::family_label(f, par, "k,");
      e.category = EntryCategory::table;
      rows.push_back(std::move(e));
    }
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Shape identities over literal Z[a1, a2, e1, e2].

inline AlphabetPair literal_pair(Var x, Var y) {
  return AlphabetPair::signed_pair(MPoly(x) - MPoly(y), MPoly(x) * MPoly(y));
}

/// sum_n S_{n+da}(a1 + [-a2]) S_{2n+de}(e1 + [-e2]) z^n against the shape's
/// closed form, both sides over literal variables.
inline VerificationReport generic_shape_check(ProductShape shape, std::size_t order,
                                              const std::vector<MPoly>* numer_override = nullptr) {
  if (order < kMinCheckOrder) throw std::invalid_argument("verification order must be >= 4");
  const AlphabetPair A = literal_pair(Var::a1, Var::a2);
  const AlphabetPair E = literal_pair(Var::e1, Var::e2);
  const IndexShift sh = shape_shift(shape);
  const MPoly a1(Var::a1), a2(Var::a2), e1(Var::e1), e2(Var::e2);
  std::vector<MPoly> lhs;
  for (std::size_t n = 0; n <= order; ++n) {
    const int i = static_cast<int>(n);
    lhs.push_back(s_two(i + sh.a, a1, -a2) * s_two(2 * i + sh.e, e1, -e2));
  }
  const RationalGF gf(numer_override ? *numer_override : product_numerator(shape, A, E),
                      product_denominator(A, E));
  return compare_coefficients("generic_" + std::string(shape_name(shape)), lhs, expand(gf, order));
}

}  // namespace pqgf
