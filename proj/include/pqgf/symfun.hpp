#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pqgf/mpoly.hpp"
#include "pqgf/report.hpp"
#include "pqgf/series.hpp"

namespace pqgf {

/// Complete homogeneous symmetric function h_k(vars). h_0 = 1, h_k = 0 for k < 0.
inline MPoly complete_homogeneous(int k, std::span<const MPoly> vars) {
  if (k < 0) return {};
  if (vars.empty()) throw std::invalid_argument("complete_homogeneous needs at least one variable");
  // h[j] over a growing prefix of vars; adding x maps h[j] to sum_i x^i h[j-i].
  std::vector<MPoly> h(static_cast<std::size_t>(k) + 1);
  h[0] = 1;
  for (const MPoly& x : vars) {
    for (std::size_t j = 1; j < h.size(); ++j) h[j] += x * h[j - 1];
  }
  return h.back();
}

/// S_n(x + y) = sum_{i=0..n} x^i y^(n-i); zero for n < 0.
inline MPoly s_two(int n, const MPoly& x, const MPoly& y) {
  if (n < 0) return {};
  std::vector<MPoly> xp{MPoly(1)};
  std::vector<MPoly> yp{MPoly(1)};
  for (int i = 1; i <= n; ++i) {
    xp.push_back(xp.back() * x);
    yp.push_back(yp.back() * y);
  }
  MPoly sum;
  for (int i = 0; i <= n; ++i) sum += xp[i] * yp[n - i];
  return sum;
}

/// A two-letter alphabet known only through its elementary data.
///
/// A signed pair stands for {e1, -e2} with s = e1 - e2 and t = e1*e2, so
/// S_n = s*S_{n-1} + t*S_{n-2}. A plain pair stands for {e1, e2} with
/// s = e1 + e2, t = e1*e2 and S_n = s*S_{n-1} - t*S_{n-2}.
struct AlphabetPair {
  MPoly s;
  MPoly t;
  bool is_signed = true;

  static AlphabetPair signed_pair(MPoly s, MPoly t) { return {std::move(s), std::move(t), true}; }
  static AlphabetPair plain_pair(MPoly s, MPoly t) { return {std::move(s), std::move(t), false}; }

  friend bool operator==(const AlphabetPair&, const AlphabetPair&) = default;
};

/// S_{-1}, S_0, ..., S_{last} of the pair (index shifted by one).
inline std::vector<MPoly> s_pair_stream(int last, const AlphabetPair& ab) {
  std::vector<MPoly> out{MPoly{}};
  if (last < 0) return out;
  out.push_back(MPoly(1));
  const MPoly t = ab.is_signed ? ab.t : -ab.t;
  for (int n = 1; n <= last; ++n) {
    const std::size_t i = out.size();
    out.push_back(ab.s * out[i - 1] + t * out[i - 2]);
  }
  return out;
}

inline MPoly s_pair(int n, const AlphabetPair& ab) {
  if (n < 0) return {};
  return s_pair_stream(n, ab).back();
}

/// Coefficients of prod_{e in alphabet} (1 - e z) up to z^order.
inline TruncSeries signed_elementary_series(std::span<const MPoly> alphabet, std::size_t order) {
  TruncSeries acc = TruncSeries::one(order);
  for (const MPoly& e : alphabet) {
    for (std::size_t n = order; n >= 1; --n) acc[n] -= e * acc[n - 1];
  }
  return acc;
}

/// A polynomial f(e1, ...) whose partner f(e2, ...) is obtained by exchanging
/// e1 and e2.
class SymPolyFn {
 public:
  explicit SymPolyFn(MPoly body) : body_(std::move(body)) {}
  const MPoly& body() const noexcept { return body_; }
  SymPolyFn swapped() const { return SymPolyFn(swap_vars(body_, Var::e1, Var::e2)); }

 private:
  MPoly body_;
};

/// delta^k(f) = (e1^k f(e1) - e2^k f(e2)) / (e1 - e2). Always exact: the
/// numerator is antisymmetric in e1, e2.
inline MPoly delta_k(const SymPolyFn& f, unsigned k) {
  const MPoly lhs = pow(MPoly(Var::e1), k) * f.body();
  const MPoly rhs = pow(MPoly(Var::e2), k) * f.swapped().body();
  try {
    return divide_exact(lhs - rhs, MPoly(Var::e1) - MPoly(Var::e2));
  } catch (const inexact_division& e) {
    throw std::logic_error(std::string("antisymmetric numerator not divisible: ") + e.what());
  }
}

/// Divided difference (f(e1) - f(e2)) / (e1 - e2).
inline MPoly divided_difference(const SymPolyFn& f) { return delta_k(f, 0); }

// ---------------------------------------------------------------------------
// Identities over Z[a1, a2, e1, e2]:
//   sum_n S_{n+da}(a1+a2) S_{2n+de}(e1+e2) z^n = N(z) / prod (1 - a e^2 z).

enum class TheoremId { Sn_S2nm1, Sn_S2n, Sn_S2np1, Snm1_S2nm1, Sn_S2np2, Snm1_S2n, Sn_S2np3, Snm1_S2np1 };

inline constexpr std::array<TheoremId, 8> kAllTheorems{
    TheoremId::Sn_S2nm1, TheoremId::Sn_S2n, TheoremId::Sn_S2np1,          TheoremId::Snm1_S2nm1,
    TheoremId::Sn_S2np2, TheoremId::Snm1_S2n, TheoremId::Sn_S2np3, TheoremId::Snm1_S2np1};

inline std::string_view theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::Sn_S2nm1: return "Sn_S2nm1";
    case TheoremId::Sn_S2n: return "Sn_S2n";
    case TheoremId::Sn_S2np1: return "Sn_S2np1";
    case TheoremId::Snm1_S2nm1: return "Snm1_S2nm1";
    case TheoremId::Sn_S2np2: return "Sn_S2np2";
    case TheoremId::Snm1_S2n: return "Snm1_S2n";
    case TheoremId::Sn_S2np3: return "Sn_S2np3";
    case TheoremId::Snm1_S2np1: return "Snm1_S2np1";
  }
  throw std::invalid_argument("bad theorem id");
}

inline TheoremId parse_theorem(std::string_view name) {
  for (TheoremId id : kAllTheorems) {
    if (theorem_name(id) == name) return id;
  }
  throw std::invalid_argument("unknown theorem id '" + std::string(name) + "'");
}

struct IndexShift {
  int a;  // S_{n+a}(A)
  int e;  // S_{2n+e}(E)
};

inline IndexShift theorem_shift(TheoremId id) {
  switch (id) {
    case TheoremId::Sn_S2nm1: return {0, -1};
    case TheoremId::Sn_S2n: return {0, 0};
    case TheoremId::Sn_S2np1: return {0, 1};
    case TheoremId::Snm1_S2nm1: return {-1, -1};
    case TheoremId::Sn_S2np2: return {0, 2};
    case TheoremId::Snm1_S2n: return {-1, 0};
    case TheoremId::Sn_S2np3: return {0, 3};
    case TheoremId::Snm1_S2np1: return {-1, 1};
  }
  throw std::invalid_argument("bad theorem id");
}

/// Stated numerator, ascending in z, written in sA = a1+a2, tA = a1*a2,
/// sE = e1+e2, tE = e1*e2.
inline std::vector<MPoly> theorem_numerator(TheoremId id) {
  const MPoly sA = MPoly(Var::a1) + MPoly(Var::a2);
  const MPoly tA = MPoly(Var::a1) * MPoly(Var::a2);
  const MPoly sE = MPoly(Var::e1) + MPoly(Var::e2);
  const MPoly tE = MPoly(Var::e1) * MPoly(Var::e2);
  const MPoly sE2 = sE * sE;
  switch (id) {
    case TheoremId::Sn_S2nm1: return {0, sA * sE, -(tA * sE * (sE2 - 2 * tE))};
    case TheoremId::Sn_S2n: return {1, tE * sA, -(tE * tA * (sE2 - tE))};
    case TheoremId::Sn_S2np1: return {sE, 0, -(tA * tE * tE * sE)};
    case TheoremId::Snm1_S2nm1: return {0, sE, 0, -(tA * tE * tE * sE)};
    case TheoremId::Sn_S2np2: return {sE2 - tE, -(tE * tE * sA), -(tA * pow(tE, 3))};
    case TheoremId::Snm1_S2n: return {0, sE2 - tE, -(tE * tE * sA), -(tA * pow(tE, 3))};
    case TheoremId::Sn_S2np3: return {sE * (sE2 - 2 * tE), -(tE * tE * sA * sE)};
    case TheoremId::Snm1_S2np1: return {0, sE * (sE2 - 2 * tE), -(tE * tE * sA * sE)};
  }
  throw std::invalid_argument("bad theorem id");
}

/// (1 - a1 e1^2 z)(1 - a1 e2^2 z)(1 - a2 e1^2 z)(1 - a2 e2^2 z), ascending in z.
inline std::vector<MPoly> theorem_denominator() {
  const MPoly a1(Var::a1), a2(Var::a2), e1(Var::e1), e2(Var::e2);
  const std::array<MPoly, 4> letters{a1 * e1 * e1, a1 * e2 * e2, a2 * e1 * e1, a2 * e2 * e2};
  const TruncSeries prod = signed_elementary_series(letters, 4);
  return {prod.coeffs().begin(), prod.coeffs().end()};
}

inline RationalGF theorem_gf(TheoremId id) {
  return RationalGF(theorem_numerator(id), theorem_denominator());
}

/// Left-hand side coefficients n = 0..order, computed directly.
inline std::vector<MPoly> theorem_lhs(TheoremId id, std::size_t order) {
  const IndexShift sh = theorem_shift(id);
  const MPoly a1(Var::a1), a2(Var::a2), e1(Var::e1), e2(Var::e2);
  std::vector<MPoly> out;
  out.reserve(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    const int i = static_cast<int>(n);
    out.push_back(s_two(i + sh.a, a1, a2) * s_two(2 * i + sh.e, e1, e2));
  }
  return out;
}

inline constexpr std::size_t kMinCheckOrder = 4;

/// Checks `gf` against the theorem's left-hand side; used with the stated
/// right-hand side by theorem_check and with perturbed ones by mutation tests.
inline VerificationReport check_theorem_gf(TheoremId id, const RationalGF& gf, std::size_t order) {
  if (order < kMinCheckOrder) throw std::invalid_argument("verification order must be >= 4");
  const auto lhs = theorem_lhs(id, order);
  return compare_coefficients(std::string(theorem_name(id)), lhs, expand(gf, order));
}

inline VerificationReport theorem_check(TheoremId id, std::size_t order) {
  return check_theorem_gf(id, theorem_gf(id), order);
}

}  // namespace pqgf
