#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pqgf/mpoly.hpp"

namespace pqgf {

/// Formal power series in z truncated after z^order: exactly order+1 dense
/// MPoly coefficients.
class TruncSeries {
 public:
  explicit TruncSeries(std::size_t order) : coeffs_(order + 1) {}
  explicit TruncSeries(std::vector<MPoly> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
  }

  static TruncSeries one(std::size_t order) {
    TruncSeries s(order);
    s.coeffs_[0] = 1;
    return s;
  }

  /// Embeds a polynomial in z (given by ascending coefficients), truncated.
  static TruncSeries from_polynomial(std::span<const MPoly> poly, std::size_t order) {
    TruncSeries s(order);
    for (std::size_t i = 0; i < poly.size() && i <= order; ++i) s.coeffs_[i] = poly[i];
    return s;
  }

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const MPoly& operator[](std::size_t n) const { return coeffs_.at(n); }
  MPoly& operator[](std::size_t n) { return coeffs_.at(n); }
  std::span<const MPoly> coeffs() const noexcept { return coeffs_; }

  TruncSeries truncated(std::size_t order) const {
    if (order > this->order()) throw std::out_of_range("cannot extend a truncated series");
    return TruncSeries(std::vector<MPoly>(coeffs_.begin(), coeffs_.begin() + order + 1));
  }

  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

 private:
  std::vector<MPoly> coeffs_;
};

inline TruncSeries operator+(const TruncSeries& f, const TruncSeries& g) {
  TruncSeries r(std::min(f.order(), g.order()));
  for (std::size_t n = 0; n <= r.order(); ++n) r[n] = f[n] + g[n];
  return r;
}

inline TruncSeries operator-(const TruncSeries& f, const TruncSeries& g) {
  TruncSeries r(std::min(f.order(), g.order()));
  for (std::size_t n = 0; n <= r.order(); ++n) r[n] = f[n] - g[n];
  return r;
}

inline TruncSeries operator*(const MPoly& c, const TruncSeries& f) {
  TruncSeries r(f.order());
  if (c.is_zero()) return r;
  for (std::size_t n = 0; n <= r.order(); ++n) r[n] = c * f[n];
  return r;
}

/// Cauchy product truncated to the smaller order. Zero coefficients are
/// skipped, so multiplying by a short polynomial costs O(N * nnz).
inline TruncSeries operator*(const TruncSeries& f, const TruncSeries& g) {
  const std::size_t order = std::min(f.order(), g.order());
  TruncSeries r(order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (f[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= order; ++j) {
      if (g[j].is_zero()) continue;
      r[i + j] += f[i] * g[j];
    }
  }
  return r;
}

class not_invertible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Series inverse; the constant term must be the polynomial 1 or -1.
inline TruncSeries reciprocal(const TruncSeries& f) {
  const MPoly& c0 = f[0];
  if (!(c0 == MPoly(1) || c0 == MPoly(-1))) {
    throw not_invertible("constant term " + to_string(c0) + " is not a unit");
  }
  std::vector<std::size_t> support;
  for (std::size_t j = 1; j <= f.order(); ++j) {
    if (!f[j].is_zero()) support.push_back(j);
  }
  TruncSeries g(f.order());
  g[0] = c0;  // 1/c0 == c0 for units of Z
  for (std::size_t n = 1; n <= f.order(); ++n) {
    MPoly acc;
    for (std::size_t j : support) {
      if (j > n) break;
      if (!g[n - j].is_zero()) acc += f[j] * g[n - j];
    }
    g[n] = -(c0 * acc);
  }
  return g;
}

/// Closed-form generating function numer(z)/denom(z), polynomials in z with
/// MPoly coefficients listed by ascending power. denom(0) must be 1.
class RationalGF {
 public:
  /// The zero series 0/1.
  RationalGF() : denom_{MPoly(1)} {}
  RationalGF(std::vector<MPoly> numer, std::vector<MPoly> denom)
      : numer_(trimmed(std::move(numer))), denom_(trimmed(std::move(denom))) {
    if (denom_.empty() || denom_.front() != MPoly(1)) {
      throw std::invalid_argument("generating function denominator must have constant term 1");
    }
  }

  const std::vector<MPoly>& numer() const noexcept { return numer_; }
  const std::vector<MPoly>& denom() const noexcept { return denom_; }

  friend bool operator==(const RationalGF&, const RationalGF&) = default;

 private:
  static std::vector<MPoly> trimmed(std::vector<MPoly> v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
    return v;
  }

  std::vector<MPoly> numer_;
  std::vector<MPoly> denom_;
};

/// Coefficients z^0..z^order of numer/denom.
inline TruncSeries expand(const RationalGF& gf, std::size_t order) {
  const TruncSeries inv = reciprocal(TruncSeries::from_polynomial(gf.denom(), order));
  return TruncSeries::from_polynomial(gf.numer(), order) * inv;
}

/// Applies `fn` to every coefficient of a z-polynomial.
template <typename Fn>
std::vector<MPoly> map_coeffs(const std::vector<MPoly>& poly, Fn&& fn) {
  std::vector<MPoly> out;
  out.reserve(poly.size());
  for (const auto& c : poly) out.push_back(fn(c));
  return out;
}

inline RationalGF substitute(const RationalGF& gf, const std::map<Var, MPoly>& values) {
  auto sub = [&](const MPoly& c) { return substitute(c, values); };
  return RationalGF(map_coeffs(gf.numer(), sub), map_coeffs(gf.denom(), sub));
}

// ---------------------------------------------------------------------------
// Rendering of polynomials in z: "1 - (p^2 + 2*q)*z + q^2*z^2".

namespace detail {

inline std::string z_power(std::size_t n) {
  if (n == 0) return {};
  if (n == 1) return "z";
  return "z^" + std::to_string(n);
}

}  // namespace detail

inline std::string z_poly_string(std::span<const MPoly> coeffs) {
  std::string s;
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    const MPoly& c = coeffs[n];
    if (c.is_zero()) continue;
    const bool first = s.empty();
    if (n == 0) {
      s += to_string(c);
      continue;
    }
    // Pull the sign of the leading term out front.
    const bool negative = c.leading_term().coeff < 0;
    const MPoly mag = negative ? -c : c;
    if (first) {
      if (negative) s += '-';
    } else {
      s += negative ? " - " : " + ";
    }
    if (mag.size() > 1) {
      s += '(' + to_string(mag) + ")*" + detail::z_power(n);
    } else {
      const auto& t = mag.terms().front();
      if (t.coeff == 1 && t.monomial.is_one()) {
        s += detail::z_power(n);
      } else {
        s += unsigned_term_string(t.monomial, t.coeff) + '*' + detail::z_power(n);
      }
    }
  }
  return s.empty() ? "0" : s;
}

inline std::string to_string(const TruncSeries& f) { return z_poly_string(f.coeffs()); }

/// "p*z / (1 - (p^2 + 2*q)*z + q^2*z^2)" or "(1 + 2*z)/(1 - 5*z + 4*z^2)":
/// a bare single-term numerator is set off by spaces, a parenthesized one is not.
inline std::string to_string(const RationalGF& gf) {
  auto nonzero = [](const std::vector<MPoly>& v) {
    return std::count_if(v.begin(), v.end(), [](const MPoly& c) { return !c.is_zero(); });
  };
  std::string num = z_poly_string(gf.numer());
  const bool bare = nonzero(gf.numer()) == 0 ||
                    (nonzero(gf.numer()) == 1 &&
                     (gf.numer().size() > 1 || gf.numer().front().size() == 1));
  std::string den = z_poly_string(gf.denom());
  if (nonzero(gf.denom()) > 1) den = '(' + den + ')';
  if (bare) return num + " / " + den;
  return '(' + num + ")/" + den;
}

}  // namespace pqgf
