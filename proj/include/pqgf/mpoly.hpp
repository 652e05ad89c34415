#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pqgf/monomial.hpp"
#include "pqgf/var.hpp"

namespace pqgf {

using BigInt = boost::multiprecision::cpp_int;

/// Sparse polynomial in Z[p, q, a1, a2, e1, e2, alpha, beta, gamma, k].
///
/// Terms are kept in canonical form: strictly decreasing graded-lex order, no
/// zero coefficients. Two polynomials are equal iff their term vectors are.
class MPoly {
 public:
  struct Term {
    Monomial monomial;
    BigInt coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  MPoly() = default;
  MPoly(int c) : MPoly(BigInt(c)) {}  // NOLINT(google-explicit-constructor)
  MPoly(const BigInt& c) {            // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.push_back({Monomial{}, c});
  }
  MPoly(Var v) { terms_.push_back({Monomial::of(v), BigInt(1)}); }  // NOLINT

  static MPoly constant(const BigInt& c) { return MPoly(c); }
  static MPoly variable(Var v) { return MPoly(v); }
  static MPoly variable(std::string_view symbol) { return MPoly(parse_var(symbol)); }
  static MPoly monomial(const Monomial& m, const BigInt& c) {
    MPoly f;
    if (c != 0) f.terms_.push_back({m, c});
    return f;
  }

  /// Builds a canonical polynomial from arbitrary (possibly repeated) terms.
  static MPoly from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.monomial > b.monomial; });
    MPoly f;
    for (auto& t : terms) {
      if (!f.terms_.empty() && f.terms_.back().monomial == t.monomial) {
        f.terms_.back().coeff += t.coeff;
      } else {
        if (!f.terms_.empty() && f.terms_.back().coeff == 0) f.terms_.pop_back();
        f.terms_.push_back(std::move(t));
      }
    }
    if (!f.terms_.empty() && f.terms_.back().coeff == 0) f.terms_.pop_back();
    return f;
  }

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
  }
  /// Coefficient of the empty monomial.
  BigInt constant_term() const {
    if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coeff;
    return 0;
  }
  /// Requires a nonzero polynomial.
  const Term& leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    return terms_.front();
  }
  unsigned total_degree() const noexcept {
    return terms_.empty() ? 0 : terms_.front().monomial.degree();
  }
  bool contains(Var v) const noexcept {
    return std::any_of(terms_.begin(), terms_.end(),
                       [v](const Term& t) { return t.monomial[v] != 0; });
  }

  friend bool operator==(const MPoly&, const MPoly&) = default;

  MPoly operator-() const {
    MPoly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  friend MPoly operator+(const MPoly& f, const MPoly& g) { return merge(f, g, false); }
  friend MPoly operator-(const MPoly& f, const MPoly& g) { return merge(f, g, true); }

  friend MPoly operator*(const MPoly& f, const MPoly& g) {
    if (f.is_zero() || g.is_zero()) return {};
    if (f.is_constant()) return scaled(g, f.terms_.front().coeff);
    if (g.is_constant()) return scaled(f, g.terms_.front().coeff);
    std::unordered_map<Monomial, BigInt> acc;
    acc.reserve(f.size() * g.size());
    for (const auto& a : f.terms_) {
      for (const auto& b : g.terms_) acc[a.monomial * b.monomial] += a.coeff * b.coeff;
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc) {
      if (c != 0) out.push_back({m, std::move(c)});
    }
    std::sort(out.begin(), out.end(),
              [](const Term& a, const Term& b) { return a.monomial > b.monomial; });
    MPoly r;
    r.terms_ = std::move(out);
    return r;
  }

  MPoly& operator+=(const MPoly& g) { return *this = *this + g; }
  MPoly& operator-=(const MPoly& g) { return *this = *this - g; }
  MPoly& operator*=(const MPoly& g) { return *this = *this * g; }

 private:
  static MPoly scaled(const MPoly& f, const BigInt& c) {
    MPoly r = f;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
  }

  static MPoly merge(const MPoly& f, const MPoly& g, bool negate_g) {
    MPoly r;
    r.terms_.reserve(f.size() + g.size());
    auto i = f.terms_.begin();
    auto j = g.terms_.begin();
    while (i != f.terms_.end() || j != g.terms_.end()) {
      if (j == g.terms_.end() || (i != f.terms_.end() && i->monomial > j->monomial)) {
        r.terms_.push_back(*i++);
      } else if (i == f.terms_.end() || j->monomial > i->monomial) {
        r.terms_.push_back({j->monomial, negate_g ? BigInt(-j->coeff) : j->coeff});
        ++j;
      } else {
        BigInt c = negate_g ? BigInt(i->coeff - j->coeff) : BigInt(i->coeff + j->coeff);
        if (c != 0) r.terms_.push_back({i->monomial, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::vector<Term> terms_;
};

inline MPoly pow(const MPoly& f, unsigned n) {
  MPoly result = 1;
  MPoly base = f;
  while (n != 0) {
    if (n & 1u) result *= base;
    n >>= 1;
    if (n != 0) base *= base;
  }
  return result;
}

class unbound_variable : public std::invalid_argument {
 public:
  explicit unbound_variable(Var v)
      : std::invalid_argument("no binding for variable '" + std::string(name(v)) + "'"),
        var_(v) {}
  Var var() const noexcept { return var_; }

 private:
  Var var_;
};

using Bindings = std::map<Var, BigInt>;

/// Evaluates `f` at integer values. Every variable occurring in `f` must be bound.
inline BigInt eval(const MPoly& f, const Bindings& bindings) {
  BigInt total = 0;
  for (const auto& t : f.terms()) {
    BigInt value = t.coeff;
    for (std::size_t i = 0; i < kVarCount; ++i) {
      const unsigned e = t.monomial.exponent(i);
      if (e == 0) continue;
      auto it = bindings.find(static_cast<Var>(i));
      if (it == bindings.end()) throw unbound_variable(static_cast<Var>(i));
      value *= boost::multiprecision::pow(it->second, e);
    }
    total += value;
  }
  return total;
}

/// Replaces every occurrence of `v` by `value`.
inline MPoly substitute(const MPoly& f, Var v, const MPoly& value) {
  if (!f.contains(v)) return f;
  std::vector<MPoly> powers{MPoly(1)};
  MPoly result;
  for (const auto& t : f.terms()) {
    const unsigned e = t.monomial[v];
    while (powers.size() <= e) powers.push_back(powers.back() * value);
    result += MPoly::monomial(t.monomial.without(v), t.coeff) * powers[e];
  }
  return result;
}

/// Simultaneous substitution: values may mention the variables they replace.
inline MPoly substitute(const MPoly& f, const std::map<Var, MPoly>& values) {
  MPoly result;
  for (const auto& t : f.terms()) {
    MPoly term = MPoly::monomial(Monomial{}, t.coeff);
    Monomial rest = t.monomial;
    for (const auto& [v, value] : values) {
      if (const unsigned e = t.monomial[v]) {
        term *= pow(value, e);
        rest = rest.without(v);
      }
    }
    result += term * MPoly::monomial(rest, 1);
  }
  return result;
}

/// Exchanges the exponents of `a` and `b` in every term.
inline MPoly swap_vars(const MPoly& f, Var a, Var b) {
  std::vector<MPoly::Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) terms.push_back({t.monomial.swapped(a, b), t.coeff});
  return MPoly::from_terms(std::move(terms));
}

// ---------------------------------------------------------------------------
// Text rendering: "2*p^2*q - q + 1". Terms in canonical order.

inline std::string monomial_string(const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < kVarCount; ++i) {
    const unsigned e = m.exponent(i);
    if (e == 0) continue;
    if (!s.empty()) s += '*';
    s += kVarNames[i];
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s;
}

/// Renders a single term without its sign.
inline std::string unsigned_term_string(const Monomial& m, const BigInt& coeff) {
  const BigInt mag = abs(coeff);
  if (m.is_one()) return mag.str();
  if (mag == 1) return monomial_string(m);
  return mag.str() + '*' + monomial_string(m);
}

inline std::string to_string(const MPoly& f) {
  if (f.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : f.terms()) {
    if (first) {
      if (t.coeff < 0) s += '-';
    } else {
      s += t.coeff < 0 ? " - " : " + ";
    }
    s += unsigned_term_string(t.monomial, t.coeff);
    first = false;
  }
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const MPoly& f) { return os << to_string(f); }

class parse_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses sums of products of integers and variables with optional `^n`
/// exponents, e.g. "2*p^2*q - q + 1" or "2k+4". Parentheses are not accepted.
inline MPoly parse_mpoly(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) -> void {
    throw parse_error("cannot parse polynomial '" + std::string(text) + "': " + what +
                      " at offset " + std::to_string(pos));
  };
  auto read_digits = [&]() -> std::string {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return std::string(text.substr(start, pos - start));
  };

  std::vector<MPoly::Term> terms;
  skip_ws();
  if (pos == text.size()) fail("empty input");
  bool first = true;
  while (true) {
    skip_ws();
    if (pos == text.size()) break;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;

    BigInt coeff = sign;
    Monomial mono;
    bool need_factor = true;
    while (need_factor) {
      skip_ws();
      if (pos == text.size()) fail("expected factor");
      const char c = text[pos];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= BigInt(read_digits());
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        const std::size_t start = pos;
        while (pos < text.size() && std::isalnum(static_cast<unsigned char>(text[pos]))) ++pos;
        const Var v = parse_var(text.substr(start, pos - start));
        unsigned e = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          skip_ws();
          const std::string digits = read_digits();
          if (digits.empty()) fail("expected exponent");
          e = static_cast<unsigned>(std::stoul(digits));
        }
        mono *= Monomial::of(v, e);
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      skip_ws();
      need_factor = false;
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        need_factor = true;
      } else if (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) {
        need_factor = true;  // implicit product, as in "2k"
      }
    }
    terms.push_back({mono, std::move(coeff)});
  }
  return MPoly::from_terms(std::move(terms));
}

// ---------------------------------------------------------------------------
// Exact division.

class inexact_division : public std::domain_error {
 public:
  explicit inexact_division(MPoly remainder)
      : std::domain_error("polynomial division is not exact; remainder " + to_string(remainder)),
        remainder_(std::move(remainder)) {}
  const MPoly& remainder() const noexcept { return remainder_; }

 private:
  MPoly remainder_;
};

/// Returns h with g*h == f. Multivariate long division against the leading
/// term of g; throws inexact_division carrying the stuck remainder otherwise.
inline MPoly divide_exact(const MPoly& f, const MPoly& g) {
  if (g.is_zero()) throw std::domain_error("division by zero polynomial");
  const auto& lead = g.leading_term();
  MPoly quotient;
  MPoly rest = f;
  while (!rest.is_zero()) {
    const auto& top = rest.leading_term();
    if (!lead.monomial.divides(top.monomial)) throw inexact_division(rest);
    BigInt q;
    BigInt r;
    boost::multiprecision::divide_qr(top.coeff, lead.coeff, q, r);
    if (r != 0) throw inexact_division(rest);
    const MPoly step = MPoly::monomial(top.monomial / lead.monomial, q);
    quotient += step;
    rest -= step * g;
  }
  return quotient;
}

}  // namespace pqgf
