#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>

#include "pqgf/var.hpp"

namespace pqgf {

/// Power product over the fixed variable universe, stored as a fixed-width
/// exponent record. Ordered graded-lexicographically: total degree first, then
/// exponents compared in variable order (p before q before a1 ...).
class Monomial {
 public:
  using exponent_type = std::uint16_t;

  Monomial() = default;

  static Monomial of(Var v, unsigned exponent = 1) {
    Monomial m;
    m.exps_[index_of(v)] = checked(exponent);
    return m;
  }

  exponent_type operator[](Var v) const noexcept { return exps_[index_of(v)]; }
  exponent_type exponent(std::size_t i) const noexcept { return exps_[i]; }

  unsigned degree() const noexcept {
    unsigned d = 0;
    for (auto e : exps_) d += e;
    return d;
  }

  bool is_one() const noexcept { return degree() == 0; }

  bool divides(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
  }

  Monomial& operator*=(const Monomial& rhs) {
    for (std::size_t i = 0; i < kVarCount; ++i) {
      exps_[i] = checked(unsigned{exps_[i]} + rhs.exps_[i]);
    }
    return *this;
  }
  friend Monomial operator*(Monomial lhs, const Monomial& rhs) { return lhs *= rhs; }

  /// Requires `rhs.divides(*this)`.
  friend Monomial operator/(Monomial lhs, const Monomial& rhs) {
    if (!rhs.divides(lhs)) throw std::domain_error("monomial does not divide");
    for (std::size_t i = 0; i < kVarCount; ++i) lhs.exps_[i] -= rhs.exps_[i];
    return lhs;
  }

  Monomial pow(unsigned n) const {
    Monomial m;
    for (std::size_t i = 0; i < kVarCount; ++i) m.exps_[i] = checked(unsigned{exps_[i]} * n);
    return m;
  }

  Monomial swapped(Var a, Var b) const noexcept {
    Monomial m = *this;
    std::swap(m.exps_[index_of(a)], m.exps_[index_of(b)]);
    return m;
  }

  Monomial without(Var v) const noexcept {
    Monomial m = *this;
    m.exps_[index_of(v)] = 0;
    return m;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return a.exps_ <=> b.exps_;
  }

  std::size_t hash() const noexcept {
    std::size_t h = 0;
    for (auto e : exps_) h = h * 1000003u + e;
    return h;
  }

 private:
  static exponent_type checked(unsigned e) {
    if (e > std::numeric_limits<exponent_type>::max()) {
      throw std::overflow_error("monomial exponent overflow");
    }
    return static_cast<exponent_type>(e);
  }

  std::array<exponent_type, kVarCount> exps_{};
};

}  // namespace pqgf

template <>
struct std::hash<pqgf::Monomial> {
  std::size_t operator()(const pqgf::Monomial& m) const noexcept { return m.hash(); }
};
