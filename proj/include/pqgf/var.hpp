#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pqgf {

/// Closed universe of polynomial indeterminates. The enumeration order is the
/// variable order used by the canonical term ordering.
enum class Var : std::uint8_t { p, q, a1, a2, e1, e2, alpha, beta, gamma, k };

inline constexpr std::size_t kVarCount = 10;

inline constexpr std::array<std::string_view, kVarCount> kVarNames{
    "p", "q", "a1", "a2", "e1", "e2", "alpha", "beta", "gamma", "k"};

class unknown_symbol : public std::invalid_argument {
 public:
  explicit unknown_symbol(std::string_view symbol)
      : std::invalid_argument("unknown symbol '" + std::string(symbol) + "'"),
        symbol_(symbol) {}
  const std::string& symbol() const noexcept { return symbol_; }

 private:
  std::string symbol_;
};

constexpr std::size_t index_of(Var v) noexcept { return static_cast<std::size_t>(v); }

constexpr std::string_view name(Var v) noexcept { return kVarNames[index_of(v)]; }

inline Var parse_var(std::string_view symbol) {
  for (std::size_t i = 0; i < kVarCount; ++i) {
    if (kVarNames[i] == symbol) return static_cast<Var>(i);
  }
  throw unknown_symbol(symbol);
}

}  // namespace pqgf
