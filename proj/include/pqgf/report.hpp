#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pqgf/mpoly.hpp"
#include "pqgf/series.hpp"

namespace pqgf {

struct Mismatch {
  std::size_t index = 0;
  MPoly lhs;  // direct / oracle side
  MPoly rhs;  // closed-form expansion
};

/// Outcome of comparing a coefficient stream against a closed-form expansion.
struct VerificationReport {
  std::string id;
  std::size_t order = 0;
  std::optional<Mismatch> first_mismatch;
  /// For failing generating functions: the numerator the oracle stream
  /// actually requires over the stated denominator.
  std::optional<std::vector<MPoly>> suggested_numer;

  bool passed() const noexcept { return !first_mismatch.has_value(); }
};

/// Compares lhs[0..order] with rhs[0..order] exactly.
inline VerificationReport compare_coefficients(std::string id, std::span<const MPoly> lhs,
                                               const TruncSeries& rhs) {
  VerificationReport report{std::move(id), rhs.order(), std::nullopt, std::nullopt};
  for (std::size_t n = 0; n <= rhs.order(); ++n) {
    const MPoly& left = n < lhs.size() ? lhs[n] : MPoly{};
    if (left != rhs[n]) {
      report.first_mismatch = Mismatch{n, left, rhs[n]};
      break;
    }
  }
  return report;
}

}  // namespace pqgf
