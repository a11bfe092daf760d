#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fdrctl {

/// A validated family of p-values, one per hypothesis.
///
/// Position in `values()` is the original hypothesis index. The ascending
/// rank order is computed once at construction with a stable sort, so tied
/// values keep their original relative order and every procedure sees the
/// same ranking.
class PValueVector {
 public:
  /// Throws Error{EmptyInput | NotFinite | OutOfRange}.
  explicit PValueVector(std::vector<double> raw);

  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t index) const noexcept { return values_[index]; }

  /// order()[r] is the original index of the (r+1)-th smallest p-value.
  std::span<const std::size_t> order() const noexcept { return order_; }

  /// p-value at 1-based rank.
  double ranked(std::size_t rank) const noexcept { return values_[order_[rank - 1]]; }

 private:
  std::vector<double> values_;
  std::vector<std::size_t> order_;
};

PValueVector make_pvalues(std::vector<double> raw);

/// A family-level target: an FWER level alpha or an FDR level q, strictly in (0, 1).
class SignificanceLevel {
 public:
  /// Throws Error{InvalidLevel}.
  explicit SignificanceLevel(double value);

  double value() const noexcept { return value_; }

 private:
  double value_;
};

}  // namespace fdrctl
