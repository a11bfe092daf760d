#pragma once

#include <array>
#include <cstdint>

namespace fdrctl {

/// Error-free running sum of nonnegative finite doubles.
///
/// Every addend is split into 32-bit limbs of a fixed-point register wide
/// enough to hold any double below 2^64 down to the smallest subnormal, so
/// the stored total is the exact real sum. Two sums over disjoint sets merge
/// to the same bits as one sum over their union, whatever the order or
/// grouping of the additions.
class ExactSum {
 public:
  /// Throws std::domain_error for negative, non-finite or >= 2^64 input.
  void add(double x);
  void merge(const ExactSum& other);

  /// The exact total rounded to double (faithful: within one ulp). Depends
  /// only on the exact total, never on how it was accumulated.
  double value() const;

  bool operator==(const ExactSum& other) const;

 private:
  // Limb i holds weight 2^(32 i + kMinExponent).
  static constexpr int kMinExponent = -1088;
  static constexpr int kLimbs = (64 - kMinExponent) / 32 + 2;

  void add_limb(int index, std::int64_t amount);
  void normalize();

  std::array<std::int64_t, kLimbs> limbs_{};
  std::uint32_t pending_ = 0;  // additions since the last carry propagation
};

}  // namespace fdrctl
