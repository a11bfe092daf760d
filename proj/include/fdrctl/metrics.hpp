#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fdrctl/exact_sum.hpp"
#include "fdrctl/procedures.hpp"

namespace fdrctl {

/// Ground truth for one family: which hypotheses are true nulls.
class TruthLabels {
 public:
  /// Throws Error{EmptyInput}.
  explicit TruthLabels(std::vector<bool> is_true_null);

  std::size_t m() const noexcept { return is_true_null_.size(); }
  std::size_t m0() const noexcept { return m0_; }
  bool is_true_null(std::size_t index) const { return is_true_null_[index]; }
  const std::vector<bool>& flags() const noexcept { return is_true_null_; }

 private:
  std::vector<bool> is_true_null_;
  std::size_t m0_ = 0;
};

/// Outcome table of one family of tests:
///
///                      retained   rejected
///   true null              U          V       m0
///   false null             T          S       m - m0
///                                     R
struct ConfusionCounts {
  std::size_t m = 0;
  std::size_t m0 = 0;
  std::size_t U = 0;
  std::size_t V = 0;
  std::size_t S = 0;
  std::size_t T = 0;
  std::size_t R = 0;

  bool consistent() const noexcept {
    return U + V == m0 && S + T == m - m0 && R == V + S && m0 <= m;
  }
};

/// Throws Error{LengthMismatch}.
ConfusionCounts tabulate_confusion(const RejectionSet& rejections, const TruthLabels& truth);

/// Q = V / R, and 0 when nothing is rejected.
double false_discovery_proportion(const ConfusionCounts& c) noexcept;

/// Per-replicate statistics whose expectations are FDR, FWER, PCER and power.
struct ReplicateIndicators {
  double q = 0.0;
  double any_false_alarm = 0.0;
  double v_over_m = 0.0;
  std::optional<double> detect_rate;  // S / (m - m0); absent under the complete null
};

ReplicateIndicators per_replicate_indicators(const ConfusionCounts& c) noexcept;

struct RateEstimates {
  double fdr = 0.0;
  double fwer = 0.0;
  double pcer = 0.0;
  std::optional<double> power;
  double se_fdr = 0.0;
  double se_fwer = 0.0;
  double se_pcer = 0.0;
  std::optional<double> se_power;
  std::uint64_t n_replicates = 0;
  std::uint64_t n_power_replicates = 0;
};

/// Running first and second moments of one indicator stream. Sums are exact,
/// so merging partial moments is associative and commutative bit for bit.
class MomentAccumulator {
 public:
  void add(double x);
  void merge(const MomentAccumulator& other);

  std::uint64_t count() const noexcept { return n_; }
  double mean() const;
  /// Sample standard deviation divided by sqrt(n); needs n >= 2.
  double standard_error() const;

  bool operator==(const MomentAccumulator& other) const = default;

 private:
  ExactSum sum_;
  ExactSum sum_sq_;
  std::uint64_t n_ = 0;
};

/// Mergeable accumulator over replicate indicators.
class RateAccumulator {
 public:
  void add(const ReplicateIndicators& r);
  void merge(const RateAccumulator& other);

  std::uint64_t replicates() const noexcept { return q_.count(); }

  /// Throws Error{TooFewReplicates} below two replicates.
  RateEstimates estimates() const;

  bool operator==(const RateAccumulator& other) const = default;

 private:
  MomentAccumulator q_;
  MomentAccumulator alarm_;
  MomentAccumulator v_over_m_;
  MomentAccumulator detect_;
};

/// Throws Error{TooFewReplicates}.
RateEstimates aggregate_rates(std::span<const ReplicateIndicators> indicators);

}  // namespace fdrctl
