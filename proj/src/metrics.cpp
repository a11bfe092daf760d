#include "fdrctl/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "fdrctl/error.hpp"

namespace fdrctl {

TruthLabels::TruthLabels(std::vector<bool> is_true_null) : is_true_null_(std::move(is_true_null)) {
  if (is_true_null_.empty()) {
    throw Error(Errc::EmptyInput, "truth labels are empty");
  }
  m0_ = static_cast<std::size_t>(std::count(is_true_null_.begin(), is_true_null_.end(), true));
}

ConfusionCounts tabulate_confusion(const RejectionSet& rejections, const TruthLabels& truth) {
  if (rejections.size() != truth.m()) {
    throw Error(Errc::LengthMismatch, "rejection set and truth labels cover different families");
  }
  ConfusionCounts c;
  c.m = truth.m();
  c.m0 = truth.m0();
  for (std::size_t i = 0; i < c.m; ++i) {
    const bool rejected = rejections.rejected[i];
    if (truth.is_true_null(i)) {
      ++(rejected ? c.V : c.U);
    } else {
      ++(rejected ? c.S : c.T);
    }
  }
  c.R = c.V + c.S;
  return c;
}

double false_discovery_proportion(const ConfusionCounts& c) noexcept {
  if (c.R == 0) {
    return 0.0;
  }
  return static_cast<double>(c.V) / static_cast<double>(c.R);
}

ReplicateIndicators per_replicate_indicators(const ConfusionCounts& c) noexcept {
  ReplicateIndicators r;
  r.q = false_discovery_proportion(c);
  r.any_false_alarm = c.V > 0 ? 1.0 : 0.0;
  r.v_over_m = static_cast<double>(c.V) / static_cast<double>(c.m);
  if (c.m > c.m0) {
    r.detect_rate = static_cast<double>(c.S) / static_cast<double>(c.m - c.m0);
  }
  return r;
}

void MomentAccumulator::add(double x) {
  sum_.add(x);
  sum_sq_.add(x * x);
  ++n_;
}

void MomentAccumulator::merge(const MomentAccumulator& other) {
  sum_.merge(other.sum_);
  sum_sq_.merge(other.sum_sq_);
  n_ += other.n_;
}

double MomentAccumulator::mean() const {
  return n_ == 0 ? 0.0 : sum_.value() / static_cast<double>(n_);
}

double MomentAccumulator::standard_error() const {
  if (n_ < 2) {
    throw Error(Errc::TooFewReplicates, "standard error needs at least two replicates");
  }
  const double n = static_cast<double>(n_);
  const double s1 = sum_.value();
  const double s2 = sum_sq_.value();
  const double variance = std::max(0.0, (s2 - s1 * s1 / n) / (n - 1.0));
  return std::sqrt(variance) / std::sqrt(n);
}

void RateAccumulator::add(const ReplicateIndicators& r) {
  q_.add(r.q);
  alarm_.add(r.any_false_alarm);
  v_over_m_.add(r.v_over_m);
  if (r.detect_rate) {
    detect_.add(*r.detect_rate);
  }
}

void RateAccumulator::merge(const RateAccumulator& other) {
  q_.merge(other.q_);
  alarm_.merge(other.alarm_);
  v_over_m_.merge(other.v_over_m_);
  detect_.merge(other.detect_);
}

RateEstimates RateAccumulator::estimates() const {
  if (q_.count() < 2) {
    throw Error(Errc::TooFewReplicates, "rate estimates need at least two replicates");
  }
  RateEstimates e;
  e.n_replicates = q_.count();
  e.fdr = q_.mean();
  e.fwer = alarm_.mean();
  e.pcer = v_over_m_.mean();
  e.se_fdr = q_.standard_error();
  e.se_fwer = alarm_.standard_error();
  e.se_pcer = v_over_m_.standard_error();
  e.n_power_replicates = detect_.count();
  if (detect_.count() > 0) {
    e.power = detect_.mean();
    e.se_power = detect_.count() >= 2 ? detect_.standard_error() : 0.0;
  }
  return e;
}

RateEstimates aggregate_rates(std::span<const ReplicateIndicators> indicators) {
  RateAccumulator acc;
  for (const auto& r : indicators) {
    acc.add(r);
  }
  return acc.estimates();
}

}  // namespace fdrctl
