#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "fdrctl/metrics.hpp"
#include "fdrctl/procedures.hpp"
#include "fdrctl/pvalues.hpp"

namespace fdrctl {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// Normal-means study: m0 statistics ~ N(0, 1), m - m0 statistics ~ N(effect, 1),
/// all independent, two-sided p-values.
struct SimConfig {
  std::size_t m = 16;
  std::size_t m0 = 8;
  double effect = 3.0;
  double level = 0.05;
  std::uint64_t n_replicates = 20000;
  std::uint64_t seed = kDefaultSeed;
  std::vector<Procedure> procedures{kAllProcedures.begin(), kAllProcedures.end()};
};

/// Throws Error{InvalidConfig | InvalidLevel | TooFewReplicates}.
void validate(const SimConfig& config);

struct Replicate {
  PValueVector pvalues;
  TruthLabels truth;
};

/// Draws replicate `replicate_index` of the study. The result is a pure
/// function of (seed, replicate_index, m, m0, effect).
Replicate generate_replicate(const SimConfig& config, std::uint64_t replicate_index);

/// Partial aggregate over some subset of replicates, one RateAccumulator per
/// configured procedure. Merging partials is exact, so any partition of the
/// replicate range reproduces the sequential result bit for bit.
class StudyAccumulator {
 public:
  explicit StudyAccumulator(std::size_t n_procedures = 0) : rates_(n_procedures) {}

  void add_replicate(const SimConfig& config, std::uint64_t replicate_index);
  void merge(const StudyAccumulator& other);

  std::span<const RateAccumulator> rates() const noexcept { return rates_; }
  bool operator==(const StudyAccumulator& other) const = default;

 private:
  std::vector<RateAccumulator> rates_;
};

/// Serially accumulates replicates [first, last).
StudyAccumulator accumulate_replicates(const SimConfig& config, std::uint64_t first,
                                       std::uint64_t last);

struct ProcedureRates {
  Procedure procedure{};
  RateEstimates rates;
};

struct StudyResult {
  SimConfig config;
  std::vector<ProcedureRates> rates;  // in config.procedures order
  std::uint64_t total_replicates = 0;

  /// Throws Error{UnknownMethod} when the procedure was not part of the study.
  const RateEstimates& at(Procedure procedure) const;
};

StudyResult finalize(const SimConfig& config, const StudyAccumulator& accumulator);

/// Reference implementation: one thread, replicates in index order.
StudyResult run_study_serial(const SimConfig& config);

/// OpenMP over replicates. `threads` <= 0 lets the runtime decide.
StudyResult run_study(const SimConfig& config, int threads = 0);

enum class SweepAxis { M, M0Fraction, Level };

std::string_view to_string(SweepAxis axis) noexcept;

/// Accepts m, m0_fraction, level. Throws Error{InvalidAxis}.
SweepAxis parse_axis(std::string_view name);

struct SweepPoint {
  double value = 0.0;
  StudyResult result;
};

struct SweepResult {
  SweepAxis axis{};
  std::vector<SweepPoint> points;
};

/// The configuration run at one sweep point. Sweeping m keeps the base null
/// fraction m0/m (rounded to the nearest count); sweeping m0_fraction sets
/// m0 = round(fraction * m). Each point gets its own seed derived from the
/// base seed and the point index.
SimConfig sweep_point_config(const SimConfig& base, SweepAxis axis, double value,
                             std::size_t point_index);

/// Throws Error{InvalidConfig} for empty or non-increasing values; per-point
/// validation errors name the offending value.
SweepResult sweep(const SimConfig& base, SweepAxis axis, std::span<const double> values,
                  int threads = 0);

}  // namespace fdrctl
