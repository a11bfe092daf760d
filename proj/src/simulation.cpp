#include "fdrctl/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fdrctl/error.hpp"
#include "fdrctl/normal.hpp"
#include "fdrctl/philox.hpp"

namespace fdrctl {

namespace {

// Second counter word separates independent streams under the same key.
constexpr std::uint32_t kStatisticStream = 0;
constexpr std::uint32_t kShuffleStream = 1;
constexpr std::uint32_t kSeedStream = 2;

Philox4x32::Counter counter(std::uint64_t index, std::uint32_t stream, std::uint64_t replicate) {
  return {static_cast<std::uint32_t>(index), stream, static_cast<std::uint32_t>(replicate),
          static_cast<std::uint32_t>(replicate >> 32)};
}

std::string format_value(double v) {
  std::string s = std::to_string(v);
  s.erase(s.find_last_not_of('0') + 1);
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

}  // namespace

void validate(const SimConfig& config) {
  if (config.m < 1 || config.m > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(Errc::InvalidConfig, "m must be between 1 and 2^32 - 1");
  }
  if (config.m0 > config.m) {
    throw Error(Errc::InvalidConfig,
                "m0 (" + std::to_string(config.m0) + ") exceeds m (" + std::to_string(config.m) + ")");
  }
  if (!std::isfinite(config.effect) || config.effect < 0.0) {
    throw Error(Errc::InvalidConfig, "effect must be a finite nonnegative number");
  }
  (void)SignificanceLevel(config.level);
  if (config.n_replicates < 2) {
    throw Error(Errc::TooFewReplicates, "a study needs at least two replicates");
  }
  if (config.procedures.empty()) {
    throw Error(Errc::InvalidConfig, "no procedures requested");
  }
  for (std::size_t i = 0; i < config.procedures.size(); ++i) {
    for (std::size_t j = i + 1; j < config.procedures.size(); ++j) {
      if (config.procedures[i] == config.procedures[j]) {
        throw Error(Errc::InvalidConfig,
                    "procedure '" + std::string(to_string(config.procedures[i])) + "' listed twice");
      }
    }
  }
}

Replicate generate_replicate(const SimConfig& config, std::uint64_t replicate_index) {
  const std::size_t m = config.m;
  const Philox4x32 rng(config.seed);

  // First m0 positions are nulls, then a Fisher-Yates shuffle.
  std::vector<bool> is_null(m, false);
  std::fill_n(is_null.begin(), config.m0, true);
  for (std::size_t i = m; i-- > 1;) {
    const auto bits = rng(counter(i, kShuffleStream, replicate_index));
    const std::uint64_t word = std::uint64_t{bits[0]} << 32 | bits[1];
    const auto j = static_cast<std::size_t>((static_cast<unsigned __int128>(word) * (i + 1)) >> 64);
    const bool tmp = is_null[i];
    is_null[i] = is_null[j];
    is_null[j] = tmp;
  }

  std::vector<double> p(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto bits = rng(counter(i, kStatisticStream, replicate_index));
    const double u1 = uniform_open(bits[0], bits[1]);
    const double u2 = uniform_open(bits[2], bits[3]);
    double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    if (!is_null[i]) {
      z += config.effect;
    }
    p[i] = normal::two_sided_pvalue(z);
  }
  return Replicate{PValueVector(std::move(p)), TruthLabels(std::move(is_null))};
}

void StudyAccumulator::add_replicate(const SimConfig& config, std::uint64_t replicate_index) {
  const Replicate rep = generate_replicate(config, replicate_index);
  const SignificanceLevel level(config.level);
  for (std::size_t k = 0; k < config.procedures.size(); ++k) {
    const RejectionSet rejected = reject(rep.pvalues, config.procedures[k], level);
    rates_[k].add(per_replicate_indicators(tabulate_confusion(rejected, rep.truth)));
  }
}

void StudyAccumulator::merge(const StudyAccumulator& other) {
  if (rates_.size() != other.rates_.size()) {
    throw Error(Errc::LengthMismatch, "cannot merge accumulators over different procedure lists");
  }
  for (std::size_t k = 0; k < rates_.size(); ++k) {
    rates_[k].merge(other.rates_[k]);
  }
}

StudyAccumulator accumulate_replicates(const SimConfig& config, std::uint64_t first,
                                       std::uint64_t last) {
  StudyAccumulator acc(config.procedures.size());
  for (std::uint64_t r = first; r < last; ++r) {
    acc.add_replicate(config, r);
  }
  return acc;
}

const RateEstimates& StudyResult::at(Procedure procedure) const {
  for (const auto& entry : rates) {
    if (entry.procedure == procedure) {
      return entry.rates;
    }
  }
  throw Error(Errc::UnknownMethod,
              "procedure '" + std::string(to_string(procedure)) + "' not part of this study");
}

StudyResult finalize(const SimConfig& config, const StudyAccumulator& accumulator) {
  StudyResult result;
  result.config = config;
  const auto rates = accumulator.rates();
  for (std::size_t k = 0; k < config.procedures.size(); ++k) {
    result.rates.push_back({config.procedures[k], rates[k].estimates()});
  }
  result.total_replicates = rates.empty() ? 0 : rates.front().replicates();
  return result;
}

StudyResult run_study_serial(const SimConfig& config) {
  validate(config);
  return finalize(config, accumulate_replicates(config, 0, config.n_replicates));
}

StudyResult run_study(const SimConfig& config, int threads) {
  validate(config);
  StudyAccumulator total(config.procedures.size());
  const auto n = static_cast<std::int64_t>(config.n_replicates);
#ifdef _OPENMP
  const int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel num_threads(team)
  {
    StudyAccumulator local(config.procedures.size());
#pragma omp for schedule(static)
    for (std::int64_t r = 0; r < n; ++r) {
      local.add_replicate(config, static_cast<std::uint64_t>(r));
    }
#pragma omp critical(fdrctl_study_merge)
    total.merge(local);
  }
#else
  (void)threads;
  for (std::int64_t r = 0; r < n; ++r) {
    total.add_replicate(config, static_cast<std::uint64_t>(r));
  }
#endif
  return finalize(config, total);
}

std::string_view to_string(SweepAxis axis) noexcept {
  switch (axis) {
    case SweepAxis::M: return "m";
    case SweepAxis::M0Fraction: return "m0_fraction";
    case SweepAxis::Level: return "level";
  }
  return "unknown";
}

SweepAxis parse_axis(std::string_view name) {
  for (const SweepAxis axis : {SweepAxis::M, SweepAxis::M0Fraction, SweepAxis::Level}) {
    if (to_string(axis) == name) {
      return axis;
    }
  }
  throw Error(Errc::InvalidAxis, "unknown sweep axis '" + std::string(name) + "'");
}

SimConfig sweep_point_config(const SimConfig& base, SweepAxis axis, double value,
                             std::size_t point_index) {
  SimConfig config = base;
  const auto bits = Philox4x32(base.seed)(counter(point_index, kSeedStream, 0));
  config.seed = std::uint64_t{bits[0]} << 32 | bits[1];

  switch (axis) {
    case SweepAxis::M: {
      if (!(value >= 1.0) || value != std::floor(value) || value > 4294967295.0) {
        throw Error(Errc::InvalidConfig, "m must be a positive integer");
      }
      config.m = static_cast<std::size_t>(value);
      if (base.m == 0) {
        throw Error(Errc::InvalidConfig, "base m must be positive");
      }
      // round(m * m0 / m_base) in integer arithmetic
      config.m0 = (2 * config.m * base.m0 + base.m) / (2 * base.m);
      break;
    }
    case SweepAxis::M0Fraction:
      if (!(value >= 0.0 && value <= 1.0)) {
        throw Error(Errc::InvalidConfig, "m0_fraction must lie in [0, 1]");
      }
      config.m0 = static_cast<std::size_t>(std::floor(value * static_cast<double>(base.m) + 0.5));
      break;
    case SweepAxis::Level:
      config.level = value;
      break;
  }
  return config;
}

SweepResult sweep(const SimConfig& base, SweepAxis axis, std::span<const double> values,
                  int threads) {
  if (values.empty()) {
    throw Error(Errc::InvalidConfig, "sweep needs at least one value");
  }
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (!(values[i] > values[i - 1])) {
      throw Error(Errc::InvalidConfig, "sweep values must be strictly increasing", i);
    }
  }
  SweepResult out;
  out.axis = axis;
  for (std::size_t i = 0; i < values.size(); ++i) {
    try {
      const SimConfig config = sweep_point_config(base, axis, values[i], i);
      out.points.push_back({values[i], run_study(config, threads)});
    } catch (const Error& e) {
      throw Error(e.code(),
                  std::string(to_string(axis)) + "=" + format_value(values[i]) + ": " + e.what(), i);
    }
  }
  return out;
}

}  // namespace fdrctl
