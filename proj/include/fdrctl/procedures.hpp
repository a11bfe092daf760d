#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "fdrctl/pvalues.hpp"

namespace fdrctl {

enum class Procedure {
  Unadjusted,
  Bonferroni,
  Sidak,
  Holm,
  Hochberg,
  BenjaminiHochberg,
};

inline constexpr std::array<Procedure, 6> kAllProcedures = {
    Procedure::Unadjusted, Procedure::Bonferroni, Procedure::Sidak,
    Procedure::Holm,       Procedure::Hochberg,   Procedure::BenjaminiHochberg,
};

/// Short identifiers: unadjusted, bonferroni, sidak, holm, hochberg, bh.
std::string_view to_string(Procedure procedure) noexcept;

/// Throws Error{UnknownMethod}.
Procedure parse_procedure(std::string_view name);

struct RejectionSet {
  Procedure procedure{};
  std::vector<bool> rejected;  // indexed by original hypothesis index
  std::size_t cutoff_rank = 0;
  std::optional<double> cutoff_threshold;  // absent when cutoff_rank == 0

  std::size_t size() const noexcept { return rejected.size(); }
  std::size_t count() const noexcept;
};

/// Probability of at least one false alarm when m independent true nulls are
/// each tested at level alpha: 1 - (1 - alpha)^m.
double uncorrected_family_error(double alpha, std::size_t m) noexcept;

// Per-test levels of the single-step corrections.
double bonferroni_level(double alpha, std::size_t m) noexcept;
double sidak_level(double alpha, std::size_t m) noexcept;

RejectionSet reject_unadjusted(const PValueVector& p, SignificanceLevel alpha);
RejectionSet reject_bonferroni(const PValueVector& p, SignificanceLevel alpha);
RejectionSet reject_sidak(const PValueVector& p, SignificanceLevel alpha);

/// Step-down: rank i is tested at alpha / (m - i + 1); stops at the first failure.
RejectionSet reject_holm(const PValueVector& p, SignificanceLevel alpha);

/// Step-up with Holm's levels: the largest rank j with p_(j) <= alpha / (m - j + 1)
/// and every smaller rank are rejected.
RejectionSet reject_hochberg(const PValueVector& p, SignificanceLevel alpha);

/// Step-up false discovery rate control: the largest rank k with
/// p_(k) <= k q / m and every smaller rank are rejected.
RejectionSet reject_bh(const PValueVector& p, SignificanceLevel q);

RejectionSet reject(const PValueVector& p, Procedure procedure, SignificanceLevel level);

struct ThresholdChoice {
  double theta = 0.0;
  std::size_t rejections = 0;
};

/// The step-up FDR rule solved as a search: among thresholds theta drawn from
/// {0, p_1, ..., p_m}, pick the one rejecting the most hypotheses
/// r(theta) = #{p_i <= theta} while keeping theta m / r(theta) <= q.
/// Returns theta = 0, r = 0 when nothing is feasible.
ThresholdChoice bh_theta(const PValueVector& p, SignificanceLevel q);

struct AdjustedPValues {
  Procedure method{};
  std::vector<double> values;  // indexed by original hypothesis index
};

/// Adjusted p-values: {i : adjusted_i <= gamma} is the rejection set of the
/// same procedure run at level gamma.
AdjustedPValues adjust(const PValueVector& p, Procedure method);

/// Throws Error{UnknownMethod}.
AdjustedPValues adjust(const PValueVector& p, std::string_view method);

}  // namespace fdrctl
