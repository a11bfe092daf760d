#include "fdrctl/procedures.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fdrctl/error.hpp"

namespace fdrctl {

namespace {

// Rejects ranks 1..k and records the level the k-th ranked value was tested at.
RejectionSet ranks_up_to(const PValueVector& p, Procedure procedure, std::size_t k,
                         double threshold) {
  RejectionSet out;
  out.procedure = procedure;
  out.rejected.assign(p.size(), false);
  out.cutoff_rank = k;
  const auto order = p.order();
  for (std::size_t r = 0; r < k; ++r) {
    out.rejected[order[r]] = true;
  }
  if (k > 0) {
    out.cutoff_threshold = threshold;
  }
  return out;
}

// Single-step rule: everything at or below one common level.
RejectionSet single_step(const PValueVector& p, Procedure procedure, double level) {
  const auto order = p.order();
  std::size_t k = 0;
  while (k < order.size() && p[order[k]] <= level) {
    ++k;
  }
  return ranks_up_to(p, procedure, k, level);
}

double holm_level(double alpha, std::size_t m, std::size_t rank) {
  return alpha / static_cast<double>(m - rank + 1);
}

double bh_level(double q, std::size_t m, std::size_t rank) {
  return static_cast<double>(rank) * q / static_cast<double>(m);
}

template <typename LevelFn>
RejectionSet step_up(const PValueVector& p, Procedure procedure, LevelFn level_at) {
  for (std::size_t j = p.size(); j >= 1; --j) {
    const double level = level_at(j);
    if (p.ranked(j) <= level) {
      return ranks_up_to(p, procedure, j, level);
    }
  }
  return ranks_up_to(p, procedure, 0, 0.0);
}

}  // namespace

std::string_view to_string(Procedure procedure) noexcept {
  switch (procedure) {
    case Procedure::Unadjusted: return "unadjusted";
    case Procedure::Bonferroni: return "bonferroni";
    case Procedure::Sidak: return "sidak";
    case Procedure::Holm: return "holm";
    case Procedure::Hochberg: return "hochberg";
    case Procedure::BenjaminiHochberg: return "bh";
  }
  return "unknown";
}

Procedure parse_procedure(std::string_view name) {
  for (const Procedure procedure : kAllProcedures) {
    if (to_string(procedure) == name) {
      return procedure;
    }
  }
  throw Error(Errc::UnknownMethod, "unknown method '" + std::string(name) + "'");
}

std::size_t RejectionSet::count() const noexcept {
  return static_cast<std::size_t>(std::count(rejected.begin(), rejected.end(), true));
}

double uncorrected_family_error(double alpha, std::size_t m) noexcept {
  return -std::expm1(static_cast<double>(m) * std::log1p(-alpha));
}

double bonferroni_level(double alpha, std::size_t m) noexcept {
  return alpha / static_cast<double>(m);
}

double sidak_level(double alpha, std::size_t m) noexcept {
  if (m == 1) {
    return alpha;
  }
  // 1 - (1 - alpha)^(1/m) without cancellation for small alpha.
  return -std::expm1(std::log1p(-alpha) / static_cast<double>(m));
}

RejectionSet reject_unadjusted(const PValueVector& p, SignificanceLevel alpha) {
  return single_step(p, Procedure::Unadjusted, alpha.value());
}

RejectionSet reject_bonferroni(const PValueVector& p, SignificanceLevel alpha) {
  return single_step(p, Procedure::Bonferroni, bonferroni_level(alpha.value(), p.size()));
}

RejectionSet reject_sidak(const PValueVector& p, SignificanceLevel alpha) {
  return single_step(p, Procedure::Sidak, sidak_level(alpha.value(), p.size()));
}

RejectionSet reject_holm(const PValueVector& p, SignificanceLevel alpha) {
  const std::size_t m = p.size();
  std::size_t k = 0;
  while (k < m && p.ranked(k + 1) <= holm_level(alpha.value(), m, k + 1)) {
    ++k;
  }
  return ranks_up_to(p, Procedure::Holm, k, k > 0 ? holm_level(alpha.value(), m, k) : 0.0);
}

RejectionSet reject_hochberg(const PValueVector& p, SignificanceLevel alpha) {
  const std::size_t m = p.size();
  return step_up(p, Procedure::Hochberg,
                 [&](std::size_t j) { return holm_level(alpha.value(), m, j); });
}

RejectionSet reject_bh(const PValueVector& p, SignificanceLevel q) {
  const std::size_t m = p.size();
  return step_up(p, Procedure::BenjaminiHochberg,
                 [&](std::size_t j) { return bh_level(q.value(), m, j); });
}

RejectionSet reject(const PValueVector& p, Procedure procedure, SignificanceLevel level) {
  switch (procedure) {
    case Procedure::Unadjusted: return reject_unadjusted(p, level);
    case Procedure::Bonferroni: return reject_bonferroni(p, level);
    case Procedure::Sidak: return reject_sidak(p, level);
    case Procedure::Holm: return reject_holm(p, level);
    case Procedure::Hochberg: return reject_hochberg(p, level);
    case Procedure::BenjaminiHochberg: return reject_bh(p, level);
  }
  throw Error(Errc::UnknownMethod, "unknown procedure");
}

ThresholdChoice bh_theta(const PValueVector& p, SignificanceLevel q) {
  const std::size_t m = p.size();
  std::vector<double> sorted(p.values().begin(), p.values().end());
  std::sort(sorted.begin(), sorted.end());

  auto rejections_at = [&](double theta) {
    return static_cast<std::size_t>(std::upper_bound(sorted.begin(), sorted.end(), theta) -
                                    sorted.begin());
  };
  // theta m / r <= q rearranged to theta <= r q / m, so the bound is the
  // same double the step-up rule compares against.
  auto feasible = [&](double theta, std::size_t r) {
    return r == 0 || theta <= bh_level(q.value(), m, r);
  };

  ThresholdChoice best;
  best.rejections = rejections_at(0.0);
  if (!feasible(0.0, best.rejections)) {
    best.rejections = 0;
  }
  for (const double theta : sorted) {
    const std::size_t r = rejections_at(theta);
    if (r > best.rejections && feasible(theta, r)) {
      best = {theta, r};
    }
  }
  return best;
}

AdjustedPValues adjust(const PValueVector& p, Procedure method) {
  const std::size_t m = p.size();
  const double md = static_cast<double>(m);
  const auto order = p.order();
  AdjustedPValues out;
  out.method = method;
  out.values.resize(m);

  auto capped = [](double v) { return std::min(v, 1.0); };

  switch (method) {
    case Procedure::Unadjusted:
      std::copy(p.values().begin(), p.values().end(), out.values.begin());
      break;
    case Procedure::Bonferroni:
      for (std::size_t i = 0; i < m; ++i) out.values[i] = capped(md * p[i]);
      break;
    case Procedure::Sidak:
      for (std::size_t i = 0; i < m; ++i) {
        out.values[i] = m == 1 ? p[i] : capped(-std::expm1(md * std::log1p(-p[i])));
      }
      break;
    case Procedure::Holm: {
      double running = 0.0;
      for (std::size_t r = 1; r <= m; ++r) {
        running = std::max(running, capped(static_cast<double>(m - r + 1) * p.ranked(r)));
        out.values[order[r - 1]] = running;
      }
      break;
    }
    case Procedure::Hochberg: {
      double running = 1.0;
      for (std::size_t r = m; r >= 1; --r) {
        running = std::min(running, capped(static_cast<double>(m - r + 1) * p.ranked(r)));
        out.values[order[r - 1]] = running;
      }
      break;
    }
    case Procedure::BenjaminiHochberg: {
      double running = 1.0;
      for (std::size_t r = m; r >= 1; --r) {
        running = std::min(running, capped(p.ranked(r) * (md / static_cast<double>(r))));
        out.values[order[r - 1]] = running;
      }
      break;
    }
  }
  return out;
}

AdjustedPValues adjust(const PValueVector& p, std::string_view method) {
  return adjust(p, parse_procedure(method));
}

}  // namespace fdrctl
