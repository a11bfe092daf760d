#pragma once

namespace fdrctl::normal {

/// Complementary error function by Cody's rational Chebyshev approximations.
/// Uses only arithmetic and the deterministic exponential below, so results
/// do not depend on the platform math library.
double erfc(double x) noexcept;

/// exp(x) by Cody-Waite reduction and a fixed polynomial; within a few ulps.
double exp(double x) noexcept;

/// Standard normal distribution function.
double cdf(double x) noexcept;

/// 1 - cdf(x), computed without cancellation.
double upper_tail(double x) noexcept;

/// 2 (1 - cdf(|z|)).
double two_sided_pvalue(double z) noexcept;

}  // namespace fdrctl::normal
