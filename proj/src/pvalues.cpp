#include "fdrctl/pvalues.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "fdrctl/error.hpp"

namespace fdrctl {

PValueVector::PValueVector(std::vector<double> raw) : values_(std::move(raw)) {
  if (values_.empty()) {
    throw Error(Errc::EmptyInput, "p-value vector is empty");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const double v = values_[i];
    if (!std::isfinite(v)) {
      throw Error(Errc::NotFinite, "p-value at index " + std::to_string(i) + " is not finite", i);
    }
    if (v < 0.0 || v > 1.0) {
      throw Error(Errc::OutOfRange, "p-value at index " + std::to_string(i) + " is outside [0, 1]", i);
    }
  }
  order_.resize(values_.size());
  std::iota(order_.begin(), order_.end(), std::size_t{0});
  std::stable_sort(order_.begin(), order_.end(),
                   [this](std::size_t a, std::size_t b) { return values_[a] < values_[b]; });
}

PValueVector make_pvalues(std::vector<double> raw) { return PValueVector(std::move(raw)); }

SignificanceLevel::SignificanceLevel(double value) : value_(value) {
  if (!(value > 0.0 && value < 1.0)) {
    throw Error(Errc::InvalidLevel, "significance level must lie strictly between 0 and 1");
  }
}

}  // namespace fdrctl
