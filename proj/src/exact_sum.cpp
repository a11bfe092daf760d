#include "fdrctl/exact_sum.hpp"

#include <cmath>
#include <stdexcept>

namespace fdrctl {

namespace {
constexpr std::int64_t kLimbMask = (std::int64_t{1} << 32) - 1;
// Each add touches a limb with < 2^32; carries are pushed out well before any
// limb can approach 2^63.
constexpr std::uint32_t kNormalizeEvery = 1u << 28;
}  // namespace

void ExactSum::add_limb(int index, std::int64_t amount) { limbs_[index] += amount; }

void ExactSum::add(double x) {
  if (!(x >= 0.0) || !std::isfinite(x) || x >= 18446744073709551616.0) {
    throw std::domain_error("ExactSum accepts finite values in [0, 2^64)");
  }
  if (x == 0.0) {
    return;
  }
  int exponent = 0;
  const double fraction = std::frexp(x, &exponent);
  // x = mantissa * 2^(exponent - 53), mantissa < 2^53 and integral.
  auto mantissa = static_cast<std::uint64_t>(std::ldexp(fraction, 53));
  int shift = exponent - 53 - kMinExponent;
  if (shift < 0) {
    // Only subnormals reach here; their low bits are zero.
    mantissa >>= -shift;
    shift = 0;
  }
  const int limb = shift / 32;
  const int offset = shift % 32;
  // Spread the (offset + 53)-bit value across up to three limbs.
  const unsigned __int128 wide = static_cast<unsigned __int128>(mantissa) << offset;
  add_limb(limb, static_cast<std::int64_t>(static_cast<std::uint64_t>(wide) & kLimbMask));
  add_limb(limb + 1, static_cast<std::int64_t>(static_cast<std::uint64_t>(wide >> 32) & kLimbMask));
  add_limb(limb + 2, static_cast<std::int64_t>(static_cast<std::uint64_t>(wide >> 64) & kLimbMask));
  if (++pending_ >= kNormalizeEvery) {
    normalize();
  }
}

void ExactSum::merge(const ExactSum& other) {
  ExactSum rhs = other;
  rhs.normalize();
  normalize();
  for (int i = 0; i < kLimbs; ++i) {
    limbs_[i] += rhs.limbs_[i];
  }
  normalize();
}

void ExactSum::normalize() {
  std::int64_t carry = 0;
  for (int i = 0; i < kLimbs; ++i) {
    const std::int64_t v = limbs_[i] + carry;
    limbs_[i] = v & kLimbMask;
    carry = v >> 32;
  }
  if (carry != 0) {
    throw std::overflow_error("ExactSum overflow");
  }
  pending_ = 0;
}

double ExactSum::value() const {
  ExactSum canonical = *this;
  canonical.normalize();
  int top = kLimbs - 1;
  while (top >= 0 && canonical.limbs_[top] == 0) {
    --top;
  }
  if (top < 0) {
    return 0.0;
  }
  // Gather the top 96 bits as an integer, keep a sticky bit for everything
  // below, then let a single int -> double conversion do the rounding.
  unsigned __int128 head = 0;
  bool sticky = false;
  for (int i = top; i > top - 3; --i) {
    head <<= 32;
    if (i >= 0) {
      head |= static_cast<std::uint64_t>(canonical.limbs_[i]);
    }
  }
  for (int i = top - 3; i >= 0; --i) {
    sticky = sticky || canonical.limbs_[i] != 0;
  }
  if (sticky) {
    head |= 1;
  }
  const int low_limb = top - 2;
  return std::ldexp(static_cast<double>(head), 32 * low_limb + kMinExponent);
}

bool ExactSum::operator==(const ExactSum& other) const {
  ExactSum a = *this;
  ExactSum b = other;
  a.normalize();
  b.normalize();
  return a.limbs_ == b.limbs_;
}

}  // namespace fdrctl
