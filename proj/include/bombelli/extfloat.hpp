#pragma once

// Non-negative binary floating point with a binary64 significand and a
// 64-bit exponent.
//
// The significand lives in a host double in [1, 2) and all rounding is the
// host's round-to-nearest-even; the exponent is tracked separately so values
// far outside the double range stay normal. The only directed rounding
// available is what the digit-guess formula needs: truncating conversion
// from limbs, plus next_up / next_down nudges after RN operations.

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include "bombelli/bignat.hpp"

namespace bombelli {

/// Constants of the float model used by the digit guess.
struct FloatParams {
  int precision;        // significand bits, including the leading one
  double unit_roundoff; // 2^-precision
  double radix;         // digit radix of the square-root loop
  double delta;         // 23 * unit_roundoff * radix, bound on guess error

  static constexpr FloatParams make(int precision, double radix) {
    const double u = 1.0 / static_cast<double>(std::uint64_t{1} << precision);
    return {precision, u, radix, 23.0 * u * radix};
  }
};

/// p = 53 and b = 2^32, as used by sqrt_rem.
inline constexpr FloatParams kBinary64Params =
    FloatParams::make(std::numeric_limits<double>::digits, 4294967296.0);

/// Smallest integer p with 23 * 2^-p * radix <= delta.
inline int required_precision(double radix, double delta) {
  int exp = 0;
  if (!(radix >= 2.0) || std::frexp(radix, &exp) != 0.5) {
    throw std::invalid_argument("required_precision: radix must be a power of two >= 2");
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("required_precision: delta must lie in (0, 1)");
  }
  // 23 * radix * 2^-p is exact in binary64 for every p reached here, so the
  // comparison is exact; a log2-based formula would misround at equality.
  for (int p = 1;; ++p) {
    if (std::ldexp(23.0 * radix, -p) <= delta) return p;
  }
}

class ExtFloat {
 public:
  static constexpr std::int64_t kMinExp = std::numeric_limits<std::int64_t>::min();
  static constexpr int kFractionBits = std::numeric_limits<double>::digits - 1;  // 52

  /// Canonical zero.
  constexpr ExtFloat() = default;

  static constexpr ExtFloat zero() { return {}; }
  static constexpr ExtFloat min_positive() { return {1.0, kMinExp}; }

  /// Raw constructor; throws if (signif, exp) is not normalized.
  static ExtFloat from_parts(double signif, std::int64_t exp) {
    if (signif == 0.0) {
      if (exp != kMinExp) throw std::invalid_argument("ExtFloat: non-canonical zero");
      return {};
    }
    if (!(signif >= 1.0 && signif < 2.0)) {
      throw std::invalid_argument("ExtFloat: significand outside [1, 2)");
    }
    return {signif, exp};
  }

  /// Round-to-nearest-even image of n.
  static ExtFloat from_u64(std::uint64_t n) {
    if (n == 0) return {};
    std::int64_t exp = 63 - std::countl_zero(n);
    double signif = std::ldexp(static_cast<double>(n), static_cast<int>(-exp));
    if (signif >= 2.0) {  // n rounded up to the next power of two
      signif /= 2.0;
      ++exp;
    }
    return {signif, exp};
  }

  /// Finite, non-negative doubles only (subnormals are normalized here).
  static ExtFloat from_double(double d) {
    if (!(d >= 0.0) || !std::isfinite(d)) {
      throw std::invalid_argument("ExtFloat::from_double: need finite non-negative value");
    }
    if (d == 0.0) return {};
    int e = 0;
    const double m = std::frexp(d, &e);  // m in [0.5, 1)
    return {m * 2.0, static_cast<std::int64_t>(e) - 1};
  }

  /// Host value; saturates to 0 or +inf outside the double range.
  double to_double() const {
    if (is_zero()) return 0.0;
    if (exp_ > 2000) return std::numeric_limits<double>::infinity();
    if (exp_ < -2000) return 0.0;
    return std::ldexp(signif_, static_cast<int>(exp_));
  }

  constexpr double signif() const noexcept { return signif_; }
  constexpr std::int64_t exp() const noexcept { return exp_; }
  constexpr bool is_zero() const noexcept { return signif_ == 0.0; }

  friend constexpr bool operator==(const ExtFloat&, const ExtFloat&) = default;

  friend constexpr bool operator<(const ExtFloat& a, const ExtFloat& b) noexcept {
    if (a.is_zero() || b.is_zero()) return !b.is_zero() && a.is_zero();
    return a.exp_ != b.exp_ ? a.exp_ < b.exp_ : a.signif_ < b.signif_;
  }

  ExtFloat next_up() const {
    if (is_zero()) return min_positive();
    double s = std::nextafter(signif_, 2.0);
    std::int64_t e = exp_;
    if (s >= 2.0) {
      if (e == std::numeric_limits<std::int64_t>::max()) {
        throw std::overflow_error("ExtFloat::next_up: exponent overflow");
      }
      s /= 2.0;
      ++e;
    }
    return {s, e};
  }

  ExtFloat next_down() const {
    if (is_zero() || *this == min_positive()) return {};
    double s = std::nextafter(signif_, 0.0);
    std::int64_t e = exp_;
    if (s < 1.0) {
      s *= 2.0;
      --e;
    }
    return {s, e};
  }

  /// Exact multiplication by 2^k.
  ExtFloat scale_by_pow2(std::int64_t k) const {
    if (is_zero()) return {};
    std::int64_t e = 0;
    if (__builtin_add_overflow(exp_, k, &e)) {
      throw std::overflow_error("ExtFloat::scale_by_pow2: exponent out of range");
    }
    return {signif_, e};
  }

  /// floor(value); throws when value >= 2^64.
  std::uint64_t to_u64_floor() const {
    if (is_zero()) return 0;
    if (exp_ >= 64) throw std::overflow_error("ExtFloat::to_u64_floor: value >= 2^64");
    if (exp_ < 0) return 0;
    const std::uint64_t bits = std::bit_cast<std::uint64_t>(signif_);
    const std::uint64_t implicit = std::uint64_t{1} << kFractionBits;
    const std::uint64_t mant = (bits & (implicit - 1)) | implicit;
    const std::int64_t shift = exp_ - kFractionBits;
    if (shift >= 0) return mant << shift;
    if (shift <= -64) return 0;
    return mant >> -shift;
  }

  friend ExtFloat operator+(const ExtFloat& x, const ExtFloat& y) { return add(x, y); }
  friend ExtFloat operator*(const ExtFloat& x, const ExtFloat& y) { return mul(x, y); }
  friend ExtFloat operator/(const ExtFloat& x, const ExtFloat& y) { return div(x, y); }

  static ExtFloat add(const ExtFloat& x, const ExtFloat& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    const ExtFloat& big = x.exp_ > y.exp_ ? x : y;
    const ExtFloat& little = x.exp_ > y.exp_ ? y : x;
    // Below 2^-53 relative to big, the addend is under half an ulp.
    std::int64_t gap = 0;  // <= 0
    if (__builtin_sub_overflow(little.exp_, big.exp_, &gap) ||
        gap < -std::numeric_limits<double>::digits) {
      return big;
    }
    double s = big.signif_ + std::ldexp(little.signif_, static_cast<int>(gap));
    std::int64_t e = big.exp_;
    if (s >= 2.0) {
      if (e == std::numeric_limits<std::int64_t>::max()) {
        throw std::overflow_error("ExtFloat::next_up: exponent overflow");
      }
      s /= 2.0;
      ++e;
    }
    return {s, e};
  }

  static ExtFloat mul(const ExtFloat& x, const ExtFloat& y) {
    if (x.is_zero() || y.is_zero()) return {};
    double s = x.signif_ * y.signif_;
    std::int64_t e = 0;
    if (__builtin_add_overflow(x.exp_, y.exp_, &e)) {
      if (x.exp_ < 0) return {};
      throw std::overflow_error("ExtFloat::mul: exponent overflow");
    }
    if (s >= 2.0) {
      if (e == std::numeric_limits<std::int64_t>::max()) {
        throw std::overflow_error("ExtFloat::next_up: exponent overflow");
      }
      s /= 2.0;
      ++e;
    }
    return {s, e};
  }

  /// Throws std::domain_error on a zero divisor; exponent underflow gives zero.
  static ExtFloat div(const ExtFloat& x, const ExtFloat& y) {
    if (y.is_zero()) throw std::domain_error("ExtFloat::div: division by zero");
    if (x.is_zero()) return {};
    std::int64_t e = 0;
    if (__builtin_sub_overflow(x.exp_, y.exp_, &e)) {
      if (x.exp_ < 0) return {};  // exponent underflow
      throw std::overflow_error("ExtFloat::div: exponent overflow");
    }
    double s = x.signif_ / y.signif_;
    if (s < 1.0) {
      if (e == kMinExp) return {};
      s *= 2.0;
      --e;
    }
    return {s, e};
  }

  static ExtFloat sqrt(const ExtFloat& x) {
    if (x.is_zero()) return {};
    // Arithmetic shift: floor division for negative exponents too.
    if ((x.exp_ & 1) != 0) return {std::sqrt(2.0 * x.signif_), (x.exp_ - 1) >> 1};
    return {std::sqrt(x.signif_), x.exp_ >> 1};
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    return std::to_string(signif_) + "*2^" + std::to_string(exp_);
  }

 private:
  constexpr ExtFloat(double s, std::int64_t e) : signif_(s), exp_(e) {}

  double signif_ = 0.0;
  std::int64_t exp_ = kMinExp;
};

inline ExtFloat next_up(const ExtFloat& x) { return x.next_up(); }
inline ExtFloat next_down(const ExtFloat& x) { return x.next_down(); }
inline ExtFloat sqrt(const ExtFloat& x) { return ExtFloat::sqrt(x); }
inline ExtFloat scale_by_pow2(const ExtFloat& x, std::int64_t k) { return x.scale_by_pow2(k); }
inline std::uint64_t to_u64_floor(const ExtFloat& x) { return x.to_u64_floor(); }

/// Round-down conversion of a limb window: bits below the top 53 are dropped.
/// Reads at most three limbs past any leading zeros.
inline ExtFloat value_of_window_rd(std::span<const Limb> limbs) {
  const std::size_t lz = detail::leading_zero_limbs(limbs);
  limbs = limbs.subspan(lz);
  if (limbs.empty()) return ExtFloat::zero();

  constexpr int kKeep = std::numeric_limits<double>::digits;
  const int top_zeros = std::countl_zero(limbs[0]);
  const std::uint64_t bit_len =
      static_cast<std::uint64_t>(limbs.size()) * kLimbBits - static_cast<std::uint64_t>(top_zeros);

  if (limbs.size() <= 2) {
    std::uint64_t v = limbs[0];
    if (limbs.size() == 2) v = (v << kLimbBits) | limbs[1];
    if (bit_len > kKeep) {
      const int drop = static_cast<int>(bit_len) - kKeep;
      v &= ~((std::uint64_t{1} << drop) - 1);
    }
    return ExtFloat::from_u64(v);
  }

  // Left-align the top 64 significant bits, then keep 53 of them.
  std::uint64_t top = (static_cast<std::uint64_t>(limbs[0]) << kLimbBits) | limbs[1];
  if (top_zeros != 0) {
    top = (top << top_zeros) | (static_cast<std::uint64_t>(limbs[2]) >> (kLimbBits - top_zeros));
  }
  const std::uint64_t mant = top >> (64 - kKeep);
  const double signif = std::ldexp(static_cast<double>(mant), -(kKeep - 1));
  return ExtFloat::from_parts(signif, static_cast<std::int64_t>(bit_len) - 1);
}

inline ExtFloat value_of_window_rd(const LimbWindow& w) { return value_of_window_rd(w.view()); }

}  // namespace bombelli
