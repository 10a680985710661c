#pragma once

// Shift-and-subtract (Bombelli) integer square root with floating-point
// digit guessing.
//
// The radicand is consumed two limbs at a time from the most significant end.
// Each root digit is guessed in constant time as
//
//   floor( W / (sqrt((bY)^2 + W) + bY) )
//
// where W is the current remainder window and Y the partial root. Every
// rounding in that expression is pushed in the direction that can only make
// the guess too large, so the guess is either the true digit or one more.
// The one-too-large case is detected by the remainder going negative and is
// undone by a single add-back.

#include <cstddef>
#include <cstdint>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bombelli/bignat.hpp"
#include "bombelli/extfloat.hpp"

namespace bombelli {

struct SqrtResult {
  BigNat root;
  BigNat remainder;

  friend bool operator==(const SqrtResult&, const SqrtResult&) = default;
};

struct GuessStats {
  std::uint64_t digits_guessed = 0;
  std::uint64_t corrections = 0;
  std::uint64_t zero_quotient_hits = 0;

  GuessStats& operator+=(const GuessStats& o) noexcept {
    digits_guessed += o.digits_guessed;
    corrections += o.corrections;
    zero_quotient_hits += o.zero_quotient_hits;
    return *this;
  }
};

/// A digit guess was off by two or more. This falsifies the error analysis
/// the algorithm depends on and is never recoverable.
class GuessInvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct FirstDigit {
  Limb digit;
  std::uint64_t remainder;
};

/// floor(sqrt(top)) for the one or two leading limbs of the radicand.
inline FirstDigit first_digit(std::span<const Limb> top) {
  if (top.empty() || top.size() > 2 || top[0] == 0) {
    throw std::invalid_argument("first_digit: need one or two limbs, leading limb nonzero");
  }
  std::uint64_t digit;
  std::uint64_t value;
  if (top.size() == 2) {
    value = (static_cast<std::uint64_t>(top[0]) << kLimbBits) | top[1];
    // The double image of a 64-bit value may round down; nudge so the
    // candidate can only be high.
    const double up = std::nextafter(static_cast<double>(value), HUGE_VAL);
    digit = static_cast<std::uint64_t>(std::nextafter(std::sqrt(up), HUGE_VAL));
    if (digit >= kRadix) digit = kRadix - 1;
  } else {
    value = top[0];
    // Exact: the integer fits the significand, and sqrt is correctly rounded.
    digit = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(value)));
  }
  if (digit * digit > value) --digit;
  const bool next_fits = digit + 1 < kRadix && (digit + 1) * (digit + 1) <= value;
  if (digit * digit > value || next_fits) {
    throw GuessInvariantError("first_digit: digit for " + std::to_string(value) +
                              " off by more than one");
  }
  return {static_cast<Limb>(digit), value - digit * digit};
}

namespace detail {

/// Limb k (from the least significant end) of the multiplier 2bY + d, where
/// Y is big-endian in `root`. k = 0 is d itself; k in [1, s+1] are limbs of 2Y.
inline DoubleLimb twice_root_limb(std::span<const Limb> root, std::size_t k) noexcept {
  // Limb j of 2Y (j = k - 1) takes bits from Y limbs j and j - 1.
  const std::size_t s = root.size();
  const std::size_t j = k - 1;
  DoubleLimb v = 0;
  if (j < s) v |= static_cast<DoubleLimb>(root[s - 1 - j]) << 1;
  if (j >= 1 && j - 1 < s) v |= root[s - j] >> (kLimbBits - 1);
  return v & kLimbMask;
}

/// d * (2bY + d) into `out` (big-endian, size s + 3).
inline void trial_product(std::span<const Limb> root, Limb d, std::span<Limb> out) noexcept {
  const std::size_t s = root.size();
  DoubleLimb carry = 0;
  for (std::size_t k = 0; k <= s + 1; ++k) {
    const DoubleLimb m = k == 0 ? d : twice_root_limb(root, k);
    const DoubleLimb t = m * d + carry;
    out[out.size() - 1 - k] = static_cast<Limb>(t);
    carry = t >> kLimbBits;
  }
  out[0] = static_cast<Limb>(carry);
}

}  // namespace detail

/// Constant-time digit guess from the scaled partial root and the window.
///
/// `y_shifted` must not exceed b * Y. The result is never below the true
/// digit. Returned candidates may equal b; the caller clamps.
inline std::uint64_t guess_digit(const ExtFloat& y_shifted, std::span<const Limb> window,
                                 GuessStats* stats = nullptr) {
  const ExtFloat w_floor = value_of_window_rd(window);
  if (w_floor.is_zero()) return 0;
  const ExtFloat num = w_floor.next_up();
  const ExtFloat y_sqr = (y_shifted * y_shifted).next_down();
  const ExtFloat rad = (y_sqr + w_floor).next_down();
  const ExtFloat root = ExtFloat::sqrt(rad).next_down();
  const ExtFloat den = (root + y_shifted).next_down();
  if (den.is_zero()) throw std::invalid_argument("guess_digit: zero denominator");
  const ExtFloat quot = num / den;
  if (quot.is_zero() && stats != nullptr) ++stats->zero_quotient_hits;
  const ExtFloat up = quot.next_up();
  if (up.exp() >= 64) {
    throw GuessInvariantError("guess_digit: quotient " + up.to_string() + " exceeds 2^64");
  }
  return up.to_u64_floor();
}

inline std::uint64_t guess_digit(const ExtFloat& y_shifted, const LimbWindow& window,
                                 GuessStats* stats = nullptr) {
  return guess_digit(y_shifted, window.view(), stats);
}

/// Window image of b * Y with every bit below the top 53 of Y dropped.
inline ExtFloat shifted_root_rd(std::span<const Limb> partial_root) {
  return value_of_window_rd(partial_root).scale_by_pow2(kLimbBits);
}

/// Replaces the window value W by W - (2bY d + d^2), where Y is
/// `partial_root`. If that is negative, d is decremented once and
/// 2bY + 2d + 1 added back. Returns the digit actually used.
///
/// The buffer must hold at least s + 3 limbs at or before `end`, and limbs
/// before `begin` must be zero.
inline Limb compute_remainder(std::uint64_t digit, std::span<const Limb> partial_root,
                              LimbWindow& window, GuessStats* stats = nullptr) {
  if (digit >= kRadix) {
    throw std::invalid_argument("compute_remainder: digit must be below the radix");
  }
  if (digit == 0) return 0;
  const std::size_t s = partial_root.size();
  const std::size_t span_limbs = s + 3;
  if (window.end < span_limbs) {
    throw std::invalid_argument("compute_remainder: window buffer too short");
  }
  std::vector<Limb>& buf = window.buffer;
  const std::size_t lo = std::min(window.end - span_limbs, window.begin);
  const Limb d = static_cast<Limb>(digit);

  // Subtract d * (2bY + d), least significant limb first.
  std::size_t pos = window.end;
  DoubleLimb carry = 0;
  std::int64_t borrow = 0;
  for (std::size_t k = 0; k <= s + 1; ++k) {
    const DoubleLimb m = k == 0 ? d : detail::twice_root_limb(partial_root, k);
    const DoubleLimb t = m * d + carry;
    carry = t >> kLimbBits;
    const std::int64_t diff =
        static_cast<std::int64_t>(buf[--pos]) - static_cast<std::int64_t>(t & kLimbMask) + borrow;
    buf[pos] = static_cast<Limb>(diff);
    borrow = diff >> kLimbBits;
  }
  {
    const std::int64_t diff =
        static_cast<std::int64_t>(buf[--pos]) - static_cast<std::int64_t>(carry) + borrow;
    buf[pos] = static_cast<Limb>(diff);
    borrow = diff >> kLimbBits;
  }
  while (borrow != 0 && pos > lo) {
    const std::int64_t diff = static_cast<std::int64_t>(buf[--pos]) + borrow;
    buf[pos] = static_cast<Limb>(diff);
    borrow = diff >> kLimbBits;
  }

  Limb used = d;
  if (borrow != 0) {
    // Over-guessed by one: add back 2bY + 2(d-1) + 1.
    --used;
    if (stats != nullptr) ++stats->corrections;
    const DoubleLimb low = 2 * static_cast<DoubleLimb>(used) + 1;
    pos = window.end;
    DoubleLimb acc = 0;
    for (std::size_t k = 0; k <= s + 1; ++k) {
      DoubleLimb add = k == 0 ? (low & kLimbMask) : detail::twice_root_limb(partial_root, k);
      if (k == 1) add += low >> kLimbBits;
      acc += static_cast<DoubleLimb>(buf[--pos]) + add;
      buf[pos] = static_cast<Limb>(acc);
      acc >>= kLimbBits;
    }
    while (acc != 0 && pos > lo) {
      acc += buf[--pos];
      buf[pos] = static_cast<Limb>(acc);
      acc >>= kLimbBits;
    }
    if (acc == 0) {
      std::ostringstream msg;
      msg << "compute_remainder: remainder still negative after one correction "
          << "(digit " << digit << ", partial root limbs " << s << ", window ["
          << window.begin << ", " << window.end << "))";
      throw GuessInvariantError(msg.str());
    }
  }

  window.begin = lo;
  window = strip_leading_zeros(std::move(window));
  return used;
}

/// Exact digit max{beta : 2bY beta + beta^2 <= W} by bisection over [0, b).
inline Limb binary_search_digit(std::span<const Limb> partial_root, std::span<const Limb> window) {
  std::vector<Limb> trial(partial_root.size() + 3);
  DoubleLimb lo = 0;
  DoubleLimb hi = kRadix - 1;
  while (lo < hi) {
    const DoubleLimb mid = lo + (hi - lo + 1) / 2;
    detail::trial_product(partial_root, static_cast<Limb>(mid), trial);
    if (detail::compare(trial, window) <= 0) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return static_cast<Limb>(lo);
}

inline Limb binary_search_digit(std::span<const Limb> partial_root, const LimbWindow& window) {
  return binary_search_digit(partial_root, window.view());
}

/// Per-digit state exposed to an observer of the main loop.
struct DigitEvent {
  std::size_t digits;            // root digits produced so far, including this one
  std::size_t consumed_limbs;    // radicand limbs folded into the window
  std::uint64_t candidate;       // digit before correction (after clamping)
  Limb digit;                    // digit stored
  std::span<const Limb> root;    // partial root Y_i
  const LimbWindow& window;      // remainder R_i; buffer index 0 is padding
};

struct NoObserver {
  void operator()(const DigitEvent&) const noexcept {}
};

namespace detail {

/// Guesses digits with the float formula.
struct GuessedDigits {
  std::uint64_t operator()(std::span<const Limb> root, const LimbWindow& w,
                           GuessStats* stats) const {
    if (stats != nullptr) ++stats->digits_guessed;
    std::uint64_t c = guess_digit(shifted_root_rd(root), w.view(), stats);
    if (c == kRadix) {
      c = kRadix - 1;
    } else if (c > kRadix) {
      throw GuessInvariantError("guess_digit: candidate " + std::to_string(c) +
                                " exceeds the radix");
    }
    return c;
  }
};

/// Exact digits by bisection.
struct BisectedDigits {
  std::uint64_t operator()(std::span<const Limb> root, const LimbWindow& w, GuessStats*) const {
    return binary_search_digit(root, w.view());
  }
};

template <class DigitSource, class Observer>
SqrtResult shift_and_subtract(const BigNat& x, const DigitSource& next_digit,
                              Observer&& observe, GuessStats* stats) {
  if (x.is_zero()) return {};
  const std::span<const Limb> mag = x.limbs();
  const std::size_t n = mag.size();
  const std::size_t root_len = (n + 1) / 2;

  // One zero limb of headroom in front; mag[k] lives at buffer[k + 1].
  LimbWindow w(std::vector<Limb>(n + 1, 0), 1, 1);
  std::vector<Limb> root(root_len, 0);

  const std::size_t head = n % 2 == 0 ? 2 : 1;
  const FirstDigit first = first_digit(mag.first(head));
  root[0] = first.digit;
  if (head == 2) {
    w.buffer[1] = static_cast<Limb>(first.remainder >> kLimbBits);
    w.buffer[2] = static_cast<Limb>(first.remainder);
  } else {
    w.buffer[1] = static_cast<Limb>(first.remainder);
  }
  w.end = 1 + head;
  observe(DigitEvent{1, head, first.digit, first.digit, std::span<const Limb>(root).first(1), w});

  for (std::size_t s = 1; s < root_len; ++s) {
    w = strip_leading_zeros(std::move(w));
    w.buffer[w.end] = mag[w.end - 1];
    w.buffer[w.end + 1] = mag[w.end];
    w.end += 2;

    const std::span<const Limb> partial = std::span<const Limb>(root).first(s);
    const std::uint64_t candidate = next_digit(partial, w, stats);
    const Limb digit = compute_remainder(candidate, partial, w, stats);
    root[s] = digit;
    observe(DigitEvent{s + 1, w.end - 1, candidate, digit,
                       std::span<const Limb>(root).first(s + 1), w});
  }

  BigNat remainder = w.value();
  return {BigNat(std::move(root)), std::move(remainder)};
}

}  // namespace detail

/// Floor square root and remainder of x.
inline SqrtResult sqrt_rem(const BigNat& x, GuessStats* stats = nullptr) {
  return detail::shift_and_subtract(x, detail::GuessedDigits{}, NoObserver{}, stats);
}

/// sqrt_rem, reporting every produced digit to `observe`.
template <class Observer>
SqrtResult sqrt_rem_observed(const BigNat& x, Observer&& observe, GuessStats* stats = nullptr) {
  return detail::shift_and_subtract(x, detail::GuessedDigits{}, std::forward<Observer>(observe),
                                    stats);
}

}  // namespace bombelli
