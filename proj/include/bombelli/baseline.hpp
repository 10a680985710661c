#pragma once

// Comparison implementations for sqrt_rem: shift-and-subtract with exact
// bisected digits, and integer Newton iteration over schoolbook division.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bombelli/bignat.hpp"
#include "bombelli/isqrt.hpp"

namespace bombelli {

/// Shift-and-subtract with every digit found by bisection.
inline SqrtResult sqrt_rem_binary_search(const BigNat& x) {
  return detail::shift_and_subtract(x, detail::BisectedDigits{}, NoObserver{}, nullptr);
}

namespace detail {

/// Knuth's algorithm D on little-endian limbs. den must have at least two
/// limbs and a nonzero top limb; num.size() >= den.size().
inline void long_divide(std::vector<Limb> num, std::vector<Limb> den, std::vector<Limb>& quot,
                        std::vector<Limb>& rem) {
  const std::size_t n = den.size();
  const std::size_t m = num.size() - n;
  const int shift = std::countl_zero(den.back());

  // Normalize so the divisor's top bit is set.
  std::vector<Limb> v(n);
  std::vector<Limb> u(num.size() + 1);
  for (std::size_t i = n; i-- > 0;) {
    DoubleLimb t = static_cast<DoubleLimb>(den[i]) << shift;
    if (i > 0 && shift != 0) t |= static_cast<DoubleLimb>(den[i - 1]) >> (kLimbBits - shift);
    v[i] = static_cast<Limb>(t);
  }
  u[num.size()] = shift == 0 ? 0 : static_cast<Limb>(num.back() >> (kLimbBits - shift));
  for (std::size_t i = num.size(); i-- > 0;) {
    DoubleLimb t = static_cast<DoubleLimb>(num[i]) << shift;
    if (i > 0 && shift != 0) t |= static_cast<DoubleLimb>(num[i - 1]) >> (kLimbBits - shift);
    u[i] = static_cast<Limb>(t);
  }

  quot.assign(m + 1, 0);
  const DoubleLimb v_top = v[n - 1];
  const DoubleLimb v_next = v[n - 2];
  for (std::size_t j = m + 1; j-- > 0;) {
    const DoubleLimb top2 = (static_cast<DoubleLimb>(u[j + n]) << kLimbBits) | u[j + n - 1];
    DoubleLimb qhat = top2 / v_top;
    DoubleLimb rhat = top2 % v_top;
    while (qhat >= kRadix || qhat * v_next > ((rhat << kLimbBits) | u[j + n - 2])) {
      --qhat;
      rhat += v_top;
      if (rhat >= kRadix) break;
    }

    // u[j .. j+n] -= qhat * v
    std::int64_t borrow = 0;
    DoubleLimb carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const DoubleLimb p = qhat * v[i] + carry;
      carry = p >> kLimbBits;
      const std::int64_t t = static_cast<std::int64_t>(u[i + j]) + borrow -
                             static_cast<std::int64_t>(p & kLimbMask);
      u[i + j] = static_cast<Limb>(t);
      borrow = t >> kLimbBits;
    }
    const std::int64_t t = static_cast<std::int64_t>(u[j + n]) + borrow -
                           static_cast<std::int64_t>(carry);
    u[j + n] = static_cast<Limb>(t);

    if (t < 0) {  // qhat was one too large
      --qhat;
      DoubleLimb c = 0;
      for (std::size_t i = 0; i < n; ++i) {
        c += static_cast<DoubleLimb>(u[i + j]) + v[i];
        u[i + j] = static_cast<Limb>(c);
        c >>= kLimbBits;
      }
      u[j + n] = static_cast<Limb>(static_cast<DoubleLimb>(u[j + n]) + c);
    }
    quot[j] = static_cast<Limb>(qhat);
  }

  rem.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    DoubleLimb t = u[i] >> shift;
    if (shift != 0) t |= (static_cast<DoubleLimb>(u[i + 1]) << (kLimbBits - shift)) & kLimbMask;
    rem[i] = static_cast<Limb>(t);
  }
}

inline std::vector<Limb> reversed(std::span<const Limb> limbs) {
  return std::vector<Limb>(limbs.rbegin(), limbs.rend());
}

}  // namespace detail

/// Quotient and remainder; throws std::domain_error for a zero divisor.
inline std::pair<BigNat, BigNat> divide(const BigNat& num, const BigNat& den) {
  if (den.is_zero()) throw std::domain_error("divide: zero divisor");
  if (num < den) return {BigNat{}, num};
  if (den.limb_count() == 1) {
    const DoubleLimb d = den.limbs()[0];
    std::vector<Limb> q(num.limb_count());
    DoubleLimb r = 0;
    for (std::size_t i = 0; i < q.size(); ++i) {
      const DoubleLimb cur = (r << kLimbBits) | num.limbs()[i];
      q[i] = static_cast<Limb>(cur / d);
      r = cur % d;
    }
    return {BigNat(std::move(q)), BigNat::from_u64(r)};
  }
  std::vector<Limb> q;
  std::vector<Limb> r;
  detail::long_divide(detail::reversed(num.limbs()), detail::reversed(den.limbs()), q, r);
  return {BigNat(detail::reversed(q)), BigNat(detail::reversed(r))};
}

/// Newton iterate pair; `y` approaches floor(sqrt(x)) from above.
struct NewtonState {
  BigNat y;
  BigNat prev;
};

/// y <- floor((y + floor(x / y)) / 2), remembering the old iterate.
inline void newton_step(NewtonState& state, const BigNat& x) {
  BigNat next = (state.y + divide(x, state.y).first) >> 1;
  state.prev = std::exchange(state.y, std::move(next));
}

inline SqrtResult sqrt_rem_newton(const BigNat& x) {
  if (x.is_zero()) return {};
  // 2^ceil(bits/2) is at least floor(sqrt(x)).
  NewtonState state{BigNat::from_u64(1) << ((x.bit_length() + 1) / 2), BigNat{}};
  for (;;) {
    newton_step(state, x);
    if (state.y >= state.prev) break;
  }
  BigNat y = std::move(state.prev);
  BigNat sq = y * y;
  const BigNat one = BigNat::from_u64(1);
  while (sq > x) {
    y = y - one;
    sq = y * y;
  }
  return {std::move(y), x - sq};
}

}  // namespace bombelli
