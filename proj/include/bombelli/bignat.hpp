#pragma once

// Multiprecision natural numbers in radix 2^32.
//
// Limbs are stored big-endian (index 0 is the most significant limb) and a
// canonical value never carries a leading zero limb, so zero is the empty
// sequence. Only the arithmetic needed by the square-root routines and their
// test oracles is provided.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bombelli {

using Limb = std::uint32_t;
using DoubleLimb = std::uint64_t;

inline constexpr int kLimbBits = 32;
inline constexpr DoubleLimb kRadix = DoubleLimb{1} << kLimbBits;
inline constexpr DoubleLimb kLimbMask = kRadix - 1;

namespace detail {

inline std::size_t leading_zero_limbs(std::span<const Limb> limbs) noexcept {
  std::size_t i = 0;
  while (i < limbs.size() && limbs[i] == 0) ++i;
  return i;
}

inline std::uint64_t bit_length(std::span<const Limb> limbs) noexcept {
  const std::size_t lz = leading_zero_limbs(limbs);
  if (lz == limbs.size()) return 0;
  return static_cast<std::uint64_t>(limbs.size() - lz) * kLimbBits -
         static_cast<std::uint64_t>(std::countl_zero(limbs[lz]));
}

inline std::strong_ordering compare(std::span<const Limb> a,
                                    std::span<const Limb> b) noexcept {
  a = a.subspan(leading_zero_limbs(a));
  b = b.subspan(leading_zero_limbs(b));
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace detail

class BigNat {
 public:
  BigNat() = default;

  /// Takes big-endian limbs; leading zeros are dropped.
  explicit BigNat(std::vector<Limb> limbs) : limbs_(std::move(limbs)) {
    canonicalize();
  }

  static BigNat from_u64(std::uint64_t v) {
    return BigNat(std::vector<Limb>{static_cast<Limb>(v >> kLimbBits),
                                    static_cast<Limb>(v & kLimbMask)});
  }

  static BigNat from_limbs(std::span<const Limb> limbs) {
    return BigNat(std::vector<Limb>(limbs.begin(), limbs.end()));
  }

  /// Parses a non-empty string of decimal digits.
  static BigNat from_decimal(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("from_decimal: empty string");
    for (char c : s) {
      if (c < '0' || c > '9') {
        throw std::invalid_argument("from_decimal: non-digit character in \"" +
                                    std::string(s) + "\"");
      }
    }
    // Consume nine digits at a time: 10^9 < 2^32.
    BigNat out;
    std::size_t pos = 0;
    const std::size_t head = s.size() % 9 == 0 ? 9 : s.size() % 9;
    std::size_t take = head;
    while (pos < s.size()) {
      Limb chunk = 0;
      Limb scale = 1;
      for (std::size_t k = 0; k < take; ++k) {
        chunk = chunk * 10 + static_cast<Limb>(s[pos + k] - '0');
        scale *= 10;
      }
      out.mul_add_small(scale, chunk);
      pos += take;
      take = 9;
    }
    return out;
  }

  /// Parses "0x"-prefixed hexadecimal, used by test fixtures.
  static BigNat from_hex(std::string_view s) {
    if (s.size() < 3 || s[0] != '0' || (s[1] != 'x' && s[1] != 'X')) {
      throw std::invalid_argument("from_hex: expected 0x prefix");
    }
    s.remove_prefix(2);
    std::vector<Limb> limbs((s.size() + 7) / 8, 0);
    // Fill from the least significant nibble.
    for (std::size_t k = 0; k < s.size(); ++k) {
      const char c = s[s.size() - 1 - k];
      Limb nib;
      if (c >= '0' && c <= '9') {
        nib = static_cast<Limb>(c - '0');
      } else if (c >= 'a' && c <= 'f') {
        nib = static_cast<Limb>(c - 'a' + 10);
      } else if (c >= 'A' && c <= 'F') {
        nib = static_cast<Limb>(c - 'A' + 10);
      } else {
        throw std::invalid_argument("from_hex: invalid digit");
      }
      limbs[limbs.size() - 1 - k / 8] |= nib << (4 * (k % 8));
    }
    return BigNat(std::move(limbs));
  }

  std::string to_decimal() const {
    if (is_zero()) return "0";
    std::vector<Limb> work = limbs_;
    std::vector<Limb> chunks;  // base 10^9, least significant first
    std::size_t begin = 0;
    while (begin < work.size()) {
      DoubleLimb rem = 0;
      for (std::size_t i = begin; i < work.size(); ++i) {
        const DoubleLimb cur = (rem << kLimbBits) | work[i];
        work[i] = static_cast<Limb>(cur / 1000000000u);
        rem = cur % 1000000000u;
      }
      chunks.push_back(static_cast<Limb>(rem));
      while (begin < work.size() && work[begin] == 0) ++begin;
    }
    std::string out = std::to_string(chunks.back());
    for (std::size_t i = chunks.size() - 1; i-- > 0;) {
      const std::string part = std::to_string(chunks[i]);
      out.append(9 - part.size(), '0');
      out += part;
    }
    return out;
  }

  std::string to_hex() const {
    if (is_zero()) return "0x0";
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out = "0x";
    bool started = false;
    for (Limb l : limbs_) {
      for (int shift = 28; shift >= 0; shift -= 4) {
        const Limb nib = (l >> shift) & 0xf;
        if (nib != 0 || started) {
          out += kDigits[nib];
          started = true;
        }
      }
    }
    return out;
  }

  std::span<const Limb> limbs() const noexcept { return limbs_; }
  std::size_t limb_count() const noexcept { return limbs_.size(); }
  bool is_zero() const noexcept { return limbs_.empty(); }

  std::uint64_t bit_length() const noexcept { return detail::bit_length(limbs_); }

  /// Value as a 64-bit integer; throws when it does not fit.
  std::uint64_t to_u64() const {
    if (limbs_.size() > 2) throw std::overflow_error("BigNat::to_u64: too large");
    std::uint64_t v = 0;
    for (Limb l : limbs_) v = (v << kLimbBits) | l;
    return v;
  }

  friend bool operator==(const BigNat&, const BigNat&) = default;
  friend std::strong_ordering operator<=>(const BigNat& a, const BigNat& b) noexcept {
    return detail::compare(a.limbs_, b.limbs_);
  }

  friend BigNat operator+(const BigNat& a, const BigNat& b) {
    const BigNat& longer = a.limbs_.size() >= b.limbs_.size() ? a : b;
    const BigNat& shorter = &longer == &a ? b : a;
    std::vector<Limb> out(longer.limbs_.size() + 1, 0);
    DoubleLimb carry = 0;
    std::size_t i = longer.limbs_.size();
    std::size_t j = shorter.limbs_.size();
    std::size_t k = out.size();
    while (i > 0) {
      DoubleLimb sum = carry + longer.limbs_[--i];
      if (j > 0) sum += shorter.limbs_[--j];
      out[--k] = static_cast<Limb>(sum);
      carry = sum >> kLimbBits;
    }
    out[0] = static_cast<Limb>(carry);
    return BigNat(std::move(out));
  }

  /// Throws std::domain_error when b > a.
  friend BigNat operator-(const BigNat& a, const BigNat& b) {
    if (a < b) throw std::domain_error("BigNat subtraction would be negative");
    std::vector<Limb> out = a.limbs_;
    std::int64_t borrow = 0;
    std::size_t j = b.limbs_.size();
    for (std::size_t i = out.size(); i-- > 0;) {
      std::int64_t diff = static_cast<std::int64_t>(out[i]) + borrow;
      if (j > 0) diff -= b.limbs_[--j];
      out[i] = static_cast<Limb>(diff);
      borrow = diff >> kLimbBits;
      if (j == 0 && borrow == 0) break;
    }
    return BigNat(std::move(out));
  }

  /// Schoolbook product.
  friend BigNat operator*(const BigNat& a, const BigNat& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const std::size_t na = a.limbs_.size();
    const std::size_t nb = b.limbs_.size();
    std::vector<Limb> out(na + nb, 0);
    for (std::size_t i = na; i-- > 0;) {
      DoubleLimb carry = 0;
      const DoubleLimb ai = a.limbs_[i];
      if (ai == 0) continue;
      for (std::size_t j = nb; j-- > 0;) {
        const std::size_t k = i + j + 1;
        const DoubleLimb t = ai * b.limbs_[j] + out[k] + carry;
        out[k] = static_cast<Limb>(t);
        carry = t >> kLimbBits;
      }
      out[i] = static_cast<Limb>(carry);
    }
    return BigNat(std::move(out));
  }

  friend BigNat operator<<(const BigNat& a, std::uint64_t bits) {
    if (a.is_zero()) return {};
    const std::size_t whole = bits / kLimbBits;
    const int part = static_cast<int>(bits % kLimbBits);
    std::vector<Limb> out(a.limbs_.size() + whole + 1, 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
      const DoubleLimb v = static_cast<DoubleLimb>(a.limbs_[i]) << part;
      out[i] |= static_cast<Limb>(v >> kLimbBits);
      out[i + 1] |= static_cast<Limb>(v);
    }
    return BigNat(std::move(out));
  }

  friend BigNat operator>>(const BigNat& a, std::uint64_t bits) {
    const std::size_t whole = bits / kLimbBits;
    if (whole >= a.limbs_.size()) return {};
    const int part = static_cast<int>(bits % kLimbBits);
    const std::size_t n = a.limbs_.size() - whole;
    std::vector<Limb> out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      DoubleLimb v = a.limbs_[i];
      if (i > 0) v |= static_cast<DoubleLimb>(a.limbs_[i - 1]) << kLimbBits;
      out[i] = static_cast<Limb>(v >> part);
    }
    return BigNat(std::move(out));
  }

  /// this = this * scale + addend, in place.
  void mul_add_small(Limb scale, Limb addend) {
    DoubleLimb carry = addend;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
      const DoubleLimb t = static_cast<DoubleLimb>(limbs_[i]) * scale + carry;
      limbs_[i] = static_cast<Limb>(t);
      carry = t >> kLimbBits;
    }
    if (carry != 0) limbs_.insert(limbs_.begin(), static_cast<Limb>(carry));
    canonicalize();
  }

 private:
  void canonicalize() {
    const std::size_t lz = detail::leading_zero_limbs(limbs_);
    if (lz != 0) limbs_.erase(limbs_.begin(), limbs_.begin() + static_cast<std::ptrdiff_t>(lz));
  }

  std::vector<Limb> limbs_;
};

inline BigNat from_decimal(std::string_view s) { return BigNat::from_decimal(s); }
inline std::string to_decimal(const BigNat& x) { return x.to_decimal(); }
inline std::uint64_t bit_length(const BigNat& x) noexcept { return x.bit_length(); }
inline std::strong_ordering compare(const BigNat& x, const BigNat& y) noexcept {
  return x <=> y;
}

/// Half-open window [begin, end) into a working limb buffer, read big-endian.
struct LimbWindow {
  std::vector<Limb> buffer;
  std::size_t begin = 0;
  std::size_t end = 0;

  LimbWindow() = default;
  LimbWindow(std::vector<Limb> buf, std::size_t b, std::size_t e)
      : buffer(std::move(buf)), begin(b), end(e) {
    if (begin > end || end > buffer.size()) {
      throw std::out_of_range("LimbWindow: require begin <= end <= buffer size");
    }
  }

  /// Window covering a copy of x's limbs.
  static LimbWindow of(const BigNat& x) {
    std::vector<Limb> buf(x.limbs().begin(), x.limbs().end());
    const std::size_t n = buf.size();
    return LimbWindow(std::move(buf), 0, n);
  }

  std::span<const Limb> view() const noexcept {
    return std::span<const Limb>(buffer).subspan(begin, end - begin);
  }
  std::size_t size() const noexcept { return end - begin; }
  bool empty() const noexcept { return begin == end; }
  BigNat value() const { return BigNat::from_limbs(view()); }
};

/// Advances begin past zero limbs; the value is unchanged.
inline LimbWindow strip_leading_zeros(LimbWindow w) {
  while (w.begin < w.end && w.buffer[w.begin] == 0) ++w.begin;
  return w;
}

/// Uniform value in [0, 2^(32 n)) drawn from a caller-owned engine.
template <class Engine>
BigNat random_of_limbs(std::size_t n, Engine& rng) {
  std::vector<Limb> limbs(n);
  std::uniform_int_distribution<Limb> dist;
  for (Limb& l : limbs) l = dist(rng);
  return BigNat(std::move(limbs));
}

/// Deterministic for a given seed. The engine is std::mt19937_64.
inline BigNat random_of_limbs(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_of_limbs(n, rng);
}

/// Random value with exactly n limbs (leading limb nonzero); zero for n == 0.
template <class Engine>
BigNat random_exact_limbs(std::size_t n, Engine& rng) {
  if (n == 0) return {};
  std::vector<Limb> limbs(n);
  std::uniform_int_distribution<Limb> dist;
  std::uniform_int_distribution<Limb> lead(1, static_cast<Limb>(kLimbMask));
  limbs[0] = lead(rng);
  for (std::size_t i = 1; i < n; ++i) limbs[i] = dist(rng);
  return BigNat(std::move(limbs));
}

}  // namespace bombelli
