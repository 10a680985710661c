#pragma once

// Shared helpers for the test suites: seeded generators, the defining
// square-root inequalities, and adversarial radicands.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bombelli/bignat.hpp"
#include "bombelli/isqrt.hpp"

namespace bombelli::testing {

inline BigNat big(std::uint64_t v) { return BigNat::from_u64(v); }

/// Empty string when (root, remainder) is the exact square root of x,
/// otherwise a description of the violated condition.
inline std::string sqrt_violation(const BigNat& x, const SqrtResult& r) {
  const BigNat sq = r.root * r.root;
  if (sq > x) return "root^2 > x";
  if (x - sq != r.remainder) return "remainder != x - root^2";
  const BigNat next = r.root + big(1);
  if (next * next <= x) return "(root+1)^2 <= x";
  if (r.remainder > r.root + r.root) return "remainder > 2 root";
  return {};
}

/// Limb pattern with every bit set.
inline BigNat all_ones(std::size_t limbs) {
  return BigNat(std::vector<Limb>(limbs, 0xffffffffu));
}

/// 0, 1, b-1, b, b^2, 2^64-1, all-ones patterns, and y^2 - 1, y^2, y^2 + 1
/// for assorted y, including random ones from `rng`.
template <class Engine>
std::vector<BigNat> adversarial_inputs(Engine& rng) {
  const BigNat b = big(kRadix);
  std::vector<BigNat> out{big(0),           big(1),        big(kRadix - 1), b,
                          b * b,            big(~0ull),    b * b - big(1),  b * b + big(1),
                          big(99),          big(1156),     big(1ull << 63), big((1ull << 63) - 1)};
  for (std::size_t n = 1; n <= 64; ++n) out.push_back(all_ones(n));
  std::vector<BigNat> roots{big(1), big(2), big(kRadix - 1), b, all_ones(3), all_ones(17),
                            BigNat::from_hex("0x80000000000000000000000000000000")};
  for (std::size_t n = 1; n <= 32; ++n) roots.push_back(random_exact_limbs(n, rng));
  for (const BigNat& y : roots) {
    const BigNat sq = y * y;
    out.push_back(sq);
    out.push_back(sq + big(1));
    out.push_back(sq - big(1));
    out.push_back(sq + y + y);  // largest x with this root
  }
  return out;
}

}  // namespace bombelli::testing
