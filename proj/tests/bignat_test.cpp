#include <gtest/gtest.h>

#include <random>
#include <string>

#include "bombelli/bignat.hpp"
#include "support.hpp"

namespace bombelli {
namespace {

using testing::big;

std::vector<Limb> limbs_of(const BigNat& x) { return {x.limbs().begin(), x.limbs().end()}; }

TEST(BigNatDecimal, ParsesExamples) {
  EXPECT_TRUE(from_decimal("0").limbs().empty());
  EXPECT_EQ(limbs_of(from_decimal("4294967296")), (std::vector<Limb>{1, 0}));
  EXPECT_EQ(limbs_of(from_decimal("1156")), (std::vector<Limb>{1156}));
  EXPECT_EQ(limbs_of(from_decimal("000123")), (std::vector<Limb>{123}));
}

TEST(BigNatDecimal, FormatsExamples) {
  EXPECT_EQ(to_decimal(BigNat{}), "0");
  EXPECT_EQ(to_decimal(BigNat({1, 0})), "4294967296");
  EXPECT_EQ(to_decimal(BigNat({4294967295u})), "4294967295");
  // 2^96 + 1, cross-checked with Python.
  EXPECT_EQ(to_decimal(BigNat({1, 0, 0, 1})), "79228162514264337593543950337");
}

TEST(BigNatDecimal, RejectsMalformed) {
  EXPECT_THROW(from_decimal(""), std::invalid_argument);
  EXPECT_THROW(from_decimal("12a"), std::invalid_argument);
  EXPECT_THROW(from_decimal("-5"), std::invalid_argument);
  EXPECT_THROW(from_decimal(" 5"), std::invalid_argument);
}

TEST(BigNatDecimal, RoundTripCanonicalizes) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> len(1, 200);
  std::uniform_int_distribution<int> digit(0, 9);
  for (int iter = 0; iter < 500; ++iter) {
    std::string s;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) s += static_cast<char>('0' + digit(rng));
    std::string canon = s.substr(std::min(s.find_first_not_of('0'), s.size()));
    if (canon.empty()) canon = "0";
    EXPECT_EQ(to_decimal(from_decimal(s)), canon);
  }
}

TEST(BigNatHex, Parses) {
  EXPECT_EQ(BigNat::from_hex("0x100000000"), BigNat({1, 0}));
  EXPECT_EQ(BigNat::from_hex("0xFFFFFFFFffffffff"), big(~0ull));
  EXPECT_EQ(BigNat::from_hex("0x0"), BigNat{});
  EXPECT_EQ(BigNat({0xdeadbeef, 7}).to_hex(), "0xdeadbeef00000007");
  EXPECT_THROW(BigNat::from_hex("123"), std::invalid_argument);
  EXPECT_THROW(BigNat::from_hex("0xg"), std::invalid_argument);
}

TEST(BigNatBits, BitLength) {
  EXPECT_EQ(bit_length(BigNat{}), 0u);
  EXPECT_EQ(bit_length(BigNat({1, 0})), 33u);
  EXPECT_EQ(bit_length(BigNat({4294967295u})), 32u);
  EXPECT_EQ(bit_length(big(1)), 1u);
}

TEST(BigNatCompare, Examples) {
  EXPECT_EQ(compare(BigNat{}, BigNat{}), std::strong_ordering::equal);
  EXPECT_EQ(compare(BigNat({1, 0}), BigNat({4294967295u})), std::strong_ordering::greater);
  EXPECT_EQ(BigNat({0, 0, 5}), big(5));
}

TEST(BigNatCompare, AgreesWithDecimalOrderAndSuccessor) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> len(0, 6);
  auto dec_less = [](const std::string& a, const std::string& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  };
  for (int iter = 0; iter < 2000; ++iter) {
    const BigNat x = random_of_limbs(len(rng), rng);
    const BigNat y = random_of_limbs(len(rng), rng);
    EXPECT_EQ(x < y, dec_less(to_decimal(x), to_decimal(y)));
    EXPECT_LT(x, x + big(1));
  }
}

TEST(BigNatRandom, Properties) {
  EXPECT_TRUE(random_of_limbs(0, 123).is_zero());
  const BigNat a = random_of_limbs(4, 42);
  EXPECT_LE(bit_length(a), 128u);
  EXPECT_EQ(a, random_of_limbs(4, 42));
  EXPECT_NE(a, random_of_limbs(4, 43));
  std::mt19937_64 rng(1);
  for (std::size_t n = 0; n < 40; ++n) {
    EXPECT_LE(random_of_limbs(n, rng).limb_count(), n);
    EXPECT_EQ(random_exact_limbs(n, rng).limb_count(), n);
  }
}

TEST(LimbWindowTest, StripLeadingZeros) {
  LimbWindow w({0, 0, 5}, 0, 3);
  const LimbWindow s = strip_leading_zeros(w);
  EXPECT_EQ(s.begin, 2u);
  EXPECT_EQ(s.value(), big(5));

  const LimbWindow z = strip_leading_zeros(LimbWindow({0, 0, 0}, 1, 3));
  EXPECT_EQ(z.begin, z.end);
  EXPECT_TRUE(z.value().is_zero());

  const LimbWindow one = strip_leading_zeros(LimbWindow({7}, 0, 1));
  EXPECT_EQ(one.begin, 0u);
  EXPECT_EQ(one.end, 1u);

  EXPECT_THROW(LimbWindow({1, 2}, 2, 1), std::out_of_range);
  EXPECT_THROW(LimbWindow({1, 2}, 0, 3), std::out_of_range);
}

TEST(LimbWindowTest, StripPreservesValue) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<std::size_t> len(0, 8);
  std::bernoulli_distribution zero(0.5);
  for (int iter = 0; iter < 500; ++iter) {
    std::vector<Limb> buf(len(rng));
    for (Limb& l : buf) l = zero(rng) ? 0 : static_cast<Limb>(rng());
    std::uniform_int_distribution<std::size_t> pick(0, buf.size());
    std::size_t b = pick(rng), e = pick(rng);
    if (b > e) std::swap(b, e);
    const LimbWindow w(buf, b, e);
    EXPECT_EQ(strip_leading_zeros(w).value(), w.value());
  }
}

TEST(BigNatArith, AddSubMulShift) {
  const BigNat b = big(kRadix);
  EXPECT_EQ(big(~0ull) + big(1), BigNat({1, 0, 0}));
  EXPECT_EQ(BigNat({1, 0, 0}) - big(1), big(~0ull));
  EXPECT_THROW(big(1) - big(2), std::domain_error);
  EXPECT_EQ(big(kRadix - 1) * big(kRadix + 1), big(~0ull));
  EXPECT_EQ(b * b, BigNat({1, 0, 0}));
  EXPECT_EQ(big(3) << 64, BigNat({3, 0, 0}));
  EXPECT_EQ(big(3) << 33, BigNat({6, 0}));
  EXPECT_EQ(BigNat({6, 0}) >> 33, big(3));
  EXPECT_EQ(BigNat({1, 0, 0}) >> 96, BigNat{});
  EXPECT_EQ(BigNat({0x80000000u, 1}) >> 1, big(0x4000000000000000ull));
}

TEST(BigNatArith, ShiftAndProductAgainstU64) {
  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 2000; ++iter) {
    const std::uint64_t a = rng() >> 32;
    const std::uint64_t c = rng() >> 32;
    EXPECT_EQ(big(a) * big(c), big(a * c));
    const std::uint64_t v = rng();
    const unsigned k = static_cast<unsigned>(rng() % 64);
    EXPECT_EQ(big(v) >> k, big(v >> k));
    EXPECT_EQ((big(v) << k) >> k, big(v));
  }
}

}  // namespace
}  // namespace bombelli
