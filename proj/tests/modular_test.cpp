#include <gtest/gtest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "nht/modular.hpp"

using namespace nht;

namespace {

Residue r(std::int64_t v, std::int64_t m) { return Residue(v, Modulus(m)); }

}  // namespace

TEST(Modulus, RejectsOutOfRange) {
  EXPECT_THROW(Modulus(1), InvalidModulus);
  EXPECT_THROW(Modulus(0), InvalidModulus);
  EXPECT_THROW(Modulus(-7), InvalidModulus);
  EXPECT_THROW(Modulus(std::int64_t{1} << 31), InvalidModulus);
  EXPECT_NO_THROW(Modulus((std::int64_t{1} << 31) - 1));
  EXPECT_NO_THROW(Modulus(2));
}

TEST(Residue, NegativeInputsAreReduced) {
  EXPECT_EQ(r(-1, 29).value(), 28U);
  EXPECT_EQ(r(-58, 29).value(), 0U);
  EXPECT_EQ(r(30, 29).value(), 1U);
}

TEST(ModAdd, Examples) {
  EXPECT_EQ(mod_add(r(28, 29), r(28, 29)).value(), 27U);
  EXPECT_EQ(mod_add(r(0, 13), r(9, 13)).value(), 9U);
  EXPECT_EQ(mod_add(r(12, 13), r(1, 13)).value(), 0U);
}

TEST(ModMul, Examples) {
  EXPECT_EQ(mod_mul(r(22, 29), r(20, 29)).value(), 5U);
  EXPECT_EQ(mod_mul(r(0, 29), r(17, 29)).value(), 0U);
  EXPECT_EQ(mod_mul(r(28, 29), r(28, 29)).value(), 1U);
}

TEST(ModMul, LargestModulusIsExact) {
  const std::int64_t m = (std::int64_t{1} << 31) - 1;
  // (m-1)^2 = 1 mod m
  EXPECT_EQ(mod_mul(r(m - 1, m), r(m - 1, m)).value(), 1U);
  // 2^30 * 2 = 2^31 = 1 mod (2^31 - 1)
  EXPECT_EQ(mod_mul(r(std::int64_t{1} << 30, m), r(2, m)).value(), 1U);
}

TEST(ModArith, MismatchedModuliThrow) {
  EXPECT_THROW(mod_add(r(1, 29), r(1, 31)), ModulusMismatch);
  EXPECT_THROW(mod_mul(r(1, 29), r(1, 31)), ModulusMismatch);
}

TEST(ModPow, Examples) {
  EXPECT_EQ(mod_pow(r(2, 13), 12).value(), 1U);
  EXPECT_EQ(mod_pow(r(17, 29), 0).value(), 1U);
  EXPECT_EQ(mod_pow(r(5, 7), 1).value(), 5U);
}

TEST(ModInv, Examples) {
  EXPECT_EQ(mod_inv(r(3, 29)).value(), 10U);
  EXPECT_EQ(mod_inv(r(1, 97)).value(), 1U);
  EXPECT_THROW(mod_inv(r(6, 9)), NotInvertible);
  EXPECT_THROW(mod_inv(r(0, 7)), NotInvertible);
}

TEST(SqrtOfUnity, Examples) {
  EXPECT_EQ(sqrt_of_unity_set(Modulus(29)), (std::vector<std::uint64_t>{1, 28}));
  EXPECT_EQ(sqrt_of_unity_set(Modulus(15)), (std::vector<std::uint64_t>{1, 4, 11, 14}));
  EXPECT_EQ(sqrt_of_unity_set(Modulus(2)), (std::vector<std::uint64_t>{1}));
  EXPECT_EQ(sqrt_of_unity_set(Modulus(8)), (std::vector<std::uint64_t>{1, 3, 5, 7}));
}

TEST(ModularProperties, RandomizedInvariants) {
  std::mt19937_64 rng(20261018);
  const std::vector<std::int64_t> moduli{2, 3, 9, 15, 29, 211, 65536, 999983, (std::int64_t{1} << 31) - 1};
  for (auto mv : moduli) {
    const Modulus m(mv);
    std::uniform_int_distribution<std::int64_t> any(-(std::int64_t{1} << 40), std::int64_t{1} << 40);
    for (int trial = 0; trial < 2000; ++trial) {
      const Residue a(any(rng), m);
      const Residue b(any(rng), m);
      const auto s = mod_add(a, b);
      const auto p = mod_mul(a, b);
      ASSERT_LT(s.value(), m.value());
      ASSERT_LT(p.value(), m.value());
      // Compare against 128-bit arithmetic.
      ASSERT_EQ(p.value(), static_cast<std::uint64_t>((static_cast<unsigned __int128>(a.value()) * b.value()) % m.value()));
      ASSERT_EQ(s.value(), (a.value() + b.value()) % m.value());
      if (m.is_unit(a.value())) {
        ASSERT_EQ(mod_mul(a, mod_inv(a)).value(), 1 % m.value());
      } else {
        ASSERT_THROW(mod_inv(a), NotInvertible);
      }
      if (is_prime(m.value()) && a.value() != 0) {
        ASSERT_EQ(mod_pow(a, m.value() - 1).value(), 1U);
      }
    }
  }
}

TEST(SqrtOfUnity, ClosedUnderNegation) {
  for (std::int64_t mv = 2; mv < 400; ++mv) {
    const Modulus m(mv);
    const auto roots = sqrt_of_unity_set(m);
    for (auto s : roots) {
      EXPECT_TRUE(std::binary_search(roots.begin(), roots.end(), m.neg(s))) << "m=" << mv << " s=" << s;
    }
  }
}

TEST(IsPrime, SmallValues) {
  const std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13, 29, 139, 157, 211, 2147483647};
  for (auto p : primes) EXPECT_TRUE(is_prime(p)) << p;
  for (std::uint64_t c : {0ULL, 1ULL, 4ULL, 9ULL, 15ULL, 221ULL, 2147483646ULL}) EXPECT_FALSE(is_prime(c)) << c;
}
