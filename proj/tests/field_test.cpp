#include "cftft/field.hpp"

#include <gtest/gtest.h>

#include <random>

namespace cftft {
namespace {

TEST(PrimalityTest, SmallValues) {
  EXPECT_FALSE(is_prime_u64(0));
  EXPECT_FALSE(is_prime_u64(1));
  EXPECT_TRUE(is_prime_u64(2));
  EXPECT_TRUE(is_prime_u64(3));
  EXPECT_FALSE(is_prime_u64(4));
  EXPECT_TRUE(is_prime_u64(17));
  EXPECT_FALSE(is_prime_u64(15));
  EXPECT_FALSE(is_prime_u64(561));   // Carmichael
  EXPECT_FALSE(is_prime_u64(6601));  // Carmichael
  EXPECT_TRUE(is_prime_u64(7681));
}

TEST(PrimalityTest, LargeValues) {
  EXPECT_TRUE(is_prime_u64(RingCtx::kGoldilocks));
  EXPECT_FALSE(is_prime_u64(RingCtx::kGoldilocks - 1));
  EXPECT_FALSE(is_prime_u64(~u64{0}));
  EXPECT_TRUE(is_prime_u64(0xffffffffffffffc5ull));  // largest 64-bit prime
}

TEST(FieldArith, Mod17Examples) {
  const RingCtx ctx(17, 4);
  EXPECT_EQ(ctx.add(Fp{9}, Fp{12}), Fp{4});
  EXPECT_EQ(ctx.mul(Fp{3}, Fp{6}), Fp{1});
  EXPECT_EQ(ctx.sub(Fp{3}, Fp{5}), Fp{15});
  EXPECT_EQ(ctx.neg(Fp{5}), Fp{12});
  EXPECT_EQ(ctx.neg(Fp{0}), Fp{0});
}

TEST(FieldArith, PowExamples) {
  const RingCtx ctx(17, 4);
  EXPECT_EQ(ctx.pow(Fp{3}, 4), Fp{13});
  EXPECT_EQ(ctx.pow(Fp{3}, 16), Fp{1});  // Fermat
  EXPECT_EQ(ctx.pow(Fp{0}, 0), Fp{1});
  EXPECT_EQ(ctx.pow(Fp{11}, 0), Fp{1});
}

TEST(FieldArith, InvExamples) {
  const RingCtx ctx(17, 4);
  EXPECT_EQ(ctx.inv(Fp{2}), Fp{9});
  EXPECT_EQ(ctx.inv(Fp{1}), Fp{1});
  EXPECT_EQ(ctx.inv(Fp{3}), Fp{6});
  EXPECT_THROW(ctx.inv(Fp{0}), ZeroInverse);
}

TEST(FieldArith, HalfExamples) {
  const RingCtx ctx(17, 4);
  EXPECT_EQ(ctx.half(Fp{11}), Fp{14});
  EXPECT_EQ(ctx.half(Fp{0}), Fp{0});
  EXPECT_EQ(ctx.half(Fp{2}), Fp{1});
  EXPECT_EQ(ctx.mul(ctx.inv_two(), Fp{2}), Fp{1});
}

TEST(RingCtxTest, Mod17RootIsThree) {
  const RingCtx ctx(17, 4);
  EXPECT_EQ(ctx.root_order(), 16u);
  EXPECT_EQ(ctx.omega(), Fp{3});
  EXPECT_EQ(ctx.pow(ctx.omega(), 8), Fp{16});
  // Exhaustive order check: 3^k != 1 for 0 < k < 16.
  Fp acc{1};
  for (int k = 1; k < 16; ++k) {
    acc = ctx.mul(acc, Fp{3});
    EXPECT_NE(acc, Fp{1}) << "order divides " << k;
  }
  EXPECT_EQ(ctx.mul(acc, Fp{3}), Fp{1});
}

TEST(RingCtxTest, RejectsBadParameters) {
  EXPECT_THROW(RingCtx(17, 5), NoRootOfUnity);  // 32 does not divide 16
  EXPECT_THROW(RingCtx(15, 1), NotPrime);
  EXPECT_THROW(RingCtx(2, 1), NoRootOfUnity);
  EXPECT_THROW(RingCtx(17, 0), std::invalid_argument);
  EXPECT_THROW(RingCtx(RingCtx::kGoldilocks, 33), NoRootOfUnity);
}

TEST(RingCtxTest, GoldilocksRoot) {
  const RingCtx ctx(RingCtx::kGoldilocks, 32);
  const u64 p = RingCtx::kGoldilocks;
  // 2, 3 and 5 all have even order; 7 is the first candidate that works.
  EXPECT_EQ(ctx.omega(), ctx.pow(Fp{7}, (p - 1) >> 32));
  EXPECT_EQ(ctx.pow(ctx.omega(), u64{1} << 31), Fp{p - 1});
  EXPECT_EQ(ctx.pow(ctx.omega(), u64{1} << 32), Fp{1});
}

TEST(RingCtxTest, GoldilocksReductionMatchesGeneric) {
  const RingCtx ctx(RingCtx::kGoldilocks, 32);
  const u64 p = RingCtx::kGoldilocks;
  const u64 interesting[] = {0,       1,           2,          p - 1, p - 2,
                             1u << 31, u64{1} << 32, (u64{1} << 32) - 1,
                             (u64{1} << 32) + 1,    p / 2,     p / 3};
  for (u64 a : interesting) {
    for (u64 b : interesting) {
      const u64 want = static_cast<u64>(static_cast<u128>(a) * b % p);
      EXPECT_EQ(ctx.mul(Fp{a}, Fp{b}).v, want) << a << " * " << b;
    }
  }
  std::mt19937_64 rng(12345);
  for (int i = 0; i < 20000; ++i) {
    const u64 a = rng() % p;
    const u64 b = rng() % p;
    const u64 want = static_cast<u64>(static_cast<u128>(a) * b % p);
    ASSERT_EQ(ctx.mul(Fp{a}, Fp{b}).v, want) << a << " * " << b;
  }
}

class FieldProperties : public ::testing::TestWithParam<std::pair<u64, unsigned>> {};

TEST_P(FieldProperties, InverseAndHalving) {
  const auto [p, m] = GetParam();
  const RingCtx ctx(p, m);
  std::mt19937_64 rng(99);
  for (int i = 0; i < 500; ++i) {
    const Fp a{rng() % p};
    if (a.v != 0) EXPECT_EQ(ctx.mul(a, ctx.inv(a)), Fp{1});
    EXPECT_EQ(ctx.half(ctx.add(a, a)), a);
    EXPECT_EQ(ctx.add(a, ctx.neg(a)), Fp{0});
    EXPECT_EQ(ctx.sub(Fp{0}, a), ctx.neg(a));
  }
}

TEST_P(FieldProperties, RootOfUnityLadder) {
  const auto [p, m] = GetParam();
  const RingCtx ctx(p, m);
  const u64 M = ctx.root_order();
  EXPECT_EQ(ctx.omega_pow(0), Fp{1});
  EXPECT_EQ(ctx.omega_pow(M), Fp{1});
  EXPECT_EQ(ctx.omega_pow(M / 2), Fp{p - 1});
  EXPECT_EQ(ctx.omega_pow(3), ctx.omega_pow(3 + M));  // periodicity
  EXPECT_EQ(ctx.omega_pow(0 - u64{5}), ctx.omega_pow(M - 5));
  for (u64 L = 1; L <= M; L *= 2) {
    const Fp w_L = ctx.omega_pow(M / L);
    EXPECT_EQ(ctx.pow(w_L, L), Fp{1});
    if (L >= 2) EXPECT_EQ(ctx.pow(w_L, L / 2), Fp{p - 1});  // principal
  }
}

INSTANTIATE_TEST_SUITE_P(Rings, FieldProperties,
                         ::testing::Values(std::pair<u64, unsigned>{17, 4},
                                           std::pair<u64, unsigned>{97, 5},
                                           std::pair<u64, unsigned>{7681, 9},
                                           std::pair<u64, unsigned>{RingCtx::kGoldilocks,
                                                                    32}));

}  // namespace
}  // namespace cftft
