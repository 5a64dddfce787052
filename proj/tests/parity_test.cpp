#include <gtest/gtest.h>

#include <random>

#include "collatz/bigint.hpp"
#include "collatz/parity.hpp"
#include "oracles.hpp"

namespace collatz {
namespace {

TEST(BigInt, PowersAndResidues) {
  EXPECT_EQ(pow2(10), 1024);
  EXPECT_EQ(pow3(7), 2187);
  EXPECT_EQ(mod_pow2(Int(-1), 4), 15);
  EXPECT_EQ(exact_shift_right(Int(1024), 10), 1);
  EXPECT_THROW(exact_shift_right(Int(1023), 1), std::logic_error);
}

TEST(BigInt, InverseModPow2) {
  for (unsigned e = 1; e <= 40; ++e) {
    for (long x : {1L, 3L, 27L, 2187L, 12345L}) {
      const Int inv = inverse_mod_pow2(Int(x), e);
      EXPECT_EQ(mod_pow2(inv * x, e), 1) << x << " mod 2^" << e;
      EXPECT_LT(inv, pow2(e));
    }
  }
  EXPECT_THROW(inverse_mod_pow2(Int(6), 5), DomainError);
}

TEST(BigInt, ParseNatural) {
  EXPECT_EQ(parse_natural("00313"), 313);
  EXPECT_THROW(parse_natural(""), std::invalid_argument);
  EXPECT_THROW(parse_natural("-3"), std::invalid_argument);
  EXPECT_THROW(parse_natural("1e3"), std::invalid_argument);
}

TEST(BigInt, FixedRenderingRoundsHalfToEven) {
  EXPECT_EQ(to_fixed_string(Rational(1, 8), 2), "0.12");
  EXPECT_EQ(to_fixed_string(Rational(3, 8), 2), "0.38");
  EXPECT_EQ(to_fixed_string(Rational(-1, 3), 3), "-0.333");
  EXPECT_EQ(to_fixed_string(Rational(5, 2), 0), "2");
  EXPECT_EQ(to_fraction_string(make_rational(Int(158), Int(32))), "79/16");
  EXPECT_EQ(to_fraction_string(make_rational(Int(320), Int(32))), "10");
}

TEST(BigInt, DistanceToNearestInteger) {
  EXPECT_EQ(distance_to_nearest_integer(Rational(79, 16)), Rational(1, 16));
  EXPECT_EQ(distance_to_nearest_integer(Rational(10)), Rational(0));
  EXPECT_EQ(distance_to_nearest_integer(Rational(1, 2)), Rational(1, 2));
}

TEST(Parity, StepAndSequence) {
  EXPECT_EQ(collatz_step(Int(11)), 17);
  EXPECT_EQ(collatz_step(Int(10)), 5);
  const std::vector<Int> want{313, 470, 235, 353, 530, 265, 398, 199, 299, 449};
  EXPECT_EQ(collatz_sequence(Int(313), 10), want);
  EXPECT_EQ(parity_vector(Int(313), 10).to_string(), "1011010111");
}

TEST(Parity, RejectsNonPositiveStart) {
  EXPECT_THROW(collatz_step(Int(0)), DomainError);
  EXPECT_THROW(collatz_sequence(Int(-5), 3), DomainError);
  EXPECT_THROW(parity_vector(Int(0), 1), DomainError);
}

TEST(Parity, VectorBasics) {
  const auto v = ParityVector::parse("1101001");
  EXPECT_EQ(v.size(), 7u);
  EXPECT_EQ(v.count_ones(), 4u);
  EXPECT_EQ(v.bit(1), 1);
  EXPECT_EQ(v.bit(3), 0);
  EXPECT_EQ(v.one_positions(), (std::vector<std::size_t>{1, 2, 4, 7}));
  EXPECT_EQ(v.prefix(4).to_string(), "1101");
  EXPECT_EQ(v.concat(ParityVector::parse("01")).to_string(), "110100101");
  EXPECT_EQ(ParityVector::parse("10").repeat(3).to_string(), "101010");
  EXPECT_EQ(ParityVector::zeros(3).to_string(), "000");
  EXPECT_EQ(ParityVector::ones(2).to_string(), "11");
}

TEST(Parity, RejectsMalformedBitstrings) {
  EXPECT_THROW(ParityVector::parse(""), std::invalid_argument);
  EXPECT_THROW(ParityVector::parse("10201"), std::invalid_argument);
  EXPECT_THROW(ParityVector::parse("1 0"), std::invalid_argument);
  EXPECT_NO_THROW(check_bitstring("", true));
}

TEST(Parity, MatchesMachineWordOracle) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::uint64_t> start(1, 1u << 20);
  for (int i = 0; i < 300; ++i) {
    const auto N = start(rng);
    EXPECT_EQ(parity_vector(Int(static_cast<unsigned long>(N)), 24).to_string(),
              oracle::parity_string_u64(N, 24));
  }
}

}  // namespace
}  // namespace collatz
