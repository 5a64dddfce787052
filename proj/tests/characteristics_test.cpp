#include <gtest/gtest.h>

#include <random>

#include "collatz/characteristics.hpp"
#include "oracles.hpp"

namespace collatz {
namespace {

ParityVector pv(const char* s) { return ParityVector::parse(s); }

TEST(CharSet, WorkedVector1011010111) {
  const auto cs = char_set(pv("1011010111"));
  EXPECT_EQ(cs.n, 10u);
  EXPECT_EQ(cs.m, 7u);
  EXPECT_EQ(cs.P, 5645);
  EXPECT_EQ(cs.c, -1163);
  EXPECT_EQ(*cs.a, 221);
  EXPECT_EQ(*cs.b, 472);
  EXPECT_EQ(cs.alpha, 2);
  EXPECT_EQ(cs.beta, 1271);
  EXPECT_EQ(cs.A, 5);
  EXPECT_EQ(cs.B, 525);
  EXPECT_EQ(cs.N0, 313);
  EXPECT_EQ(*cs.X, 1247545);
  EXPECT_EQ(*cs.Y, 2664440);
  EXPECT_EQ(cs.r0, Rational(313, 1024));
}

TEST(CharSet, AllZerosHasNoAbPair) {
  const auto cs = char_set(pv("0000"));
  EXPECT_EQ(cs.P, 0);
  EXPECT_EQ(cs.N0, 16);
  EXPECT_FALSE(cs.a);
  EXPECT_FALSE(cs.X);
  EXPECT_THROW(xy_points(pv("000")), DomainError);
  EXPECT_THROW(xstar_decompose(pv("000")), DomainError);
}

TEST(PValue, RecurrenceTable) {
  const auto t = p_recurrence(pv("1101001"));
  EXPECT_EQ(t, (std::vector<Int>{1, 5, 5, 23, 23, 23, 133}));
  EXPECT_EQ(p_closed_form(pv("1101001")), 133);
}

TEST(PValue, RecurrenceEqualsClosedFormOnRandomVectors) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 400; ++i) {
    const auto v = oracle::random_vector(rng, 1, 64);
    EXPECT_EQ(p_recurrence(v).back(), p_closed_form(v)) << v.to_string();
  }
}

TEST(PValue, MatchesOrbitOracle) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    const auto v = oracle::random_vector(rng, 1, 40);
    const auto cs = char_set(v);
    EXPECT_EQ(oracle::p_from_orbit(v, cs.N0), cs.P) << v.to_string();
  }
}

TEST(AbPair, WorkedTable) {
  const auto t = ab_recurrence(7, 10);
  EXPECT_EQ(t.a(), 221);
  EXPECT_EQ(t.b(), 472);
  EXPECT_EQ(t.steps[3].a, 13);
  EXPECT_THROW(ab_recurrence(0, 3), DomainError);
}

TEST(AbPair, RecurrenceAgreesWithInverseAndBounds) {
  for (std::size_t m = 1; m <= 24; ++m) {
    for (std::size_t n = 1; n <= 24; ++n) {
      const auto t = ab_recurrence(m, n);
      const auto inv = ab_by_inverse(m, n);
      ASSERT_EQ(t.a(), inv.a) << m << "," << n;
      ASSERT_EQ(t.b(), inv.b) << m << "," << n;
      EXPECT_EQ(pow3(m) * t.a() + 1, pow2(n) * t.b());
      EXPECT_LT(t.a(), pow2(n));
      EXPECT_LT(t.b(), pow3(m));
    }
  }
}

TEST(AbPair, FamilyMember) {
  const auto f = ab_family_member(7, 10, Int(1));
  EXPECT_EQ(f.a, 1245);
  EXPECT_EQ(f.b, 2659);
  EXPECT_EQ(pow3(7) * f.a + 1, pow2(10) * f.b);
}

TEST(AbPair, SharedAcrossOmega) {
  const auto ref = char_set(pv("1110000"));
  for (const auto& v : oracle::all_vectors(7)) {
    if (v.count_ones() != 3) continue;
    const auto cs = char_set(v);
    EXPECT_EQ(*cs.a, *ref.a);
    EXPECT_EQ(*cs.b, *ref.b);
  }
}

TEST(Membership, GAndApply) {
  const auto v = pv("11010");
  EXPECT_EQ(g_of(v, Int(5)), Rational(79, 16));
  EXPECT_EQ(g_of(v, Int(11)), Rational(10));
  EXPECT_FALSE(is_member(v, Int(5)));
  EXPECT_TRUE(is_member(v, Int(11)));
  EXPECT_EQ(apply_vector(pv("1101001"), Int(11)), 8);
  EXPECT_THROW(apply_vector(v, Int(5)), DomainError);
}

TEST(Membership, WholeProgressionRealizes) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const auto v = oracle::random_vector(rng, 1, 30);
    for (unsigned long k : {0ul, 1ul, 7ul, 1000ul}) {
      const Int N = nth_realizer(v, Int(k));
      EXPECT_EQ(parity_vector(N, v.size()), v);
      EXPECT_TRUE(is_member(v, N));
      EXPECT_FALSE(is_member(v, N + 1));
    }
  }
}

TEST(SolveN0, SmallWorkedValues) {
  EXPECT_EQ(solve_n0(pv("101110")), 9);
  EXPECT_EQ(solve_n0(pv("1011010111")), 313);
  EXPECT_EQ(solve_n0(pv("0")), 2);
  EXPECT_EQ(solve_n0(pv("1")), 1);
}

TEST(SolveN0, EqualsScanForLengthsUpToTen) {
  for (std::size_t n = 1; n <= 10; ++n) {
    for (const auto& [bits, N] : oracle::smallest_realizers(n)) {
      ASSERT_EQ(solve_n0(pv(bits.c_str())), static_cast<unsigned long>(N)) << bits;
    }
  }
}

TEST(XY, RealizerPair) {
  const auto [X, Y] = xy_points(pv("1011010111"));
  EXPECT_EQ(X, 1247545);
  EXPECT_EQ(Y, 2664440);
  EXPECT_EQ(oracle::iterate(X, 10), Y);
}

TEST(XStar, Decomposition) {
  const auto d = xstar_decompose(pv("1011010111"));
  std::vector<Int> theta;
  for (const auto& r : d.rows) theta.push_back(r.theta);
  EXPECT_EQ(theta, (std::vector<Int>{341, 199, 109, 15, 5, 3, 1}));
  EXPECT_EQ(d.Xstar, 4409);
  EXPECT_EQ(d.Ystar, 9422);
  EXPECT_EQ(d.J, 1214);
  for (const auto& r : d.rows) {
    EXPECT_EQ(r.z, pow2(r.j - 1) * r.theta);
    EXPECT_EQ(pow3(r.k) * r.theta + 1, r.t * pow2(10 - r.j + 1));
  }
}

TEST(XStar, RandomVectorsRealize) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 150; ++i) {
    const auto v = oracle::random_vector_with_one(rng, 1, 32);
    const auto d = xstar_decompose(v);
    const auto [X, Y] = xy_points(v);
    EXPECT_TRUE(is_member(v, d.Xstar));
    EXPECT_EQ(oracle::iterate(d.Xstar, v.size()), d.Ystar);
    EXPECT_EQ(X - d.Xstar, d.J * pow2(v.size()));
  }
}

TEST(Compose, ConcatenationAndRepetition) {
  EXPECT_EQ(repeat_p(pv("100"), 2), 11);
  for (std::size_t k = 1; k <= 12; ++k) {
    EXPECT_EQ(repeat_p(pv("10"), k), pow2(2 * k) - pow3(k)) << k;
  }
  std::mt19937_64 rng(6);
  for (int i = 0; i < 200; ++i) {
    const auto v1 = oracle::random_vector(rng, 1, 20);
    const auto v2 = oracle::random_vector(rng, 1, 20);
    EXPECT_EQ(compose_p(v1, v2), p_closed_form(v1.concat(v2)));
    const std::size_t k = 1 + i % 5;
    if (pow3(v1.count_ones()) != pow2(v1.size())) {
      EXPECT_EQ(repeat_p(v1, k), p_closed_form(v1.repeat(k)));
    }
  }
}

TEST(Omega, Extremes) {
  const auto e = omega_extremes(10, 7);
  EXPECT_EQ(e.min_P, 2059);
  EXPECT_EQ(e.max_P, 16472);
  EXPECT_EQ(e.min_vector.to_string(), "1111111000");
  EXPECT_EQ(e.max_vector.to_string(), "0001111111");
  EXPECT_THROW(omega_extremes(3, 4), DomainError);
}

TEST(FixedPoint, Cycles) {
  EXPECT_EQ(cycle_fixed_point(pv("100")), Rational(1, 5));
  EXPECT_EQ(cycle_fixed_point(pv("10")), Rational(1));
  EXPECT_EQ(cycle_fixed_point(pv("11010")), Rational(23, 5));
  EXPECT_TRUE(is_positive_integer(cycle_fixed_point(pv("10"))));
  EXPECT_FALSE(is_positive_integer(cycle_fixed_point(pv("100"))));
}

TEST(Congruence, Witness) {
  EXPECT_EQ(congruence_witness(pv("1101001"), pv("1101001"), Int(11), Int(139)), 133);
  EXPECT_ANY_THROW(congruence_witness(pv("1101001"), pv("1101001"), Int(12), Int(139)));
  EXPECT_ANY_THROW(congruence_witness(pv("11"), pv("101"), Int(3), Int(1)));
}

}  // namespace
}  // namespace collatz
