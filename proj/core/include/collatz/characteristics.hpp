#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "collatz/bigint.hpp"
#include "collatz/parity.hpp"

namespace collatz {

/// Every characteristic number of one finite parity vector v.
///
/// With m = 0 the vector is pure halving: P = 0, N0 = 2^n, and the
/// quantities built on the equation 3^m a + 1 = 2^n b (a, b, X, Y) are
/// absent.
struct CharacteristicSet {
  std::size_t n = 0;
  std::size_t m = 0;
  Int P;
  Int c;  ///< 2^n - 3^m
  std::optional<Int> a;
  std::optional<Int> b;
  Int alpha;  ///< P div 3^m
  Int beta;   ///< P mod 3^m
  Int A;      ///< P div 2^n
  Int B;      ///< P mod 2^n
  Int N0;
  std::optional<Int> X;  ///< P * a
  std::optional<Int> Y;  ///< P * b
  Rational r0;           ///< N0 / 2^n
};

struct XStarRow {
  std::size_t k = 0;  ///< 1-based index among the ones
  std::size_t j = 0;  ///< 1-based position of the k-th one
  Int theta;
  Int z;  ///< 2^(j-1) * theta
  Int t;  ///< (3^k theta + 1) / 2^(n-j+1)
};

struct XStarDecomposition {
  std::vector<XStarRow> rows;
  Int Xstar;
  Int Ystar;
  Int J;  ///< (X - Xstar) / 2^n
};

struct AbStep {
  Int a;
  Int b;
};

/// Def-3.1 style table (a_{m,i}, b_{m,i}) for i = 1..n; back() is the answer.
struct AbTable {
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<AbStep> steps;
  const Int& a() const { return steps.back().a; }
  const Int& b() const { return steps.back().b; }
};

struct OmegaExtremes {
  ParityVector min_vector;
  Int min_P;
  ParityVector max_vector;
  Int max_P;
};

CharacteristicSet char_set(const ParityVector& v);

/// P_1, ..., P_n with P_j = P_{j-1} (e_j = 0) or 3 P_{j-1} + 2^(j-1) (e_j = 1).
std::vector<Int> p_recurrence(const ParityVector& v);

/// Sum over one-positions j_1 < ... < j_m of 3^(m-i) 2^(j_i - 1).
Int p_closed_form(const ParityVector& v);

/// Iterates the a/b halving recurrence for fixed m >= 1 up to length n.
AbTable ab_recurrence(std::size_t m, std::size_t n);

/// Least positive a with 3^m a = -1 (mod 2^n), and the matching b. Used
/// by char_set; must agree with ab_recurrence.
AbStep ab_by_inverse(std::size_t m, std::size_t n);

/// (a + 2^n j, b + 3^m j).
AbStep ab_family_member(std::size_t m, std::size_t n, const Int& j);

/// (3^m N + P) / 2^n, reduced.
Rational g_of(const ParityVector& v, const Int& start);

bool is_member(const ParityVector& v, const Int& start);

/// T^n(N) for a member N. Throws DomainError otherwise.
Int apply_vector(const ParityVector& v, const Int& start);

/// Unique N in [1, 2^n] whose first n parities spell v.
Int solve_n0(const ParityVector& v);

/// N0 + 2^n j.
Int nth_realizer(const ParityVector& v, const Int& j);

/// (X, Y) = (P a, P b). Requires m >= 1.
std::pair<Int, Int> xy_points(const ParityVector& v);

XStarDecomposition xstar_decompose(const ParityVector& v);

/// P(v1 ++ v2) from the parts: 3^m(v2) P(v1) + 2^n(v1) P(v2).
Int compose_p(const ParityVector& v1, const ParityVector& v2);

/// P(u repeated k times) = P(u) (3^(km) - 2^(kn)) / (3^m - 2^n).
Int repeat_p(const ParityVector& u, std::size_t k);

/// Smallest and largest P over all vectors of length n with m ones.
OmegaExtremes omega_extremes(std::size_t n, std::size_t m);

/// P(u) / (2^n - 3^m): the rational fixed point of x -> (3^m x + P) / 2^n.
Rational cycle_fixed_point(const ParityVector& u);

/// True when `x` is a positive integer, i.e. a periodic orbit candidate.
bool is_positive_integer(const Rational& x);

/// (3^(m2-m1) x2 P(v1) - x1 P(v2)) / 2^n for members x1 of v1, x2 of v2.
Int congruence_witness(const ParityVector& v1, const ParityVector& v2, const Int& x1,
                       const Int& x2);

}  // namespace collatz
