#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace collatz {

/// Arbitrary-precision signed integer. Every quantity on the computational
/// path uses this type; nothing is truncated to a machine word.
using Int = mpz_class;

/// Exact rational, always kept in canonical (reduced, positive-denominator) form.
using Rational = mpq_class;

/// Raised when an argument lies outside the mathematical domain of an
/// operation (N = 0, a non-member start value, m = 0 where m >= 1 is required).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

Int pow2(std::uint64_t e);
Int pow3(std::uint64_t e);

inline bool is_odd(const Int& x) { return mpz_odd_p(x.get_mpz_t()) != 0; }

/// Least non-negative residue of x modulo 2^e.
Int mod_pow2(const Int& x, std::uint64_t e);

/// x * 2^-e for x divisible by 2^e (exact shift, checked).
Int exact_shift_right(const Int& x, std::uint64_t e);

/// Inverse of an odd x modulo 2^e, in [0, 2^e). For e = 0 the result is 0.
Int inverse_mod_pow2(const Int& x, std::uint64_t e);

/// Parses a non-negative decimal integer; rejects signs, blanks and junk.
Int parse_natural(std::string_view text);

std::string to_decimal(const Int& x);

Rational make_rational(const Int& num, const Int& den);

/// "p/q", or just "p" when the denominator is 1.
std::string to_fraction_string(const Rational& x);

/// Fixed-point rendering with `digits` digits after the point, rounded
/// half-to-even from the exact value.
std::string to_fixed_string(const Rational& x, int digits);

/// Distance from x to the nearest integer, exact.
Rational distance_to_nearest_integer(const Rational& x);

}  // namespace collatz
