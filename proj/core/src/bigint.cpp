#include "collatz/bigint.hpp"

#include <cctype>

namespace collatz {

Int pow2(std::uint64_t e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

Int pow3(std::uint64_t e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 3, e);
  return r;
}

Int mod_pow2(const Int& x, std::uint64_t e) {
  Int r;
  mpz_fdiv_r_2exp(r.get_mpz_t(), x.get_mpz_t(), e);
  return r;
}

Int exact_shift_right(const Int& x, std::uint64_t e) {
  if (e > 0 && mpz_scan1(x.get_mpz_t(), 0) < e && x != 0) {
    throw std::logic_error("exact_shift_right: value is not divisible by 2^" +
                           std::to_string(e));
  }
  Int r;
  mpz_fdiv_q_2exp(r.get_mpz_t(), x.get_mpz_t(), e);
  return r;
}

Int inverse_mod_pow2(const Int& x, std::uint64_t e) {
  if (!is_odd(x)) {
    throw DomainError("inverse_mod_pow2: even value has no inverse modulo 2^e");
  }
  if (e == 0) return 0;
  // Newton iteration y <- y(2 - xy); each round doubles the number of
  // correct low bits. y = x is correct to 3 bits for any odd x.
  Int y = mod_pow2(x, 3);
  for (std::uint64_t bits = 3; bits < e; bits *= 2) {
    const std::uint64_t next = bits * 2 < e ? bits * 2 : e;
    Int xy = mod_pow2(x * y, next);
    y = mod_pow2(y * (2 - xy), next);
  }
  return mod_pow2(y, e);
}

Int parse_natural(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer");
  for (char ch : text) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
    }
  }
  return Int(std::string(text), 10);
}

std::string to_decimal(const Int& x) { return x.get_str(10); }

Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_fraction_string(const Rational& x) {
  if (x.get_den() == 1) return to_decimal(x.get_num());
  return to_decimal(x.get_num()) + "/" + to_decimal(x.get_den());
}

std::string to_fixed_string(const Rational& x, int digits) {
  if (digits < 0) digits = 0;
  const bool negative = sgn(x) < 0;
  const Int num = abs(x.get_num());
  const Int& den = x.get_den();

  Int scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Int scaled = num * scale;
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
  const int cmp_half = cmp(2 * r, den);
  if (cmp_half > 0 || (cmp_half == 0 && is_odd(q))) q += 1;

  std::string body = to_decimal(q);
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), 1, '.');
  }
  if (negative && q != 0) body.insert(0, 1, '-');
  return body;
}

Rational distance_to_nearest_integer(const Rational& x) {
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  Rational frac = x - Rational(fl);
  Rational other = Rational(1) - frac;
  return frac < other ? frac : other;
}

}  // namespace collatz
