#include "collatz/characteristics.hpp"

#include <stdexcept>

namespace collatz {

namespace {

struct Affine {
  std::size_t n;
  std::size_t m;
  Int P;
};

Affine affine_of(const ParityVector& v) {
  return {v.size(), v.count_ones(), p_closed_form(v)};
}

// 3^m N + P, the numerator of T^n(N) * 2^n.
Int lifted(const Affine& f, const Int& start) { return pow3(f.m) * start + f.P; }

void require_positive(const Int& x, const char* what) {
  if (x <= 0) throw DomainError(std::string(what) + " must be a positive integer");
}

}  // namespace

std::vector<Int> p_recurrence(const ParityVector& v) {
  std::vector<Int> out;
  out.reserve(v.size());
  Int P = 0;
  Int weight = 1;  // 2^(j-1)
  for (std::size_t j = 1; j <= v.size(); ++j) {
    if (v.bit(j)) P = 3 * P + weight;
    out.push_back(P);
    weight <<= 1;
  }
  return out;
}

Int p_closed_form(const ParityVector& v) {
  const auto pos = v.one_positions();
  const std::size_t m = pos.size();
  Int P = 0;
  for (std::size_t i = 1; i <= m; ++i) {
    P += pow3(m - i) * pow2(pos[i - 1] - 1);
  }
  return P;
}

AbTable ab_recurrence(std::size_t m, std::size_t n) {
  if (m == 0) throw DomainError("ab_recurrence: m must be >= 1");
  if (n == 0) throw DomainError("ab_recurrence: n must be >= 1");
  const Int three_m = pow3(m);
  AbTable table{m, n, {}};
  table.steps.reserve(n);
  Int a = 1;
  Int b = (three_m + 1) / 2;
  table.steps.push_back({a, b});
  Int weight = 2;  // 2^(i-1) for the step producing index i
  for (std::size_t i = 2; i <= n; ++i) {
    if (is_odd(b)) {
      a += weight;
      b = (b + three_m) / 2;
    } else {
      b /= 2;
    }
    table.steps.push_back({a, b});
    weight <<= 1;
  }
  return table;
}

AbStep ab_by_inverse(std::size_t m, std::size_t n) {
  if (n == 0) throw DomainError("ab_by_inverse: n must be >= 1");
  const Int three_m = pow3(m);
  const Int modulus = pow2(n);
  Int a = mod_pow2(-inverse_mod_pow2(three_m, n), n);
  // 3^m is odd so the inverse is odd and a lands in [1, 2^n).
  Int b = exact_shift_right(three_m * a + 1, n);
  return {std::move(a), std::move(b)};
}

AbStep ab_family_member(std::size_t m, std::size_t n, const Int& j) {
  const AbStep base = ab_by_inverse(m, n);
  return {base.a + pow2(n) * j, base.b + pow3(m) * j};
}

CharacteristicSet char_set(const ParityVector& v) {
  CharacteristicSet cs;
  cs.n = v.size();
  cs.m = v.count_ones();
  cs.P = p_closed_form(v);
  const Int two_n = pow2(cs.n);
  const Int three_m = pow3(cs.m);
  cs.c = two_n - three_m;
  mpz_fdiv_qr(cs.alpha.get_mpz_t(), cs.beta.get_mpz_t(), cs.P.get_mpz_t(), three_m.get_mpz_t());
  mpz_fdiv_qr(cs.A.get_mpz_t(), cs.B.get_mpz_t(), cs.P.get_mpz_t(), two_n.get_mpz_t());
  cs.N0 = solve_n0(v);
  cs.r0 = make_rational(cs.N0, two_n);
  if (cs.m > 0) {
    AbStep ab = ab_by_inverse(cs.m, cs.n);
    cs.X = cs.P * ab.a;
    cs.Y = cs.P * ab.b;
    cs.a = std::move(ab.a);
    cs.b = std::move(ab.b);
  }
  return cs;
}

Rational g_of(const ParityVector& v, const Int& start) {
  require_positive(start, "g_of: N");
  const Affine f = affine_of(v);
  return make_rational(lifted(f, start), pow2(f.n));
}

bool is_member(const ParityVector& v, const Int& start) {
  require_positive(start, "is_member: N");
  const Affine f = affine_of(v);
  return mod_pow2(lifted(f, start), f.n) == 0;
}

Int apply_vector(const ParityVector& v, const Int& start) {
  require_positive(start, "apply_vector: N");
  const Affine f = affine_of(v);
  const Int num = lifted(f, start);
  const Int residue = mod_pow2(num, f.n);
  if (residue != 0) {
    throw DomainError("apply_vector: " + to_decimal(start) + " does not realize " +
                      v.to_string() + " ((3^m N + P) mod 2^n = " + to_decimal(residue) +
                      ", expected 0)");
  }
  return exact_shift_right(num, f.n);
}

Int solve_n0(const ParityVector& v) {
  const Affine f = affine_of(v);
  const Int inv = inverse_mod_pow2(pow3(f.m), f.n);
  Int n0 = mod_pow2(-f.P * inv, f.n);
  if (n0 == 0) n0 = pow2(f.n);
  return n0;
}

Int nth_realizer(const ParityVector& v, const Int& j) {
  if (j < 0) throw DomainError("nth_realizer: index must be >= 0");
  return solve_n0(v) + pow2(v.size()) * j;
}

std::pair<Int, Int> xy_points(const ParityVector& v) {
  if (v.count_ones() == 0) throw DomainError("xy_points: vector has no ones (m = 0)");
  const Int P = p_closed_form(v);
  const AbStep ab = ab_by_inverse(v.count_ones(), v.size());
  return {P * ab.a, P * ab.b};
}

XStarDecomposition xstar_decompose(const ParityVector& v) {
  const std::size_t m = v.count_ones();
  if (m == 0) throw DomainError("xstar_decompose: vector has no ones (m = 0)");
  const std::size_t n = v.size();
  const auto pos = v.one_positions();

  XStarDecomposition d;
  d.rows.reserve(m);
  d.Xstar = 0;
  d.Ystar = 0;
  for (std::size_t k = 1; k <= m; ++k) {
    const std::size_t j = pos[k - 1];
    const std::size_t e = n - j + 1;
    const Int three_k = pow3(k);
    Int theta = mod_pow2(-inverse_mod_pow2(three_k, e), e);
    Int t = exact_shift_right(three_k * theta + 1, e);
    Int z = theta << static_cast<mp_bitcnt_t>(j - 1);
    d.Xstar += z;
    d.Ystar += pow3(m - k) * t;
    d.rows.push_back({k, j, std::move(theta), std::move(z), std::move(t)});
  }
  const Int X = p_closed_form(v) * ab_by_inverse(m, n).a;
  d.J = exact_shift_right(X - d.Xstar, n);
  return d;
}

Int compose_p(const ParityVector& v1, const ParityVector& v2) {
  return pow3(v2.count_ones()) * p_closed_form(v1) + pow2(v1.size()) * p_closed_form(v2);
}

Int repeat_p(const ParityVector& u, std::size_t k) {
  if (k == 0) throw DomainError("repeat_p: k must be >= 1");
  const std::size_t n = u.size();
  const std::size_t m = u.count_ones();
  const Int num = pow3(k * m) - pow2(k * n);
  const Int den = pow3(m) - pow2(n);  // never zero for n >= 1
  Int quotient;
  Int prod = p_closed_form(u) * num;
  if (!mpz_divisible_p(prod.get_mpz_t(), den.get_mpz_t())) {
    throw std::logic_error("repeat_p: geometric sum is not integral");
  }
  mpz_divexact(quotient.get_mpz_t(), prod.get_mpz_t(), den.get_mpz_t());
  return quotient;
}

OmegaExtremes omega_extremes(std::size_t n, std::size_t m) {
  if (n == 0) throw DomainError("omega_extremes: n must be >= 1");
  if (m > n) throw DomainError("omega_extremes: m must not exceed n");
  std::vector<std::uint8_t> lo(n, 0), hi(n, 0);
  for (std::size_t i = 0; i < m; ++i) {
    lo[i] = 1;
    hi[n - 1 - i] = 1;
  }
  const Int base = pow3(m) - pow2(m);
  return {ParityVector(std::move(lo)), base, ParityVector(std::move(hi)), pow2(n - m) * base};
}

Rational cycle_fixed_point(const ParityVector& u) {
  const Affine f = affine_of(u);
  return make_rational(f.P, pow2(f.n) - pow3(f.m));
}

bool is_positive_integer(const Rational& x) { return x.get_den() == 1 && x.get_num() > 0; }

Int congruence_witness(const ParityVector& v1, const ParityVector& v2, const Int& x1,
                       const Int& x2) {
  if (v1.size() != v2.size()) {
    throw DomainError("congruence_witness: vectors must have the same length");
  }
  if (v2.count_ones() < v1.count_ones()) {
    throw DomainError("congruence_witness: m(v2) must be >= m(v1)");
  }
  if (!is_member(v1, x1)) throw DomainError("congruence_witness: x1 does not realize v1");
  if (!is_member(v2, x2)) throw DomainError("congruence_witness: x2 does not realize v2");
  const Int num = pow3(v2.count_ones() - v1.count_ones()) * x2 * p_closed_form(v1) -
                  x1 * p_closed_form(v2);
  if (mod_pow2(num, v1.size()) != 0) {
    throw std::logic_error("congruence_witness: numerator not divisible by 2^n");
  }
  return exact_shift_right(num, v1.size());
}

}  // namespace collatz
