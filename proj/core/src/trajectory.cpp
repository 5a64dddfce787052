#include "collatz/trajectory.hpp"

#include <algorithm>

namespace collatz {

namespace {

// 3^-1 mod 2^e for e >= 1: (2^e + 1)/3 when e is odd, (2^(e+1) + 1)/3 when even.
Int inverse_of_three(std::size_t e) {
  const std::size_t k = (e % 2 == 1) ? e : e + 1;
  return (pow2(k) + 1) / 3;
}

template <class T>
void keep_max(std::optional<T>& acc, const std::optional<T>& x) {
  if (x && (!acc || *x > *acc)) acc = x;
}

DiagnosticRow diagnostics_of(const TrajectoryRow& r) {
  return {r.j,          r.P_over_2n3m(), r.P_over_3m(), r.alpha_over_2n(), r.A_over_3m(),
          r.ab_gap(),   r.m_over_n(),    r.P_over_2n(), r.f2_over_2n()};
}

}  // namespace

Rational TrajectoryRow::r0() const { return make_rational(N0, pow2(j)); }

std::optional<Rational> TrajectoryRow::q() const {
  if (!X) return std::nullopt;
  return make_rational(*X, pow2(j));
}

std::optional<Rational> TrajectoryRow::q_star() const {
  if (!Xstar) return std::nullopt;
  return make_rational(*Xstar, pow2(j));
}

Rational TrajectoryRow::m_over_n() const {
  return make_rational(Int(static_cast<unsigned long>(m)), Int(static_cast<unsigned long>(j)));
}
Rational TrajectoryRow::P_over_2n() const { return make_rational(P, pow2(j)); }
Rational TrajectoryRow::P_over_2n3m() const { return make_rational(P, pow2(j) * pow3(m)); }
Rational TrajectoryRow::P_over_3m() const { return make_rational(P, pow3(m)); }
Rational TrajectoryRow::alpha_over_2n() const { return make_rational(alpha, pow2(j)); }
Rational TrajectoryRow::A_over_3m() const { return make_rational(A, pow3(m)); }

std::optional<Rational> TrajectoryRow::f2_over_2n() const {
  if (!f2) return std::nullopt;
  return make_rational(*f2, pow2(j));
}

std::optional<Rational> TrajectoryRow::ab_gap() const {
  if (!a || !b) return std::nullopt;
  return abs(make_rational(*a, pow2(j)) - make_rational(*b, pow3(m)));
}

TrajectoryBuilder::TrajectoryBuilder() = default;

TrajectoryRow TrajectoryBuilder::push(int bit) {
  if (bit != 0 && bit != 1) throw std::invalid_argument("trajectory bit must be 0 or 1");

  // N0: the two lifts of the residue mod 2^j differ by 2^j, and their
  // images under T^j differ by the odd number 3^m, so exactly one of them
  // has the requested parity next.
  if ((is_odd(image_) ? 1 : 0) != bit) {
    N0_ += two_j_;
    image_ += three_m_;
  }
  if (bit) {
    image_ = (3 * image_ + 1) / 2;
  } else {
    image_ /= 2;
  }

  // a/b halving step at fixed m, length j -> j+1.
  if (is_odd(b_)) {
    a_ += two_j_;
    b_ = (b_ + three_m_) / 2;
  } else {
    b_ /= 2;
  }

  // Lift every theta_k by one bit; each lift adds 2^j to X*.
  for (std::size_t k = 0; k < t_.size(); ++k) {
    if (is_odd(t_[k])) {
      t_[k] = (t_[k] + three_k_[k]) / 2;
      xstar_ += two_j_;
    } else {
      t_[k] /= 2;
    }
  }

  const std::size_t len = j_ + 1;
  if (bit) {
    P_ = 3 * P_ + two_j_;
    ++m_;
    three_m_ *= 3;
    // Re-base 3^m a = -1 to 3^(m+1) a' = -1 at the new length.
    a_ = mod_pow2(a_ * inverse_of_three(len), len);
    b_ = exact_shift_right(three_m_ * a_ + 1, len);
    // New one at position len: theta = 1, t = (3^k + 1)/2, z = 2^(len-1).
    three_k_.push_back(three_m_);
    t_.push_back((three_m_ + 1) / 2);
    xstar_ += two_j_;
  }
  j_ = len;
  two_j_ <<= 1;

  TrajectoryRow row;
  row.j = j_;
  row.m = m_;
  row.P = P_;
  row.c = two_j_ - three_m_;
  row.N0 = N0_;
  mpz_fdiv_q(row.alpha.get_mpz_t(), P_.get_mpz_t(), three_m_.get_mpz_t());
  row.A = P_ >> static_cast<mp_bitcnt_t>(j_);
  row.B = mod_pow2(P_, j_);
  if (m_ > 0) {
    row.a = a_;
    row.b = b_;
    row.X = P_ * a_;
    row.K = exact_shift_right(*row.X - N0_, j_);
    row.Xstar = xstar_;
    row.Kstar = exact_shift_right(xstar_ - N0_, j_);
    row.f2 = mod_pow2(row.B * a_, j_);
  }
  return row;
}

TrajectoryExhausted::TrajectoryExhausted(std::size_t last_complete_row)
    : std::runtime_error("generator exhausted after row " + std::to_string(last_complete_row)),
      last_complete_row_(last_complete_row) {}

void for_each_row(const GeneratorSpec& spec, std::size_t horizon,
                  const std::function<void(const TrajectoryRow&)>& sink) {
  if (horizon == 0) throw std::invalid_argument("horizon must be >= 1");
  PrefixGenerator gen = spec.open();
  TrajectoryBuilder builder;
  while (builder.length() < horizon) {
    auto bit = gen.next();
    if (!bit) throw TrajectoryExhausted(builder.length());
    sink(builder.push(*bit));
  }
}

std::vector<TrajectoryRow> trajectory(const GeneratorSpec& spec, std::size_t horizon) {
  std::vector<TrajectoryRow> rows;
  rows.reserve(horizon);
  for_each_row(spec, horizon, [&](const TrajectoryRow& r) { rows.push_back(r); });
  return rows;
}

std::string_view to_string(R0Step s) {
  return s == R0Step::Halved ? "halved" : "halved-plus-half";
}

R0Step lemma51_check(const TrajectoryRow& row, const TrajectoryRow& next) {
  if (next.j != row.j + 1) throw std::invalid_argument("lemma51_check: rows are not consecutive");
  const Rational half = row.r0() / 2;
  const Rational r = next.r0();
  if (r == half) return R0Step::Halved;
  if (r == half + Rational(1, 2)) return R0Step::HalvedPlusHalf;
  throw std::logic_error("r0 dichotomy violated between rows " + std::to_string(row.j) +
                         " and " + std::to_string(next.j));
}

std::string_view to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Stabilized: return "stabilized";
    case VerdictKind::Growing: return "growing";
    case VerdictKind::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

RealizabilityVerdict classify_rows(const std::vector<TrajectoryRow>& rows, std::size_t window) {
  if (rows.empty()) throw std::invalid_argument("classify: no rows");
  if (window == 0 || window > rows.size()) {
    throw std::invalid_argument("classify: window must be in 1..horizon");
  }
  const std::size_t h = rows.size();
  RealizabilityVerdict v;
  v.horizon = h;
  v.window = window;

  // rows[i] holds j = i + 1; a change "at j" means N0_j != N0_{j-1}.
  const std::size_t window_first_j = h - window + 1;
  v.distinct_count = 1;
  for (std::size_t i = 1; i < h; ++i) {
    if (rows[i].N0 != rows[i - 1].N0) {
      ++v.distinct_count;
      v.last_change = rows[i].j;
      if (rows[i].j > window_first_j) ++v.changes_in_window;
    }
  }
  v.stable_since = v.last_change.value_or(1);

  if (v.changes_in_window == 0) {
    v.kind = VerdictKind::Stabilized;
    v.candidate = rows.back().N0;
  } else if (v.changes_in_window >= 2) {
    v.kind = VerdictKind::Growing;
  } else {
    v.kind = VerdictKind::Inconclusive;
  }

  const std::size_t m_before = window < h ? rows[h - window - 1].m : 0;
  v.zero_tail = rows.back().m == m_before;

  const TrajectoryRow& last = rows.back();
  v.final_r0 = last.r0();
  if (auto q = last.q()) v.q_distance = distance_to_nearest_integer(*q);
  if (auto qs = last.q_star()) v.q_star_distance = distance_to_nearest_integer(*qs);
  v.m_over_n = last.m_over_n();
  v.P_over_2n = last.P_over_2n();
  return v;
}

RealizabilityVerdict classify(const GeneratorSpec& spec, std::size_t horizon, std::size_t window) {
  if (window == 0 || window > horizon) {
    throw std::invalid_argument("classify: window must be in 1..horizon");
  }
  auto v = classify_rows(trajectory(spec, horizon), window);
  v.b01_shape = spec.is_b01_shape();
  return v;
}

AsymptoticReport asymptotic_report(const std::vector<TrajectoryRow>& rows) {
  if (rows.size() < 2) throw std::invalid_argument("asymptotic_report: need at least 2 rows");
  AsymptoticReport rep;
  rep.rows.reserve(rows.size());
  for (const auto& r : rows) rep.rows.push_back(diagnostics_of(r));
  rep.last = rep.rows.back();

  const std::size_t tail_len = (rows.size() + 1) / 2;
  const std::size_t start = rows.size() - tail_len;
  rep.tail_from = rep.rows[start].j;
  DiagnosticRow mx = rep.rows[start];
  for (std::size_t i = start + 1; i < rep.rows.size(); ++i) {
    const DiagnosticRow& d = rep.rows[i];
    mx.j = d.j;
    mx.P_over_2n3m = std::max(mx.P_over_2n3m, d.P_over_2n3m);
    mx.P_over_3m = std::max(mx.P_over_3m, d.P_over_3m);
    mx.alpha_over_2n = std::max(mx.alpha_over_2n, d.alpha_over_2n);
    mx.A_over_3m = std::max(mx.A_over_3m, d.A_over_3m);
    keep_max(mx.ab_gap, d.ab_gap);
    mx.m_over_n = std::max(mx.m_over_n, d.m_over_n);
    mx.P_over_2n = std::max(mx.P_over_2n, d.P_over_2n);
    keep_max(mx.f2_over_2n, d.f2_over_2n);
  }
  rep.tail_max = mx;
  return rep;
}

}  // namespace collatz
