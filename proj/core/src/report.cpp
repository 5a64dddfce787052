#include "collatz/report.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace collatz {

using nlohmann::ordered_json;

namespace {

ordered_json opt_int(const std::optional<Int>& x) {
  return x ? ordered_json(to_decimal(*x)) : ordered_json(nullptr);
}

ordered_json opt_rational(const std::optional<Rational>& x, const RenderOptions& opts) {
  return x ? ordered_json(render_rational(*x, opts)) : ordered_json(nullptr);
}

Int int_field(const ordered_json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string()) {
    throw std::invalid_argument(std::string("charset JSON: field '") + key +
                                "' must be a decimal string");
  }
  const auto s = j[key].get<std::string>();
  if (!s.empty() && s[0] == '-') return -parse_natural(std::string_view(s).substr(1));
  return parse_natural(s);
}

std::optional<Int> opt_int_field(const ordered_json& j, const char* key) {
  if (j.contains(key) && j[key].is_null()) return std::nullopt;
  return int_field(j, key);
}

std::size_t size_field(const ordered_json& j, const char* key) {
  const Int v = int_field(j, key);
  if (!v.fits_ulong_p()) throw std::invalid_argument(std::string("charset JSON: '") + key + "' too large");
  return v.get_ui();
}

void cell(std::ostream& out, const std::optional<Int>& x) {
  out << ',';
  if (x) out << to_decimal(*x);
}

void cell(std::ostream& out, const std::optional<Rational>& x, const RenderOptions& opts) {
  out << ',';
  if (x) out << render_rational(*x, opts);
}

}  // namespace

std::string render_rational(const Rational& x, const RenderOptions& opts) {
  return opts.exact_rationals ? to_fraction_string(x) : to_fixed_string(x, opts.precision);
}

std::string charset_json(const CharacteristicSet& cs, int indent) {
  ordered_json j;
  j["n"] = std::to_string(cs.n);
  j["m"] = std::to_string(cs.m);
  j["P"] = to_decimal(cs.P);
  j["c"] = to_decimal(cs.c);
  j["a"] = opt_int(cs.a);
  j["b"] = opt_int(cs.b);
  j["alpha"] = to_decimal(cs.alpha);
  j["beta"] = to_decimal(cs.beta);
  j["A"] = to_decimal(cs.A);
  j["B"] = to_decimal(cs.B);
  j["N0"] = to_decimal(cs.N0);
  j["X"] = opt_int(cs.X);
  j["Y"] = opt_int(cs.Y);
  j["r0_num"] = to_decimal(cs.r0.get_num());
  j["r0_den"] = to_decimal(cs.r0.get_den());
  return j.dump(indent);
}

CharacteristicSet charset_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("charset JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("charset JSON: expected an object");
  CharacteristicSet cs;
  cs.n = size_field(j, "n");
  cs.m = size_field(j, "m");
  cs.P = int_field(j, "P");
  cs.c = int_field(j, "c");
  cs.a = opt_int_field(j, "a");
  cs.b = opt_int_field(j, "b");
  cs.alpha = int_field(j, "alpha");
  cs.beta = int_field(j, "beta");
  cs.A = int_field(j, "A");
  cs.B = int_field(j, "B");
  cs.N0 = int_field(j, "N0");
  cs.X = opt_int_field(j, "X");
  cs.Y = opt_int_field(j, "Y");
  cs.r0 = make_rational(int_field(j, "r0_num"), int_field(j, "r0_den"));
  return cs;
}

std::string check_charset_invariants(const CharacteristicSet& cs) {
  const Int two_n = pow2(cs.n);
  const Int three_m = pow3(cs.m);
  if (cs.n == 0) return "n must be >= 1";
  if (cs.m > cs.n) return "m exceeds n";
  if (cs.c != two_n - three_m) return "c != 2^n - 3^m";
  if (cs.P != three_m * cs.alpha + cs.beta || cs.beta < 0 || cs.beta >= three_m) {
    return "P != 3^m alpha + beta with 0 <= beta < 3^m";
  }
  if (cs.P != two_n * cs.A + cs.B || cs.B < 0 || cs.B >= two_n) {
    return "P != 2^n A + B with 0 <= B < 2^n";
  }
  if (cs.N0 < 1 || cs.N0 > two_n) return "N0 outside [1, 2^n]";
  if (mod_pow2(three_m * cs.N0 + cs.P, cs.n) != 0) return "N0 does not realize the vector";
  if (cs.r0 != make_rational(cs.N0, two_n)) return "r0 != N0 / 2^n";
  if (cs.r0 <= 0 || cs.r0 > 1) return "r0 outside (0, 1]";
  const bool present = cs.a && cs.b && cs.X && cs.Y;
  if (cs.m == 0) {
    if (cs.P != 0) return "P must be 0 when m = 0";
    if (cs.a || cs.b || cs.X || cs.Y) return "a, b, X, Y must be absent when m = 0";
    return {};
  }
  if (!present) return "a, b, X, Y must be present when m >= 1";
  if (three_m * *cs.a + 1 != two_n * *cs.b) return "3^m a + 1 != 2^n b";
  if (*cs.a <= 0 || *cs.a >= two_n) return "a outside (0, 2^n)";
  if (*cs.b <= 0 || *cs.b >= three_m) return "b outside (0, 3^m)";
  const Int lo = three_m - pow2(cs.m);
  if (cs.P < lo || cs.P > pow2(cs.n - cs.m) * lo) return "P outside [3^m - 2^m, 2^(n-m)(3^m - 2^m)]";
  if (*cs.X != cs.P * *cs.a) return "X != P a";
  if (*cs.Y != cs.P * *cs.b) return "Y != P b";
  return {};
}

std::string xstar_json(const XStarDecomposition& d, int indent) {
  ordered_json rows = ordered_json::array();
  for (const auto& r : d.rows) {
    rows.push_back({{"k", r.k},
                    {"j", r.j},
                    {"theta", to_decimal(r.theta)},
                    {"z", to_decimal(r.z)},
                    {"t", to_decimal(r.t)}});
  }
  ordered_json j;
  j["rows"] = std::move(rows);
  j["Xstar"] = to_decimal(d.Xstar);
  j["Ystar"] = to_decimal(d.Ystar);
  j["J"] = to_decimal(d.J);
  return j.dump(indent);
}

void write_xstar_table(std::ostream& out, const XStarDecomposition& d) {
  std::size_t w = 6;
  for (const auto& r : d.rows) {
    w = std::max({w, to_decimal(r.theta).size(), to_decimal(r.z).size(), to_decimal(r.t).size()});
  }
  const int iw = static_cast<int>(w);
  out << std::setw(4) << "k" << std::setw(6) << "j_k" << "  " << std::setw(iw) << "theta_k"
      << "  " << std::setw(iw) << "z_k" << "  " << std::setw(iw) << "t_k" << '\n';
  for (const auto& r : d.rows) {
    out << std::setw(4) << r.k << std::setw(6) << r.j << "  " << std::setw(iw)
        << to_decimal(r.theta) << "  " << std::setw(iw) << to_decimal(r.z) << "  "
        << std::setw(iw) << to_decimal(r.t) << '\n';
  }
  out << "X* = " << to_decimal(d.Xstar) << '\n'
      << "Y* = " << to_decimal(d.Ystar) << '\n'
      << "J  = " << to_decimal(d.J) << '\n';
}

const char* const kTrajectoryCsvHeader =
    "j,n_j,m_j,P_j,c_j,a_j,b_j,N0_j,r0_j,q_j,K_j,Kstar_j,m_over_n,P_over_2n,P_over_2n3m,"
    "alpha_over_2n,A_over_3m,f2_over_2n";

void write_trajectory_header(std::ostream& out) { out << kTrajectoryCsvHeader << '\n'; }

void write_trajectory_row(std::ostream& out, const TrajectoryRow& row, const RenderOptions& opts) {
  out << row.j << ',' << row.n() << ',' << row.m << ',' << to_decimal(row.P) << ','
      << to_decimal(row.c);
  cell(out, row.a);
  cell(out, row.b);
  out << ',' << to_decimal(row.N0) << ',' << render_rational(row.r0(), opts);
  cell(out, row.q(), opts);
  cell(out, row.K);
  cell(out, row.Kstar);
  out << ',' << render_rational(row.m_over_n(), opts) << ','
      << render_rational(row.P_over_2n(), opts) << ','
      << render_rational(row.P_over_2n3m(), opts) << ','
      << render_rational(row.alpha_over_2n(), opts) << ','
      << render_rational(row.A_over_3m(), opts);
  cell(out, row.f2_over_2n(), opts);
  out << '\n';
}

std::string verdict_json(const RealizabilityVerdict& v, const RenderOptions& opts, int indent) {
  ordered_json j;
  j["verdict"] = std::string(to_string(v.kind));
  j["horizon"] = v.horizon;
  j["window"] = v.window;
  j["candidate"] = opt_int(v.candidate);
  j["stable_since"] = v.stable_since ? ordered_json(*v.stable_since) : ordered_json(nullptr);
  j["distinct_count"] = v.distinct_count;
  j["changes_in_window"] = v.changes_in_window;
  j["last_change"] = v.last_change ? ordered_json(*v.last_change) : ordered_json(nullptr);
  j["zero_tail"] = v.zero_tail;
  j["b01_shape"] = std::string(to_string(v.b01_shape));
  j["r0"] = render_rational(v.final_r0, opts);
  j["q_distance"] = opt_rational(v.q_distance, opts);
  j["q_star_distance"] = opt_rational(v.q_star_distance, opts);
  j["m_over_n"] = render_rational(v.m_over_n, opts);
  j["P_over_2n"] = render_rational(v.P_over_2n, opts);
  j["note"] = "verdict is bounded by the horizon; limits are not decided";
  return j.dump(indent);
}

void write_verdict_text(std::ostream& out, const RealizabilityVerdict& v, const RenderOptions& opts) {
  out << "verdict: " << to_string(v.kind) << " (horizon " << v.horizon << ", window " << v.window
      << "; bounded by the horizon, limits are not decided)\n";
  if (v.candidate) out << "candidate: " << to_decimal(*v.candidate) << '\n';
  if (v.stable_since) out << "N0 constant since j = " << *v.stable_since << '\n';
  out << "distinct N0 values: " << v.distinct_count << '\n'
      << "N0 changes in final window: " << v.changes_in_window << '\n';
  if (v.zero_tail) out << "warning: no 1-bit in the final window (m_j stalled)\n";
  out << "eventually (0,1)-periodic shape: " << to_string(v.b01_shape) << '\n'
      << "r0_j: " << render_rational(v.final_r0, opts) << '\n'
      << "dist(q_j, Z): " << (v.q_distance ? render_rational(*v.q_distance, opts) : "n/a") << '\n'
      << "dist(q*_j, Z): "
      << (v.q_star_distance ? render_rational(*v.q_star_distance, opts) : "n/a") << '\n'
      << "m_j/n_j: " << render_rational(v.m_over_n, opts) << '\n'
      << "P_j/2^n_j: " << render_rational(v.P_over_2n, opts) << '\n';
}

}  // namespace collatz
