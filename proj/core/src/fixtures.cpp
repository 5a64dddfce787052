#include "collatz/fixtures.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>

#include "collatz/characteristics.hpp"
#include "collatz/generator.hpp"
#include "collatz/parity.hpp"
#include "collatz/trajectory.hpp"
#include "json.hpp"

namespace collatz {

namespace {

constexpr std::pair<FixtureKind, std::string_view> kKindNames[] = {
    {FixtureKind::Charset, "charset"},     {FixtureKind::PTable, "p-table"},
    {FixtureKind::Ab, "ab"},               {FixtureKind::XStar, "xstar"},
    {FixtureKind::N0, "n0"},               {FixtureKind::Apply, "apply"},
    {FixtureKind::GEval, "g-eval"},        {FixtureKind::TrajectoryN0, "trajectory-n0"},
    {FixtureKind::FixedPoint, "fixed-point"},
};

FixtureKind kind_from_string(std::string_view s) {
  for (const auto& [k, name] : kKindNames) {
    if (name == s) return k;
  }
  throw std::invalid_argument("unknown fixture kind '" + std::string(s) + "'");
}

std::string join(const std::vector<Int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += to_decimal(xs[i]);
  }
  return out;
}

std::string opt(const std::optional<Int>& x) { return x ? to_decimal(*x) : "absent"; }

std::string boolean(bool b) { return b ? "true" : "false"; }

// "<left>,<right>" with both parts non-empty.
std::pair<std::string, std::string> split_pair(const std::string& input) {
  const auto comma = input.find(',');
  if (comma == std::string::npos || comma == 0 || comma + 1 == input.size()) {
    throw std::invalid_argument("expected '<x>,<y>' input, got '" + input + "'");
  }
  return {input.substr(0, comma), input.substr(comma + 1)};
}

std::size_t parse_size(const std::string& s) {
  const Int v = parse_natural(s);
  if (!v.fits_ulong_p()) throw std::invalid_argument("value too large: " + s);
  return v.get_ui();
}

}  // namespace

std::string_view to_string(FixtureKind k) {
  for (const auto& [kind, name] : kKindNames) {
    if (kind == k) return name;
  }
  return "unknown";
}

FixtureParseError::FixtureParseError(std::size_t line, const std::string& what)
    : std::runtime_error("fixture line " + std::to_string(line) + ": " + what), line_(line) {}

std::vector<FixtureCase> parse_fixtures(std::istream& in) {
  std::vector<FixtureCase> cases;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); })) {
      continue;
    }
    try {
      const auto j = nlohmann::json::parse(text);
      FixtureCase c;
      c.line = line;
      c.id = j.at("id").get<std::string>();
      c.kind = kind_from_string(j.at("kind").get<std::string>());
      c.input = j.at("input").get<std::string>();
      c.source = j.at("source").get<std::string>();
      if (j.contains("note")) c.note = j["note"].get<std::string>();
      const auto& exp = j.at("expected");
      if (!exp.is_object() || exp.empty()) {
        throw std::invalid_argument("'expected' must be a non-empty object");
      }
      for (const auto& [key, value] : exp.items()) c.expected[key] = value.get<std::string>();
      if (c.id.empty()) throw std::invalid_argument("empty id");
      if (c.source.rfind("Example", 0) != 0 && c.source.rfind("Table", 0) != 0) {
        throw std::invalid_argument("source must name an Example or a Table");
      }
      cases.push_back(std::move(c));
    } catch (const nlohmann::json::exception& e) {
      throw FixtureParseError(line, e.what());
    } catch (const std::invalid_argument& e) {
      throw FixtureParseError(line, e.what());
    }
  }
  return cases;
}

std::vector<FixtureCase> load_fixtures(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture file '" + path + "'");
  return parse_fixtures(in);
}

std::map<std::string, std::string> evaluate_fixture(const FixtureCase& c) {
  std::map<std::string, std::string> out;
  switch (c.kind) {
    case FixtureKind::Charset: {
      const auto cs = char_set(ParityVector::parse(c.input));
      out["n"] = std::to_string(cs.n);
      out["m"] = std::to_string(cs.m);
      out["P"] = to_decimal(cs.P);
      out["c"] = to_decimal(cs.c);
      out["a"] = opt(cs.a);
      out["b"] = opt(cs.b);
      out["alpha"] = to_decimal(cs.alpha);
      out["beta"] = to_decimal(cs.beta);
      out["A"] = to_decimal(cs.A);
      out["B"] = to_decimal(cs.B);
      out["N0"] = to_decimal(cs.N0);
      out["X"] = opt(cs.X);
      out["Y"] = opt(cs.Y);
      out["r0"] = to_fraction_string(cs.r0);
      break;
    }
    case FixtureKind::PTable: {
      const auto table = p_recurrence(ParityVector::parse(c.input));
      out["P_table"] = join(table);
      out["P"] = to_decimal(table.back());
      break;
    }
    case FixtureKind::Ab: {
      const auto [m, n] = split_pair(c.input);
      const auto table = ab_recurrence(parse_size(m), parse_size(n));
      out["a"] = to_decimal(table.a());
      out["b"] = to_decimal(table.b());
      for (std::size_t i = 0; i < table.steps.size(); ++i) {
        out["a_" + std::to_string(i + 1)] = to_decimal(table.steps[i].a);
        out["b_" + std::to_string(i + 1)] = to_decimal(table.steps[i].b);
      }
      break;
    }
    case FixtureKind::XStar: {
      const auto d = xstar_decompose(ParityVector::parse(c.input));
      std::vector<Int> j, theta, z, t;
      for (const auto& r : d.rows) {
        j.emplace_back(static_cast<unsigned long>(r.j));
        theta.push_back(r.theta);
        z.push_back(r.z);
        t.push_back(r.t);
      }
      out["j"] = join(j);
      out["theta"] = join(theta);
      out["z"] = join(z);
      out["t"] = join(t);
      out["Xstar"] = to_decimal(d.Xstar);
      out["Ystar"] = to_decimal(d.Ystar);
      out["J"] = to_decimal(d.J);
      break;
    }
    case FixtureKind::N0: {
      const auto v = ParityVector::parse(c.input);
      for (unsigned long k = 0; k < 16; ++k) {
        out["N" + std::to_string(k)] = to_decimal(nth_realizer(v, Int(k)));
      }
      break;
    }
    case FixtureKind::Apply: {
      const auto [bits, start] = split_pair(c.input);
      const auto v = ParityVector::parse(bits);
      const Int N = parse_natural(start);
      out["member"] = boolean(is_member(v, N));
      out["sequence"] = join(collatz_sequence(N, v.size()));
      out["parity"] = parity_vector(N, v.size()).to_string();
      if (out["member"] == "true") out["result"] = to_decimal(apply_vector(v, N));
      break;
    }
    case FixtureKind::GEval: {
      const auto [bits, start] = split_pair(c.input);
      const auto v = ParityVector::parse(bits);
      const Int N = parse_natural(start);
      out["g"] = to_fraction_string(g_of(v, N));
      out["member"] = boolean(is_member(v, N));
      break;
    }
    case FixtureKind::TrajectoryN0: {
      const auto space = c.input.find_last_of(' ');
      if (space == std::string::npos) {
        throw std::invalid_argument("trajectory-n0 input must be '<spec> <horizon>'");
      }
      const auto spec = GeneratorSpec::parse(c.input.substr(0, space));
      const auto rows = trajectory(spec, parse_size(c.input.substr(space + 1)));
      std::vector<Int> n0;
      std::string r0;
      for (const auto& r : rows) {
        n0.push_back(r.N0);
        if (!r0.empty()) r0 += ',';
        r0 += to_fraction_string(r.r0());
      }
      out["N0"] = join(n0);
      out["r0"] = r0;
      break;
    }
    case FixtureKind::FixedPoint: {
      const auto x = cycle_fixed_point(ParityVector::parse(c.input));
      out["fixed_point"] = to_fraction_string(x);
      out["positive_integer"] = boolean(is_positive_integer(x));
      break;
    }
  }
  return out;
}

std::size_t FixtureReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.passed; }));
}

FixtureReport run_fixtures(const std::vector<FixtureCase>& corpus) {
  FixtureReport report;
  for (const auto& c : corpus) {
    FixtureResult r{c.id, c.source, true, {}};
    try {
      const auto actual = evaluate_fixture(c);
      for (const auto& [key, want] : c.expected) {
        const auto it = actual.find(key);
        if (it == actual.end()) {
          r.diffs.push_back(key + ": no such field for kind " + std::string(to_string(c.kind)));
        } else if (it->second != want) {
          r.diffs.push_back(key + ": expected " + want + ", got " + it->second);
        }
      }
    } catch (const std::exception& e) {
      r.diffs.push_back(std::string("error: ") + e.what());
    }
    r.passed = r.diffs.empty();
    report.results.push_back(std::move(r));
  }
  std::stable_sort(report.results.begin(), report.results.end(),
                   [](const auto& a, const auto& b) { return a.id < b.id; });
  return report;
}

void write_report_text(std::ostream& out, const FixtureReport& report) {
  for (const auto& r : report.results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.id << "  [" << r.source << "]\n";
    for (const auto& d : r.diffs) out << "    " << d << '\n';
  }
  out << report.results.size() - report.failures() << '/' << report.results.size()
      << " fixtures passed\n";
}

std::string report_json(const FixtureReport& report, int indent) {
  nlohmann::ordered_json cases = nlohmann::ordered_json::array();
  for (const auto& r : report.results) {
    cases.push_back({{"id", r.id}, {"source", r.source}, {"passed", r.passed}, {"diffs", r.diffs}});
  }
  nlohmann::ordered_json j;
  j["total"] = report.results.size();
  j["failures"] = report.failures();
  j["cases"] = std::move(cases);
  return j.dump(indent);
}

}  // namespace collatz
