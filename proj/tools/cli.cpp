#include "cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "collatz/characteristics.hpp"
#include "collatz/fixtures.hpp"
#include "collatz/generator.hpp"
#include "collatz/parity.hpp"
#include "collatz/report.hpp"
#include "collatz/trajectory.hpp"
#include "json.hpp"

#ifndef COLLATZ_DEFAULT_FIXTURES
#define COLLATZ_DEFAULT_FIXTURES "fixtures/paper.jsonl"
#endif

namespace collatz::cli {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string target;
  std::size_t horizon = 256;
  std::size_t window = 32;
  std::size_t count = 1;
  bool json = false;
  bool exact = false;
  int precision = 12;
  std::string out_path;
  std::string fixtures = COLLATZ_DEFAULT_FIXTURES;

  RenderOptions render() const { return {precision, exact}; }
};

ParityVector parse_bits(const std::string& text) {
  try {
    return ParityVector::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("invalid bitstring: ") + e.what());
  }
}

GeneratorSpec parse_spec(const std::string& text) {
  try {
    return GeneratorSpec::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("invalid generator spec: ") + e.what());
  }
}

// Output goes to --out when given, otherwise to the caller's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::runtime_error("cannot open output file '" + path + "'");
      stream_ = file_.get();
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

int cmd_analyze(const Options& o, std::ostream& out) {
  const auto v = parse_bits(o.target);
  Sink sink(o.out_path, out);
  sink.get() << charset_json(char_set(v)) << '\n';
  return kExitOk;
}

int cmd_solve(const Options& o, std::ostream& out) {
  const auto v = parse_bits(o.target);
  if (o.count == 0) throw UsageError("--count must be >= 1");
  Sink sink(o.out_path, out);
  const Int n0 = solve_n0(v);
  const Int step = pow2(v.size());
  if (o.json) {
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t k = 0; k < o.count; ++k) {
      arr.push_back(to_decimal(n0 + step * static_cast<unsigned long>(k)));
    }
    sink.get() << arr.dump() << '\n';
  } else {
    for (std::size_t k = 0; k < o.count; ++k) {
      sink.get() << to_decimal(n0 + step * static_cast<unsigned long>(k)) << '\n';
    }
  }
  return kExitOk;
}

int cmd_xstar(const Options& o, std::ostream& out) {
  const auto v = parse_bits(o.target);
  Sink sink(o.out_path, out);
  const auto d = xstar_decompose(v);
  if (o.json) {
    sink.get() << xstar_json(d) << '\n';
  } else {
    write_xstar_table(sink.get(), d);
  }
  return kExitOk;
}

int cmd_trajectory(const Options& o, std::ostream& out) {
  const auto spec = parse_spec(o.target);
  if (o.horizon == 0) throw UsageError("--horizon must be >= 1");
  Sink sink(o.out_path, out);
  auto& os = sink.get();
  const auto render = o.render();
  write_trajectory_header(os);
  for_each_row(spec, o.horizon, [&](const TrajectoryRow& r) { write_trajectory_row(os, r, render); });
  return kExitOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const auto spec = parse_spec(o.target);
  if (o.horizon == 0) throw UsageError("--horizon must be >= 1");
  if (o.window == 0 || o.window > o.horizon) throw UsageError("--window must be in 1..horizon");
  Sink sink(o.out_path, out);
  const auto v = classify(spec, o.horizon, o.window);
  if (o.json) {
    sink.get() << verdict_json(v, o.render()) << '\n';
  } else {
    write_verdict_text(sink.get(), v, o.render());
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto corpus = load_fixtures(o.fixtures);
  const auto report = run_fixtures(corpus);
  Sink sink(o.out_path, out);
  if (o.json) {
    sink.get() << report_json(report) << '\n';
  } else {
    write_report_text(sink.get(), report);
  }
  return report.failures() == 0 ? kExitOk : kExitVerifyFailed;
}

void add_render_flags(CLI::App* sub, Options& o) {
  sub->add_flag("--exact-rationals", o.exact, "Print rationals as exact p/q");
  sub->add_option("--precision", o.precision, "Digits after the decimal point")
      ->check(CLI::Range(0, 1000));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Characteristic numbers of Collatz parity vectors", "collatz-char"};
  app.require_subcommand(1, 1);

  std::function<int(const Options&, std::ostream&)> handler;

  auto* analyze = app.add_subcommand("analyze", "Print every characteristic number of a bitstring as JSON");
  analyze->add_option("bits", o.target, "Parity vector, e_1 first")->required();
  analyze->add_option("--out", o.out_path, "Write output to a file");
  analyze->callback([&] { handler = cmd_analyze; });

  auto* solve = app.add_subcommand("solve", "Print the smallest realizers N_0, ..., N_(k-1)");
  solve->add_option("bits", o.target, "Parity vector, e_1 first")->required();
  solve->add_option("--count", o.count, "How many realizers to list");
  solve->add_flag("--json", o.json, "JSON array output");
  solve->add_option("--out", o.out_path, "Write output to a file");
  solve->callback([&] { handler = cmd_solve; });

  auto* xstar = app.add_subcommand("xstar", "Print the theta/z/t decomposition of X*");
  xstar->add_option("bits", o.target, "Parity vector, e_1 first")->required();
  xstar->add_flag("--json", o.json, "JSON output");
  xstar->add_option("--out", o.out_path, "Write output to a file");
  xstar->callback([&] { handler = cmd_xstar; });

  auto* traj = app.add_subcommand("trajectory", "Stream order-j rows as CSV");
  traj->add_option("spec", o.target, "Generator spec (int:N, bits:B, cycle:C, head:H;cycle:C, file:PATH)")
      ->required();
  traj->add_option("--horizon", o.horizon, "Number of rows");
  traj->add_option("--out", o.out_path, "Write output to a file");
  add_render_flags(traj, o);
  traj->callback([&] { handler = cmd_trajectory; });

  auto* cls = app.add_subcommand("classify", "Horizon-bounded realizability verdict");
  cls->add_option("spec", o.target, "Generator spec")->required();
  cls->add_option("--horizon", o.horizon, "Number of rows to examine");
  cls->add_option("--window", o.window, "Trailing rows that decide the verdict");
  cls->add_flag("--json", o.json, "JSON output");
  cls->add_option("--out", o.out_path, "Write output to a file");
  add_render_flags(cls, o);
  cls->callback([&] { handler = cmd_classify; });

  auto* verify = app.add_subcommand("verify", "Replay the worked-example fixture corpus");
  verify->add_option("--fixtures", o.fixtures, "Fixture file (JSON lines)");
  verify->add_flag("--json", o.json, "JSON report");
  verify->add_option("--out", o.out_path, "Write output to a file");
  verify->callback([&] { handler = cmd_verify; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    return handler(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FixtureParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace collatz::cli
