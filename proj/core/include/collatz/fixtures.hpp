#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace collatz {

enum class FixtureKind { Charset, PTable, Ab, XStar, N0, Apply, GEval, TrajectoryN0, FixedPoint };

std::string_view to_string(FixtureKind k);

/// One replayable worked example. `input` and every `expected` value are
/// plain text so a case can be re-run from the file alone.
///
/// Input forms by kind:
///   charset, p-table, xstar, n0, fixed-point : <bitstring>
///   ab                                        : <m>,<n>
///   apply, g-eval                             : <bitstring>,<N>
///   trajectory-n0                             : <generator spec> <horizon>
struct FixtureCase {
  std::string id;
  FixtureKind kind = FixtureKind::Charset;
  std::string input;
  std::map<std::string, std::string> expected;
  std::string source;
  std::string note;
  std::size_t line = 0;
};

class FixtureParseError : public std::runtime_error {
 public:
  FixtureParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// One JSON object per line; blank lines are skipped.
std::vector<FixtureCase> parse_fixtures(std::istream& in);
std::vector<FixtureCase> load_fixtures(const std::string& path);

/// Every field the library produces for this case, as text.
std::map<std::string, std::string> evaluate_fixture(const FixtureCase& c);

struct FixtureResult {
  std::string id;
  std::string source;
  bool passed = false;
  std::vector<std::string> diffs;
};

struct FixtureReport {
  std::vector<FixtureResult> results;  // sorted by id
  std::size_t failures() const;
};

FixtureReport run_fixtures(const std::vector<FixtureCase>& corpus);

void write_report_text(std::ostream& out, const FixtureReport& report);
std::string report_json(const FixtureReport& report, int indent = 2);

}  // namespace collatz
