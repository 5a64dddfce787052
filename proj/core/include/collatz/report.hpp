#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "collatz/bigint.hpp"
#include "collatz/characteristics.hpp"
#include "collatz/trajectory.hpp"

namespace collatz {

struct RenderOptions {
  int precision = 12;
  bool exact_rationals = false;
};

std::string render_rational(const Rational& x, const RenderOptions& opts);

/// Unbounded integers are emitted as decimal strings, absent values as null.
std::string charset_json(const CharacteristicSet& cs, int indent = 2);

/// Inverse of charset_json. Throws std::invalid_argument on schema errors.
CharacteristicSet charset_from_json(const std::string& text);

/// Checks the identities a CharacteristicSet must satisfy; returns an empty
/// string when all hold, otherwise a description of the first violation.
std::string check_charset_invariants(const CharacteristicSet& cs);

std::string xstar_json(const XStarDecomposition& d, int indent = 2);
void write_xstar_table(std::ostream& out, const XStarDecomposition& d);

extern const char* const kTrajectoryCsvHeader;

void write_trajectory_header(std::ostream& out);
void write_trajectory_row(std::ostream& out, const TrajectoryRow& row, const RenderOptions& opts);

std::string verdict_json(const RealizabilityVerdict& v, const RenderOptions& opts, int indent = 2);
void write_verdict_text(std::ostream& out, const RealizabilityVerdict& v, const RenderOptions& opts);

}  // namespace collatz
