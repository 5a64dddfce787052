#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "collatz/bigint.hpp"
#include "collatz/generator.hpp"

namespace collatz {

/// Order-j characteristic numbers of the prefix R_j(V).
///
/// Columns built on a_j (a, b, X, q, K, f2) are absent while m_j = 0.
struct TrajectoryRow {
  std::size_t j = 0;
  std::size_t m = 0;
  Int P;
  Int c;
  std::optional<Int> a;
  std::optional<Int> b;
  Int N0;
  std::optional<Int> X;
  std::optional<Int> K;  ///< (X - N0) / 2^j
  std::optional<Int> Xstar;
  std::optional<Int> Kstar;  ///< (X* - N0) / 2^j
  Int alpha;                 ///< P div 3^m
  Int A;                     ///< P div 2^j
  Int B;                     ///< P mod 2^j
  std::optional<Int> f2;     ///< (B a) mod 2^j

  std::size_t n() const { return j; }
  Rational r0() const;
  std::optional<Rational> q() const;
  std::optional<Rational> q_star() const;
  Rational m_over_n() const;
  Rational P_over_2n() const;
  Rational P_over_2n3m() const;
  Rational P_over_3m() const;
  Rational alpha_over_2n() const;
  Rational A_over_3m() const;
  std::optional<Rational> f2_over_2n() const;
  /// |a/2^n - b/3^m|
  std::optional<Rational> ab_gap() const;
};

/// Extends the order-j numbers one bit at a time. Each push costs a
/// constant number of big-integer operations plus one addition per one
/// already seen (for X*).
class TrajectoryBuilder {
 public:
  TrajectoryBuilder();

  /// Consumes e_{j+1} and returns row j+1.
  TrajectoryRow push(int bit);

  std::size_t length() const { return j_; }

 private:
  std::size_t j_ = 0;
  std::size_t m_ = 0;
  Int P_ = 0;
  Int two_j_ = 1;
  Int three_m_ = 1;
  Int N0_ = 1;
  Int image_ = 1;  // T^j(N0)
  Int a_ = 0;      // 3^m a + 1 = 2^j b, maintained also for m = 0
  Int b_ = 1;
  Int xstar_ = 0;
  std::vector<Int> t_;        // t_k for each one seen so far
  std::vector<Int> three_k_;  // 3^k matching t_
};

/// Rows j = 1..horizon. Throws TrajectoryExhausted when a bit stream runs short.
std::vector<TrajectoryRow> trajectory(const GeneratorSpec& spec, std::size_t horizon);

/// Streaming variant; `sink` sees each row as soon as it is computed.
void for_each_row(const GeneratorSpec& spec, std::size_t horizon,
                  const std::function<void(const TrajectoryRow&)>& sink);

class TrajectoryExhausted : public std::runtime_error {
 public:
  explicit TrajectoryExhausted(std::size_t last_complete_row);
  std::size_t last_complete_row() const { return last_complete_row_; }

 private:
  std::size_t last_complete_row_;
};

enum class R0Step { Halved, HalvedPlusHalf };

std::string_view to_string(R0Step s);

/// Which of r0' = r0/2 or r0' = r0/2 + 1/2 links two consecutive rows.
/// Throws std::logic_error when neither holds.
R0Step lemma51_check(const TrajectoryRow& row, const TrajectoryRow& next);

enum class VerdictKind { Stabilized, Growing, Inconclusive };

std::string_view to_string(VerdictKind k);

/// Horizon-bounded realizability verdict.
///
/// Counting the N0 changes among the final `window` rows: none means
/// stabilized, two or more means growing, exactly one is inconclusive.
struct RealizabilityVerdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  std::size_t horizon = 0;
  std::size_t window = 0;
  std::optional<Int> candidate;            ///< stabilized only
  std::optional<std::size_t> stable_since;  ///< first j of the final constant run
  std::size_t distinct_count = 0;          ///< distinct N0_j values over the horizon
  std::size_t changes_in_window = 0;
  std::optional<std::size_t> last_change;  ///< j at which N0 last changed
  bool zero_tail = false;                  ///< no 1-bit inside the final window
  Tristate b01_shape = Tristate::Unknown;

  // Final-row diagnostics.
  Rational final_r0;
  std::optional<Rational> q_distance;
  std::optional<Rational> q_star_distance;
  Rational m_over_n;
  Rational P_over_2n;
};

RealizabilityVerdict classify(const GeneratorSpec& spec, std::size_t horizon, std::size_t window);

/// Same rule applied to rows that are already computed.
RealizabilityVerdict classify_rows(const std::vector<TrajectoryRow>& rows, std::size_t window);

struct DiagnosticRow {
  std::size_t j = 0;
  Rational P_over_2n3m;
  Rational P_over_3m;
  Rational alpha_over_2n;
  Rational A_over_3m;
  std::optional<Rational> ab_gap;
  Rational m_over_n;
  Rational P_over_2n;
  std::optional<Rational> f2_over_2n;
};

struct AsymptoticReport {
  std::vector<DiagnosticRow> rows;
  DiagnosticRow last;
  /// Column-wise maxima over the final ceil(rows/2) rows.
  DiagnosticRow tail_max;
  std::size_t tail_from = 0;
};

AsymptoticReport asymptotic_report(const std::vector<TrajectoryRow>& rows);

}  // namespace collatz
