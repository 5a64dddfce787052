#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "collatz/bigint.hpp"

namespace collatz {

/// A finite parity vector (e_1, ..., e_n), n >= 1.
///
/// Positions exposed through `bit()` and `one_positions()` are 1-based so
/// that exponents such as 2^(j-1) read directly off the position. The text
/// form is a left-to-right bitstring with e_1 first.
class ParityVector {
 public:
  /// Throws std::invalid_argument for empty input or characters other than 0/1.
  static ParityVector parse(std::string_view bits);
  static ParityVector zeros(std::size_t n);
  static ParityVector ones(std::size_t n);

  explicit ParityVector(std::vector<std::uint8_t> bits);

  std::size_t size() const { return bits_.size(); }
  std::size_t count_ones() const { return ones_; }

  /// e_j, 1 <= j <= size().
  int bit(std::size_t j) const;
  std::span<const std::uint8_t> bits() const { return bits_; }

  /// j_1 < j_2 < ... < j_m, 1-based.
  std::vector<std::size_t> one_positions() const;

  ParityVector prefix(std::size_t j) const;
  ParityVector concat(const ParityVector& tail) const;
  ParityVector repeat(std::size_t k) const;

  std::string to_string() const;

  friend bool operator==(const ParityVector&, const ParityVector&) = default;

 private:
  std::vector<std::uint8_t> bits_;
  std::size_t ones_ = 0;
};

/// Validates a bitstring without building a vector. Empty strings are
/// accepted only when `allow_empty` is set (head of a head/cycle spec).
void check_bitstring(std::string_view bits, bool allow_empty = false);

/// The shortcut map: N/2 for even N, (3N+1)/2 for odd N. N >= 1.
Int collatz_step(const Int& n);

/// (N, T(N), ..., T^(count-1)(N)).
std::vector<Int> collatz_sequence(const Int& start, std::size_t count);

/// Bit j is the parity of T^(j-1)(N).
ParityVector parity_vector(const Int& start, std::size_t length);

}  // namespace collatz
