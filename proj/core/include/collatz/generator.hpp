#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "collatz/bigint.hpp"
#include "collatz/parity.hpp"

namespace collatz {

/// A bit-stream source ran out before the requested position.
class GeneratorExhausted : public std::runtime_error {
 public:
  GeneratorExhausted(std::size_t position, std::size_t available);
  /// 1-based position that could not be produced.
  std::size_t position() const { return position_; }
  /// Number of bits the source actually held.
  std::size_t available() const { return available_; }

 private:
  std::size_t position_;
  std::size_t available_;
};

enum class GeneratorKind { FromInteger, HeadCycle, BitStream, File };

enum class Tristate { No, Yes, Unknown };

std::string_view to_string(Tristate t);

class PrefixGenerator;

/// Immutable description of an infinite (or, for bit streams, finite) parity
/// vector V. Text grammar:
///
///   int:<N>   bits:<bitstring>   cycle:<bitstring>
///   head:<bitstring>;cycle:<bitstring>   file:<path>
class GeneratorSpec {
 public:
  static GeneratorSpec parse(std::string_view text);

  static GeneratorSpec from_integer(Int start);
  static GeneratorSpec head_cycle(std::vector<std::uint8_t> head, std::vector<std::uint8_t> cycle);
  static GeneratorSpec bit_stream(std::vector<std::uint8_t> bits);
  static GeneratorSpec file(std::string path);

  GeneratorKind kind() const { return kind_; }
  const Int& start() const { return start_; }
  const std::vector<std::uint8_t>& head() const { return head_; }
  const std::vector<std::uint8_t>& cycle() const { return cycle_; }
  const std::vector<std::uint8_t>& stream() const { return stream_; }
  const std::string& path() const { return path_; }

  /// Canonical text form; parse(describe()) reproduces the spec.
  std::string describe() const;

  /// Syntactic membership of the eventually-(0,1)-periodic family. Only
  /// head/cycle specs can be decided; everything else answers Unknown.
  Tristate is_b01_shape() const;

  /// Fresh stream positioned before e_1. File specs read the file here.
  PrefixGenerator open() const;

 private:
  GeneratorKind kind_ = GeneratorKind::BitStream;
  Int start_;
  std::vector<std::uint8_t> head_;
  std::vector<std::uint8_t> cycle_;
  std::vector<std::uint8_t> stream_;
  std::string path_;
};

/// Stateful iterator over e_1, e_2, ... One consumer at a time; open the
/// spec again for an independent stream.
class PrefixGenerator {
 public:
  /// Next bit, or std::nullopt when a finite source is exhausted.
  std::optional<int> next();
  std::size_t emitted() const { return emitted_; }
  /// Total bits for finite sources, std::nullopt for infinite ones.
  std::optional<std::size_t> capacity() const;

 private:
  friend class GeneratorSpec;
  GeneratorKind kind_ = GeneratorKind::BitStream;
  Int value_;
  std::vector<std::uint8_t> head_;
  std::vector<std::uint8_t> cycle_;
  std::vector<std::uint8_t> stream_;
  std::size_t emitted_ = 0;
};

/// R_j(V) = (e_1, ..., e_j). Throws GeneratorExhausted for short streams.
ParityVector prefix(const GeneratorSpec& spec, std::size_t j);

/// Reads a bit file, ignoring whitespace. Throws std::invalid_argument on
/// any other character, std::runtime_error when the file cannot be read.
std::vector<std::uint8_t> read_bit_file(const std::string& path);

}  // namespace collatz
