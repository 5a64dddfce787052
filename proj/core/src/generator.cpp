#include "collatz/generator.hpp"

#include <cctype>
#include <fstream>
#include <iterator>

namespace collatz {

namespace {

std::vector<std::uint8_t> to_bits(std::string_view text, bool allow_empty) {
  // Tolerate a quoted empty head such as head:"";cycle:"01".
  if (text.size() >= 2 && text.front() == '"' && text.back() == '"') {
    text = text.substr(1, text.size() - 2);
  }
  check_bitstring(text, allow_empty);
  std::vector<std::uint8_t> bits(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) bits[i] = static_cast<std::uint8_t>(text[i] - '0');
  return bits;
}

std::string bits_text(const std::vector<std::uint8_t>& bits) {
  std::string s(bits.size(), '0');
  for (std::size_t i = 0; i < bits.size(); ++i) s[i] = static_cast<char>('0' + bits[i]);
  return s;
}

bool starts_with(std::string_view s, std::string_view p) { return s.substr(0, p.size()) == p; }

// True when `cycle` is (01)^k or (10)^k, i.e. its infinite repetition is
// eventually the alternating tail no matter where the head stops.
bool is_alternating_power(const std::vector<std::uint8_t>& cycle) {
  if (cycle.size() % 2 != 0) return false;
  for (std::size_t i = 1; i < cycle.size(); ++i) {
    if (cycle[i] == cycle[i - 1]) return false;
  }
  return true;
}

}  // namespace

GeneratorExhausted::GeneratorExhausted(std::size_t position, std::size_t available)
    : std::runtime_error("bit stream exhausted: position " + std::to_string(position) +
                         " requested but only " + std::to_string(available) +
                         " bits available"),
      position_(position),
      available_(available) {}

std::string_view to_string(Tristate t) {
  switch (t) {
    case Tristate::No: return "no";
    case Tristate::Yes: return "yes";
    case Tristate::Unknown: return "unknown";
  }
  return "unknown";
}

GeneratorSpec GeneratorSpec::parse(std::string_view text) {
  if (starts_with(text, "int:")) {
    Int n = parse_natural(text.substr(4));
    if (n == 0) throw std::invalid_argument("int: generator needs N >= 1");
    return from_integer(std::move(n));
  }
  if (starts_with(text, "bits:")) return bit_stream(to_bits(text.substr(5), false));
  if (starts_with(text, "cycle:")) return head_cycle({}, to_bits(text.substr(6), false));
  if (starts_with(text, "head:")) {
    const auto sep = text.find(";cycle:");
    if (sep == std::string_view::npos) {
      throw std::invalid_argument("head: spec must be followed by ;cycle:<bitstring>");
    }
    return head_cycle(to_bits(text.substr(5, sep - 5), true),
                      to_bits(text.substr(sep + 7), false));
  }
  if (starts_with(text, "file:")) {
    if (text.size() == 5) throw std::invalid_argument("file: spec needs a path");
    return file(std::string(text.substr(5)));
  }
  throw std::invalid_argument("unrecognized generator spec '" + std::string(text) +
                              "' (expected int:, bits:, cycle:, head:...;cycle:, or file:)");
}

GeneratorSpec GeneratorSpec::from_integer(Int start) {
  if (start <= 0) throw DomainError("from-integer generator needs N >= 1");
  GeneratorSpec g;
  g.kind_ = GeneratorKind::FromInteger;
  g.start_ = std::move(start);
  return g;
}

GeneratorSpec GeneratorSpec::head_cycle(std::vector<std::uint8_t> head,
                                        std::vector<std::uint8_t> cycle) {
  if (cycle.empty()) throw std::invalid_argument("cycle must be non-empty");
  for (auto b : head) if (b > 1) throw std::invalid_argument("head bits must be 0/1");
  for (auto b : cycle) if (b > 1) throw std::invalid_argument("cycle bits must be 0/1");
  GeneratorSpec g;
  g.kind_ = GeneratorKind::HeadCycle;
  g.head_ = std::move(head);
  g.cycle_ = std::move(cycle);
  return g;
}

GeneratorSpec GeneratorSpec::bit_stream(std::vector<std::uint8_t> bits) {
  for (auto b : bits) if (b > 1) throw std::invalid_argument("stream bits must be 0/1");
  GeneratorSpec g;
  g.kind_ = GeneratorKind::BitStream;
  g.stream_ = std::move(bits);
  return g;
}

GeneratorSpec GeneratorSpec::file(std::string path) {
  GeneratorSpec g;
  g.kind_ = GeneratorKind::File;
  g.path_ = std::move(path);
  return g;
}

std::string GeneratorSpec::describe() const {
  switch (kind_) {
    case GeneratorKind::FromInteger: return "int:" + to_decimal(start_);
    case GeneratorKind::HeadCycle:
      if (head_.empty()) return "cycle:" + bits_text(cycle_);
      return "head:" + bits_text(head_) + ";cycle:" + bits_text(cycle_);
    case GeneratorKind::BitStream: return "bits:" + bits_text(stream_);
    case GeneratorKind::File: return "file:" + path_;
  }
  return {};
}

Tristate GeneratorSpec::is_b01_shape() const {
  if (kind_ != GeneratorKind::HeadCycle) return Tristate::Unknown;
  return is_alternating_power(cycle_) ? Tristate::Yes : Tristate::No;
}

PrefixGenerator GeneratorSpec::open() const {
  PrefixGenerator g;
  g.kind_ = kind_ == GeneratorKind::File ? GeneratorKind::BitStream : kind_;
  switch (kind_) {
    case GeneratorKind::FromInteger: g.value_ = start_; break;
    case GeneratorKind::HeadCycle:
      g.head_ = head_;
      g.cycle_ = cycle_;
      break;
    case GeneratorKind::BitStream: g.stream_ = stream_; break;
    case GeneratorKind::File: g.stream_ = read_bit_file(path_); break;
  }
  return g;
}

std::optional<int> PrefixGenerator::next() {
  switch (kind_) {
    case GeneratorKind::FromInteger: {
      const int bit = is_odd(value_) ? 1 : 0;
      value_ = collatz_step(value_);
      ++emitted_;
      return bit;
    }
    case GeneratorKind::HeadCycle: {
      const std::size_t i = emitted_++;
      if (i < head_.size()) return head_[i];
      return cycle_[(i - head_.size()) % cycle_.size()];
    }
    case GeneratorKind::BitStream:
    case GeneratorKind::File:
      if (emitted_ >= stream_.size()) return std::nullopt;
      return stream_[emitted_++];
  }
  return std::nullopt;
}

std::optional<std::size_t> PrefixGenerator::capacity() const {
  if (kind_ == GeneratorKind::BitStream || kind_ == GeneratorKind::File) return stream_.size();
  return std::nullopt;
}

ParityVector prefix(const GeneratorSpec& spec, std::size_t j) {
  if (j == 0) throw std::invalid_argument("prefix length must be >= 1");
  PrefixGenerator gen = spec.open();
  std::vector<std::uint8_t> bits;
  bits.reserve(j);
  while (bits.size() < j) {
    auto b = gen.next();
    if (!b) throw GeneratorExhausted(bits.size() + 1, bits.size());
    bits.push_back(static_cast<std::uint8_t>(*b));
  }
  return ParityVector(std::move(bits));
}

std::vector<std::uint8_t> read_bit_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open bit file '" + path + "'");
  std::vector<std::uint8_t> bits;
  std::size_t offset = 0;
  for (std::istreambuf_iterator<char> it(in), end; it != end; ++it, ++offset) {
    const char c = *it;
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c != '0' && c != '1') {
      throw std::invalid_argument("bit file '" + path + "': invalid character at byte " +
                                  std::to_string(offset));
    }
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return bits;
}

}  // namespace collatz
