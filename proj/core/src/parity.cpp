#include "collatz/parity.hpp"

#include <algorithm>
#include <stdexcept>

namespace collatz {

ParityVector::ParityVector(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw std::invalid_argument("parity vector must have length >= 1");
  for (auto b : bits_) {
    if (b > 1) throw std::invalid_argument("parity vector entries must be 0 or 1");
  }
  ones_ = static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

void check_bitstring(std::string_view bits, bool allow_empty) {
  if (bits.empty() && !allow_empty) throw std::invalid_argument("empty bitstring");
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1') {
      throw std::invalid_argument("invalid character '" + std::string(1, bits[i]) +
                                  "' at offset " + std::to_string(i) + " in bitstring");
    }
  }
}

ParityVector ParityVector::parse(std::string_view bits) {
  check_bitstring(bits);
  std::vector<std::uint8_t> out(bits.size());
  std::transform(bits.begin(), bits.end(), out.begin(),
                 [](char c) { return static_cast<std::uint8_t>(c - '0'); });
  return ParityVector(std::move(out));
}

ParityVector ParityVector::zeros(std::size_t n) {
  return ParityVector(std::vector<std::uint8_t>(n, 0));
}

ParityVector ParityVector::ones(std::size_t n) {
  return ParityVector(std::vector<std::uint8_t>(n, 1));
}

int ParityVector::bit(std::size_t j) const {
  if (j == 0 || j > bits_.size()) {
    throw std::out_of_range("bit position " + std::to_string(j) + " outside 1.." +
                            std::to_string(bits_.size()));
  }
  return bits_[j - 1];
}

std::vector<std::size_t> ParityVector::one_positions() const {
  std::vector<std::size_t> pos;
  pos.reserve(ones_);
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) pos.push_back(i + 1);
  }
  return pos;
}

ParityVector ParityVector::prefix(std::size_t j) const {
  if (j == 0 || j > bits_.size()) throw std::out_of_range("prefix length out of range");
  return ParityVector(std::vector<std::uint8_t>(bits_.begin(), bits_.begin() + j));
}

ParityVector ParityVector::concat(const ParityVector& tail) const {
  std::vector<std::uint8_t> out(bits_);
  out.insert(out.end(), tail.bits_.begin(), tail.bits_.end());
  return ParityVector(std::move(out));
}

ParityVector ParityVector::repeat(std::size_t k) const {
  if (k == 0) throw std::invalid_argument("repeat count must be >= 1");
  std::vector<std::uint8_t> out;
  out.reserve(bits_.size() * k);
  for (std::size_t i = 0; i < k; ++i) out.insert(out.end(), bits_.begin(), bits_.end());
  return ParityVector(std::move(out));
}

std::string ParityVector::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) s[i] = static_cast<char>('0' + bits_[i]);
  return s;
}

Int collatz_step(const Int& n) {
  if (n <= 0) throw DomainError("collatz_step: N must be a positive integer");
  if (is_odd(n)) return (3 * n + 1) / 2;
  return n / 2;
}

std::vector<Int> collatz_sequence(const Int& start, std::size_t count) {
  if (start <= 0) throw DomainError("collatz_sequence: N must be a positive integer");
  if (count == 0) throw DomainError("collatz_sequence: length must be >= 1");
  std::vector<Int> terms;
  terms.reserve(count);
  terms.push_back(start);
  while (terms.size() < count) terms.push_back(collatz_step(terms.back()));
  return terms;
}

ParityVector parity_vector(const Int& start, std::size_t length) {
  if (start <= 0) throw DomainError("parity_vector: N must be a positive integer");
  if (length == 0) throw DomainError("parity_vector: length must be >= 1");
  std::vector<std::uint8_t> bits;
  bits.reserve(length);
  Int x = start;
  for (std::size_t j = 0; j < length; ++j) {
    bits.push_back(is_odd(x) ? 1 : 0);
    if (j + 1 < length) x = collatz_step(x);
  }
  return ParityVector(std::move(bits));
}

}  // namespace collatz
