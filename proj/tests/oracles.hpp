#pragma once

// Test-only reference computations. None of these go through the modular
// inverse, closed-form, or incremental paths they are used to check: they
// iterate the map directly, scan candidates in order, or enumerate.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "collatz/bigint.hpp"
#include "collatz/parity.hpp"

namespace collatz::oracle {

inline std::uint64_t step_u64(std::uint64_t x) { return (x & 1) ? (3 * x + 1) / 2 : x / 2; }

/// Parity bits of the first n iterates, packed e_1 first into a string.
inline std::string parity_string_u64(std::uint64_t start, std::size_t n) {
  std::string s(n, '0');
  std::uint64_t x = start;
  for (std::size_t j = 0; j < n; ++j) {
    s[j] = (x & 1) ? '1' : '0';
    x = step_u64(x);
  }
  return s;
}

/// Smallest realizer of every length-n vector, found by scanning
/// N = 1, 2, ... and keeping the first N that produces each pattern.
inline std::map<std::string, std::uint64_t> smallest_realizers(std::size_t n) {
  std::map<std::string, std::uint64_t> first;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t N = 1; first.size() < limit; ++N) {
    first.emplace(parity_string_u64(N, n), N);
  }
  return first;
}

/// T^n(N) by n explicit steps.
inline Int iterate(const Int& start, std::size_t n) {
  Int x = start;
  for (std::size_t i = 0; i < n; ++i) x = is_odd(x) ? Int((3 * x + 1) / 2) : Int(x / 2);
  return x;
}

/// Every vector of length n, in lexicographic order of the bitstring.
inline std::vector<ParityVector> all_vectors(std::size_t n) {
  std::vector<ParityVector> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::uint8_t> bits(n);
    for (std::size_t i = 0; i < n; ++i) bits[i] = (mask >> (n - 1 - i)) & 1;
    out.emplace_back(std::move(bits));
  }
  return out;
}

inline ParityVector random_vector(std::mt19937_64& rng, std::size_t min_len, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::bernoulli_distribution coin(0.5);
  std::vector<std::uint8_t> bits(len(rng));
  for (auto& b : bits) b = coin(rng) ? 1 : 0;
  return ParityVector(std::move(bits));
}

/// Random vector that contains at least one 1.
inline ParityVector random_vector_with_one(std::mt19937_64& rng, std::size_t min_len,
                                           std::size_t max_len) {
  for (;;) {
    auto v = random_vector(rng, min_len, max_len);
    if (v.count_ones() > 0) return v;
  }
}

/// P by the defining identity T^n(N) * 2^n - 3^m N for any realizer N,
/// using the brute-force iterate.
inline Int p_from_orbit(const ParityVector& v, const Int& realizer) {
  return iterate(realizer, v.size()) * pow2(v.size()) - pow3(v.count_ones()) * realizer;
}

}  // namespace collatz::oracle
