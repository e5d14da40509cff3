#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace gappal::testing {

/// Every string of length exactly `length` over `alphabet`.
inline std::vector<std::string> all_strings(std::string_view alphabet, std::size_t length) {
  std::vector<std::string> out{""};
  for (std::size_t i = 0; i < length; ++i) {
    std::vector<std::string> next;
    next.reserve(out.size() * alphabet.size());
    for (const auto& s : out) {
      for (char c : alphabet) {
        next.push_back(s + c);
      }
    }
    out.swap(next);
  }
  return out;
}

/// Every string of length 1..max_length over `alphabet`.
inline std::vector<std::string> all_strings_up_to(std::string_view alphabet, std::size_t max_length) {
  std::vector<std::string> out;
  for (std::size_t len = 1; len <= max_length; ++len) {
    auto batch = all_strings(alphabet, len);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

inline std::string random_string(std::mt19937_64& rng, std::string_view alphabet, std::size_t length) {
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::string s;
  s.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    s.push_back(alphabet[pick(rng)]);
  }
  return s;
}

/// `count` random strings with lengths uniform in [min_length, max_length].
inline std::vector<std::string> random_corpus(std::uint64_t seed, std::string_view alphabet,
                                              std::size_t count, std::size_t min_length,
                                              std::size_t max_length) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> len(min_length, max_length);
  std::vector<std::string> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(random_string(rng, alphabet, len(rng)));
  }
  return out;
}

inline std::string fibonacci_word(std::size_t length) {
  std::string a = "a";
  std::string b = "ab";
  while (b.size() < length) {
    std::string c = b + a;
    a = std::move(b);
    b = std::move(c);
  }
  return b.substr(0, length);
}

inline std::string repeat(std::string_view unit, std::size_t times) {
  std::string s;
  for (std::size_t i = 0; i < times; ++i) {
    s += unit;
  }
  return s;
}

// The 92-letter HIV-1 fragment used as the worked example for the maximal
// delta-palindrome decomposition.
inline constexpr std::string_view kHivFragment =
    "GGACTCGGCTTGCTGAGGTGCACACAGCAAGAGGCGAGAGCGGCGACTGGTGAGTACGCCAAATTTTGACTAGCGGAGGCTAGAAGGAGAGA";

}  // namespace gappal::testing
