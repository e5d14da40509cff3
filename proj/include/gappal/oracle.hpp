#pragma once

// Brute-force reference implementations. They share no code with the fast
// algorithms and are meant for small inputs only.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gappal/alphabet.hpp"
#include "gappal/maxpal.hpp"

namespace gappal::oracle {

struct OracleConfig {
  std::size_t max_n = 12;
  std::size_t alphabet_size = 2;
  Metric metric = Metric::edit;
  std::uint64_t seed = 0x5eed;
};

enum class Pieces { all, maximal };

bool naive_is_gpal(std::string_view x, const Involution& f);

/// nullopt stands for an infinite distance (odd length, no fixed point).
std::optional<std::size_t> naive_hamming_dist_to_gpal(std::string_view x, const Involution& f);

/// Interval DP over deletions and substitutions.
std::size_t naive_edit_dist_to_gpal(std::string_view x, const Involution& f);

/// Edit distance with insertions, deletions and substitutions to the nearest
/// generalized palindrome, found by enumerating candidate palindromes over
/// the letters of x closed under f. Exponential; intended for |x| <= 8.
std::size_t full_edit_dist_to_gpal(std::string_view x, const Involution& f);

/// Start positions p (ascending) with S[p..j] a generalized palindrome.
std::vector<std::size_t> brute_P_j(std::string_view s, const Involution& f, std::size_t j);

/// For each center and d <= delta, the longest same-center factor whose
/// distance is at most d.
MaxPalTable brute_maximal(std::string_view s, const Involution& f, std::size_t delta,
                          Metric metric);

/// Minimum total gap length over all tilings by admissible pieces of length
/// >= min_length and at most max_gaps gaps; nullopt if none exists.
std::optional<std::size_t> brute_min_gaps(std::string_view s, const Involution& f,
                                          std::size_t max_gaps, std::size_t min_length,
                                          std::size_t delta, Metric metric, Pieces pieces);

/// Smallest period of x (|x| for the empty or aperiodic case).
std::size_t naive_smallest_period(std::string_view x);

}  // namespace gappal::oracle
