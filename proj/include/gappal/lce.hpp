#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gappal/alphabet.hpp"

namespace gappal {

/// Constant-time longest-common-extension queries over T = S $ f(S^R).
///
/// T is stored as integer codes: letter byte + 1, with 0 reserved for the
/// sentinel, so the sentinel never collides with a letter or an f-image.
/// Construction is O(|T| log |T|): prefix-doubling suffix array, Kasai LCP,
/// and a sparse table for range minima.
class LceEngine {
 public:
  static constexpr std::uint32_t kSentinel = 0;

  LceEngine(const Sequence& seq, const Involution& f);

  /// n, the length of S.
  std::size_t text_length() const noexcept { return n_; }
  /// |T| = 2n + 1.
  std::size_t size() const noexcept { return text_.size(); }
  const std::vector<std::uint32_t>& text() const noexcept { return text_; }

  /// Length of the longest common prefix of T[i..] and T[j..] (1-based).
  std::size_t lce(std::size_t i, std::size_t j) const;

  /// Largest k with f(S[i-k+1..i]^R) = S[j..j+k-1]. Accepts i = 0 and
  /// j = n + 1, which yield 0.
  std::size_t lgpal(std::size_t i, std::size_t j) const;

 private:
  std::size_t range_min(std::size_t lo, std::size_t hi) const;

  std::size_t n_ = 0;
  std::vector<std::uint32_t> text_;
  std::vector<std::uint32_t> rank_;   // rank_[p] = index of suffix p in the suffix array
  std::vector<std::vector<std::uint32_t>> sparse_;  // sparse_[k][r] = min lcp[r..r+2^k-1]
};

namespace detail {

/// Suffix array of `text` (0-based suffix starts), by prefix doubling.
std::vector<std::uint32_t> suffix_array(const std::vector<std::uint32_t>& text);

/// lcp[r] = LCP of suffixes sa[r-1] and sa[r]; lcp[0] = 0.
std::vector<std::uint32_t> lcp_kasai(const std::vector<std::uint32_t>& text,
                                     const std::vector<std::uint32_t>& sa,
                                     const std::vector<std::uint32_t>& rank);

}  // namespace detail

}  // namespace gappal
