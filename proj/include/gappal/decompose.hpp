#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gappal/alphabet.hpp"
#include "gappal/maxpal.hpp"

namespace gappal {

enum class SegmentKind { palindrome, gap };

std::string_view to_string(SegmentKind kind);

struct Segment {
  std::size_t start = 0;  // 1-based, inclusive
  std::size_t end = 0;
  SegmentKind kind = SegmentKind::gap;
  std::size_t errors_used = 0;

  std::size_t length() const noexcept { return end + 1 - start; }
  friend bool operator==(const Segment&, const Segment&) = default;
};

/// A tiling of S[1..n] by palindromes and gaps.
struct Decomposition {
  std::vector<Segment> segments;
  std::size_t total_gap_length = 0;
  std::size_t gap_count = 0;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Admissible pieces for the gapped factorization DP, indexed by end position.
class FactorSet {
 public:
  struct Factor {
    std::size_t start = 0;
    std::size_t end = 0;
    std::size_t errors_used = 0;
    friend bool operator==(const Factor&, const Factor&) = default;
  };

  explicit FactorSet(std::size_t n) : n_(n), by_end_(n + 1) {}

  /// Throws std::out_of_range unless 1 <= start <= end <= n.
  void add(std::size_t start, std::size_t end, std::size_t errors_used = 0);

  std::size_t text_length() const noexcept { return n_; }
  std::size_t size() const noexcept { return size_; }
  const std::vector<Factor>& ending_at(std::size_t end) const { return by_end_.at(end); }

 private:
  std::size_t n_;
  std::size_t size_ = 0;
  std::vector<std::vector<Factor>> by_end_;
};

/// Minimum total gap length decomposition of S into generalized palindromes
/// of length >= min_length with at most max_gaps gaps, using the
/// progression-compressed palindromic suffix sets. O(n log n * g) time.
/// Returns nullopt when no such decomposition exists.
std::optional<Decomposition> min_gap_decompose(const Sequence& seq, const Involution& f,
                                               std::size_t max_gaps, std::size_t min_length);

/// Minimum total gap length tiling of [1..n] by factors of F plus at most
/// max_gaps gaps. O((n + |F|) * g) time.
std::optional<Decomposition> factorize_with_gaps(const FactorSet& factors, std::size_t max_gaps);

/// Row `delta` of the maximal palindrome table (Hamming or edit), keeping
/// extents of length >= min_length.
FactorSet maximal_factor_set(const MaxPalTable& table, std::size_t min_length);

/// Decomposition into maximal generalized delta-palindromes of length >=
/// min_length with at most max_gaps gaps. O(n * (g + delta)) time.
std::optional<Decomposition> maximal_delta_decompose(const Sequence& seq, const Involution& f,
                                                     std::size_t max_gaps, std::size_t min_length,
                                                     std::size_t delta, Metric metric);

/// Limits a decomposition must respect.
struct DecompositionLimits {
  std::size_t max_gaps = 0;
  std::size_t min_length = 1;
  std::size_t delta = 0;
  Metric metric = Metric::exact;
};

/// Checks tiling, gap count and total, piece lengths, and that each
/// palindrome is within errors_used <= delta of a generalized palindrome
/// under the metric. Returns a description of the first violation.
std::optional<std::string> validate(const Decomposition& decomposition, const Sequence& seq,
                                    const Involution& f, const DecompositionLimits& limits);

}  // namespace gappal
