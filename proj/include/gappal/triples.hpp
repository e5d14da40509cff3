#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "gappal/alphabet.hpp"

namespace gappal {

/// Arithmetic progression {start, start + step, ..., start + (count-1)*step}
/// of start positions of generalized palindromic suffixes. The first
/// progression of a set has no predecessor and uses kInfiniteStep.
struct Triple {
  static constexpr std::size_t kInfiniteStep = std::numeric_limits<std::size_t>::max();

  std::size_t start = 0;
  std::size_t step = kInfiniteStep;
  std::size_t count = 0;

  bool infinite_step() const noexcept { return step == kInfiniteStep; }
  std::size_t last() const noexcept {
    return count <= 1 ? start : start + (count - 1) * step;
  }

  friend bool operator==(const Triple&, const Triple&) = default;
};

/// G_j: the start positions P_j of all generalized palindromic suffixes of
/// S[1..j], grouped by the difference to their predecessor. Triples are
/// ordered by increasing position, which is also decreasing step.
class TripleSet {
 public:
  TripleSet() = default;

  /// j; 0 before the first advance.
  std::size_t end_position() const noexcept { return end_; }
  const std::vector<Triple>& triples() const noexcept { return triples_; }

  /// Moves from G_{j-1} to G_j, where j = end_position() + 1. Each triple is
  /// kept (shifted left by one) or dropped based on a single letter test.
  void advance(const Sequence& seq, const Involution& f);

  /// All represented start positions, ascending.
  std::vector<std::size_t> expand() const;

  /// Triples restricted to palindromes of length >= min_length, i.e. to
  /// start positions <= j - min_length + 1. Emptied triples are dropped.
  std::vector<Triple> trim(std::size_t min_length) const;

  /// Engineering bound on the number of triples for end position j.
  static std::size_t size_bound(std::size_t j);

 private:
  std::size_t end_ = 0;
  std::vector<Triple> triples_;
};

/// Functional form of TripleSet::advance.
TripleSet advance(TripleSet state, const Sequence& seq, const Involution& f);

}  // namespace gappal
