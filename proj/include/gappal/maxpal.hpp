#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "gappal/alphabet.hpp"
#include "gappal/lce.hpp"

namespace gappal {

enum class Metric { exact, hamming, edit };

std::string_view to_string(Metric metric);

/// A center c encoded as 2c, so half-integer centers are odd values.
/// Valid centers of a text of length n lie in [2..2n].
struct Center {
  std::size_t twice_value = 0;

  bool is_integer() const noexcept { return twice_value % 2 == 0; }
  friend bool operator==(Center, Center) = default;
};

/// Factor S[start..end] (1-based, inclusive) with the number of errors it
/// needs under the table's metric. A length-0 extent at half-integer center
/// c + 1/2 is encoded as start = c + 1, end = c.
struct PalExtent {
  std::size_t start = 0;
  std::size_t end = 0;
  std::size_t errors_used = 0;

  std::size_t length() const noexcept { return end + 1 - start; }
  Center center() const noexcept { return Center{start + end}; }
  friend bool operator==(const PalExtent&, const PalExtent&) = default;
};

/// For each d in 0..delta and each center, the maximal generalized
/// d-palindrome under one metric (absent where none exists).
class MaxPalTable {
 public:
  MaxPalTable(Metric metric, std::size_t delta, std::size_t n);

  Metric metric() const noexcept { return metric_; }
  std::size_t delta() const noexcept { return delta_; }
  std::size_t text_length() const noexcept { return n_; }
  std::size_t center_count() const noexcept { return n_ == 0 ? 0 : 2 * n_ - 1; }

  std::optional<PalExtent> at(std::size_t d, Center center) const;

  /// Present extents of row d, ordered by center.
  std::vector<PalExtent> row(std::size_t d) const;

  /// Stores `extent` in row d at its own center, replacing any previous entry.
  void set(std::size_t d, const PalExtent& extent);

  friend bool operator==(const MaxPalTable&, const MaxPalTable&) = default;

 private:
  struct Slot {
    std::uint32_t start = 0;  // 0 = absent
    std::uint32_t end = 0;
    std::uint32_t errors = 0;
    friend bool operator==(const Slot&, const Slot&) = default;
  };

  std::size_t slot_index(std::size_t d, Center center) const;

  Metric metric_;
  std::size_t delta_;
  std::size_t n_;
  std::vector<Slot> slots_;
};

/// All maximal generalized palindromes, one LGPal query per center.
MaxPalTable maximal_exact(const Sequence& seq, const Involution& f, const LceEngine& engine);

/// Maximal generalized d-palindromes under Hamming distance for d <= delta,
/// at most delta + 1 LGPal queries per center.
MaxPalTable maximal_hamming(const Sequence& seq, const Involution& f, const LceEngine& engine,
                            std::size_t delta);

/// Maximal generalized d-palindromes under edit distance for d <= delta.
/// Row d + 1 is built from the extensions and border reductions of row d,
/// keeping the longest candidate per center.
MaxPalTable maximal_edit(const Sequence& seq, const Involution& f, const LceEngine& engine,
                         std::size_t delta);

/// The three LGPal extensions of a generalized d-palindrome: ignore the
/// letter left of it, the letter right of it, or both. An extension whose
/// ignored letter lies outside the text is omitted. Results carry
/// errors_used = pal.errors_used + 1.
std::vector<PalExtent> extend(const PalExtent& pal, const LceEngine& engine);

/// S[1..end-1] when pal starts at 1 and S[start+1..n] when it ends at n.
/// Only nonempty extents are reduced.
std::vector<PalExtent> border_reduce(const PalExtent& pal, std::size_t n);

/// Number of symmetric pairs (p, |x|+1-p) with f(x[p]) != x[|x|+1-p], plus
/// one for an odd middle letter that is not a fixed point. nullopt when x
/// has odd length and f has no fixed point at all.
std::optional<std::size_t> hamming_distance_to_gpal(std::string_view x, const Involution& f);

/// Edit distance (deletions and substitutions suffice) from x to the nearest
/// generalized palindrome, if it is at most `bound`. Runs in
/// O(|x| * bound) time.
std::optional<std::size_t> edit_distance_to_gpal_within(std::string_view x, const Involution& f,
                                                        std::size_t bound);

}  // namespace gappal
