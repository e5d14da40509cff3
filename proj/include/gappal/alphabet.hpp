#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gappal {

using Letter = unsigned char;

/// Raised when an involution is not self-inverse, is inconsistent, or is not
/// defined on a letter it is applied to.
class InvolutionError : public std::invalid_argument {
 public:
  InvolutionError(const std::string& what, Letter letter)
      : std::invalid_argument(what), letter_(letter) {}

  Letter letter() const noexcept { return letter_; }

 private:
  Letter letter_;
};

/// Input text together with its rank-reduced integer form.
///
/// Positions are 1-based throughout the library: `at(1)` is the first
/// letter and `at(size())` the last. Ranks are assigned in order of first
/// occurrence, so ranks lie in [1..n] and two positions share a rank iff
/// they carry the same letter.
class Sequence {
 public:
  Sequence() = default;

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  std::string_view letters() const noexcept { return letters_; }
  const std::vector<std::uint32_t>& ranks() const noexcept { return ranks_; }

  Letter at(std::size_t pos) const { return static_cast<Letter>(letters_[pos - 1]); }
  std::uint32_t rank_at(std::size_t pos) const { return ranks_[pos - 1]; }

  /// Number of distinct letters.
  std::size_t alphabet_size() const noexcept { return alphabet_size_; }

  /// Factor S[start..end] (1-based, inclusive). Empty when end < start.
  std::string_view factor(std::size_t start, std::size_t end) const;

 private:
  friend Sequence rank_reduce(std::string_view raw_text);

  std::string letters_;
  std::vector<std::uint32_t> ranks_;
  std::size_t alphabet_size_ = 0;
};

Sequence rank_reduce(std::string_view raw_text);

enum class InvolutionKind { identity, dna_complement, custom };

/// A self-inverse letter mapping f with f(f(a)) = a on its domain.
class Involution {
 public:
  /// f(a) = a for every byte.
  static Involution identity();

  /// A<->T, C<->G (and the lowercase pairs a<->t, c<->g). No fixed points.
  static Involution dna_complement();

  /// Builds f from directed pairs (x, y) meaning f(x) = y. A letter y that
  /// never appears on the left receives f(y) = x. Throws InvolutionError
  /// naming the offending letter if the result is not self-inverse, if a
  /// letter is given two images, or (when `alphabet` is supplied) if a pair
  /// mentions a letter outside it or the map is not total on it.
  static Involution custom(const std::vector<std::pair<Letter, Letter>>& pairs,
                           std::optional<std::string_view> alphabet = std::nullopt);

  InvolutionKind kind() const noexcept { return kind_; }

  bool defined(Letter a) const noexcept { return image_[a] >= 0; }

  Letter operator()(Letter a) const {
    if (image_[a] < 0) {
      throw InvolutionError(std::string("involution is undefined on letter '") +
                                static_cast<char>(a) + "'",
                            a);
    }
    return static_cast<Letter>(image_[a]);
  }

  /// Letters of the domain with f(a) = a, ascending.
  std::vector<Letter> fixed_points() const;
  bool has_fixed_point() const noexcept { return has_fixed_point_; }

  /// Letters on which f is defined, ascending.
  std::vector<Letter> domain() const;

  /// First letter of `text` outside the domain, if any.
  std::optional<Letter> first_undefined(std::string_view text) const;

  /// Throws InvolutionError if f is not total on the letters of `text`.
  void require_total(std::string_view text) const;

 private:
  Involution() { image_.fill(-1); }
  void finalize();

  std::array<std::int16_t, 256> image_{};
  InvolutionKind kind_ = InvolutionKind::identity;
  bool has_fixed_point_ = false;
};

}  // namespace gappal
