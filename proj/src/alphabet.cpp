#include "gappal/alphabet.hpp"

#include <algorithm>

namespace gappal {

std::string_view Sequence::factor(std::size_t start, std::size_t end) const {
  if (end < start) {
    return {};
  }
  if (start < 1 || end > size()) {
    throw std::out_of_range("factor [" + std::to_string(start) + ".." + std::to_string(end) +
                            "] outside text of length " + std::to_string(size()));
  }
  return std::string_view(letters_).substr(start - 1, end - start + 1);
}

Sequence rank_reduce(std::string_view raw_text) {
  Sequence seq;
  seq.letters_.assign(raw_text);
  seq.ranks_.reserve(raw_text.size());

  std::array<std::uint32_t, 256> rank_of{};
  std::uint32_t next = 0;
  for (char c : raw_text) {
    auto& r = rank_of[static_cast<Letter>(c)];
    if (r == 0) {
      r = ++next;
    }
    seq.ranks_.push_back(r);
  }
  seq.alphabet_size_ = next;
  return seq;
}

Involution Involution::identity() {
  Involution f;
  for (int a = 0; a < 256; ++a) {
    f.image_[a] = static_cast<std::int16_t>(a);
  }
  f.kind_ = InvolutionKind::identity;
  f.finalize();
  return f;
}

Involution Involution::dna_complement() {
  Involution f;
  auto pair = [&f](char x, char y) {
    f.image_[static_cast<Letter>(x)] = static_cast<Letter>(y);
    f.image_[static_cast<Letter>(y)] = static_cast<Letter>(x);
  };
  pair('A', 'T');
  pair('C', 'G');
  pair('a', 't');
  pair('c', 'g');
  f.kind_ = InvolutionKind::dna_complement;
  f.finalize();
  return f;
}

namespace {

std::string quoted(Letter a) { return std::string("'") + static_cast<char>(a) + "'"; }

}  // namespace

Involution Involution::custom(const std::vector<std::pair<Letter, Letter>>& pairs,
                              std::optional<std::string_view> alphabet) {
  std::array<bool, 256> declared{};
  if (alphabet) {
    for (char c : *alphabet) {
      declared[static_cast<Letter>(c)] = true;
    }
  }

  Involution f;
  f.kind_ = InvolutionKind::custom;
  for (auto [x, y] : pairs) {
    if (alphabet) {
      for (Letter a : {x, y}) {
        if (!declared[a]) {
          throw InvolutionError("letter " + quoted(a) + " is outside the declared alphabet", a);
        }
      }
    }
    if (f.image_[x] >= 0 && f.image_[x] != y) {
      throw InvolutionError("letter " + quoted(x) + " is mapped to both " +
                                quoted(static_cast<Letter>(f.image_[x])) + " and " + quoted(y),
                            x);
    }
    f.image_[x] = y;
  }
  // Closure: a letter that only appears as an image maps back to its preimage.
  for (auto [x, y] : pairs) {
    if (f.image_[y] < 0) {
      f.image_[y] = x;
    }
  }
  for (int a = 0; a < 256; ++a) {
    if (f.image_[a] < 0) {
      continue;
    }
    const auto b = static_cast<Letter>(f.image_[a]);
    if (f.image_[b] != a) {
      throw InvolutionError("mapping is not self-inverse at letter " +
                                quoted(static_cast<Letter>(a)) + ": f(f(" +
                                std::string(1, static_cast<char>(a)) + ")) != " +
                                std::string(1, static_cast<char>(a)),
                            static_cast<Letter>(a));
    }
  }
  if (alphabet) {
    for (char c : *alphabet) {
      if (!f.defined(static_cast<Letter>(c))) {
        throw InvolutionError("mapping is not total: no image for declared letter " +
                                  quoted(static_cast<Letter>(c)),
                              static_cast<Letter>(c));
      }
    }
  }
  f.finalize();
  return f;
}

void Involution::finalize() {
  has_fixed_point_ = false;
  for (int a = 0; a < 256; ++a) {
    if (image_[a] == a) {
      has_fixed_point_ = true;
      break;
    }
  }
}

std::vector<Letter> Involution::fixed_points() const {
  std::vector<Letter> out;
  for (int a = 0; a < 256; ++a) {
    if (image_[a] == a) {
      out.push_back(static_cast<Letter>(a));
    }
  }
  return out;
}

std::vector<Letter> Involution::domain() const {
  std::vector<Letter> out;
  for (int a = 0; a < 256; ++a) {
    if (image_[a] >= 0) {
      out.push_back(static_cast<Letter>(a));
    }
  }
  return out;
}

std::optional<Letter> Involution::first_undefined(std::string_view text) const {
  const auto it = std::find_if(text.begin(), text.end(),
                               [this](char c) { return !defined(static_cast<Letter>(c)); });
  if (it == text.end()) {
    return std::nullopt;
  }
  return static_cast<Letter>(*it);
}

void Involution::require_total(std::string_view text) const {
  if (auto bad = first_undefined(text)) {
    throw InvolutionError("involution is undefined on letter " + quoted(*bad) +
                              " occurring in the input",
                          *bad);
  }
}

}  // namespace gappal
