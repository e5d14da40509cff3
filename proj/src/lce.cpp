#include "gappal/lce.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace gappal {

namespace {
constexpr std::size_t kDirectScan = 16;
}  // namespace

namespace detail {

std::vector<std::uint32_t> suffix_array(const std::vector<std::uint32_t>& text) {
  const std::size_t n = text.size();
  std::vector<std::uint32_t> sa(n);
  if (n == 0) {
    return sa;
  }

  // Ranks start at 1; 0 stands for "past the end" in the second key.
  std::vector<std::uint32_t> rank(n);
  std::vector<std::uint32_t> order(n);
  std::uint32_t max_code = *std::max_element(text.begin(), text.end());
  for (std::size_t i = 0; i < n; ++i) {
    rank[i] = text[i] + 1;
  }
  std::vector<std::uint32_t> count(std::max<std::size_t>(n, max_code + 1) + 2);

  auto counting_sort = [&](const std::vector<std::uint32_t>& by_second) {
    std::fill(count.begin(), count.end(), 0);
    for (std::uint32_t p : by_second) {
      ++count[rank[p]];
    }
    for (std::size_t r = 1; r < count.size(); ++r) {
      count[r] += count[r - 1];
    }
    for (std::size_t idx = n; idx-- > 0;) {
      const std::uint32_t p = by_second[idx];
      sa[--count[rank[p]]] = p;
    }
  };

  for (std::size_t i = 0; i < n; ++i) {
    order[i] = static_cast<std::uint32_t>(i);
  }
  counting_sort(order);

  std::vector<std::uint32_t> next_rank(n);
  auto rerank = [&](std::size_t k) {
    auto second = [&](std::uint32_t p) -> std::uint32_t {
      return p + k < n ? rank[p + k] : 0;
    };
    next_rank[sa[0]] = 1;
    for (std::size_t r = 1; r < n; ++r) {
      const std::uint32_t a = sa[r - 1];
      const std::uint32_t b = sa[r];
      const bool same = rank[a] == rank[b] && second(a) == second(b);
      next_rank[b] = next_rank[a] + (same ? 0 : 1);
    }
    rank.swap(next_rank);
    return rank[sa[n - 1]];
  };

  std::uint32_t classes = rerank(0);
  for (std::size_t k = 1; classes < n; k <<= 1) {
    std::size_t pos = 0;
    for (std::size_t i = n - std::min(k, n); i < n; ++i) {
      order[pos++] = static_cast<std::uint32_t>(i);
    }
    for (std::uint32_t s : sa) {
      if (s >= k) {
        order[pos++] = static_cast<std::uint32_t>(s - k);
      }
    }
    counting_sort(order);
    classes = rerank(k);
  }
  return sa;
}

std::vector<std::uint32_t> lcp_kasai(const std::vector<std::uint32_t>& text,
                                     const std::vector<std::uint32_t>& sa,
                                     const std::vector<std::uint32_t>& rank) {
  const std::size_t n = text.size();
  std::vector<std::uint32_t> lcp(n, 0);
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (rank[i] == 0) {
      h = 0;
      continue;
    }
    const std::size_t j = sa[rank[i] - 1];
    while (i + h < n && j + h < n && text[i + h] == text[j + h]) {
      ++h;
    }
    lcp[rank[i]] = static_cast<std::uint32_t>(h);
    if (h > 0) {
      --h;
    }
  }
  return lcp;
}

}  // namespace detail

LceEngine::LceEngine(const Sequence& seq, const Involution& f) : n_(seq.size()) {
  if (seq.empty()) {
    throw std::invalid_argument("cannot build an LCE engine over an empty sequence");
  }
  f.require_total(seq.letters());

  text_.reserve(2 * n_ + 1);
  for (char c : seq.letters()) {
    text_.push_back(static_cast<std::uint32_t>(static_cast<Letter>(c)) + 1);
  }
  text_.push_back(kSentinel);
  for (std::size_t p = n_; p >= 1; --p) {
    text_.push_back(static_cast<std::uint32_t>(f(seq.at(p))) + 1);
  }

  const std::size_t m = text_.size();
  const auto sa = detail::suffix_array(text_);
  rank_.assign(m, 0);
  for (std::size_t r = 0; r < m; ++r) {
    rank_[sa[r]] = static_cast<std::uint32_t>(r);
  }

  sparse_.push_back(detail::lcp_kasai(text_, sa, rank_));
  for (std::size_t width = 2; width <= m; width <<= 1) {
    const auto& prev = sparse_.back();
    std::vector<std::uint32_t> level(m - width + 1);
    const std::size_t half = width / 2;
    for (std::size_t r = 0; r < level.size(); ++r) {
      level[r] = std::min(prev[r], prev[r + half]);
    }
    sparse_.push_back(std::move(level));
  }
}

std::size_t LceEngine::range_min(std::size_t lo, std::size_t hi) const {
  const std::size_t len = hi - lo + 1;
  const auto k = static_cast<std::size_t>(std::bit_width(len) - 1);
  const auto& level = sparse_[k];
  return std::min(level[lo], level[hi + 1 - (std::size_t{1} << k)]);
}

std::size_t LceEngine::lce(std::size_t i, std::size_t j) const {
  const std::size_t m = text_.size();
  if (i < 1 || j < 1 || i > m || j > m) {
    throw std::out_of_range("lce position out of range: (" + std::to_string(i) + ", " +
                            std::to_string(j) + ") for text of length " + std::to_string(m));
  }
  if (i == j) {
    return m - i + 1;
  }
  // Compare a short prefix directly before consulting the suffix ranks.
  const std::size_t scan = std::min({kDirectScan, m - i + 1, m - j + 1});
  for (std::size_t k = 0; k < scan; ++k) {
    if (text_[i - 1 + k] != text_[j - 1 + k]) {
      return k;
    }
  }
  if (scan < kDirectScan) {
    return scan;
  }
  std::size_t ri = rank_[i - 1];
  std::size_t rj = rank_[j - 1];
  if (ri > rj) {
    std::swap(ri, rj);
  }
  return range_min(ri + 1, rj);
}

std::size_t LceEngine::lgpal(std::size_t i, std::size_t j) const {
  if (i > n_ || j < 1 || j > n_ + 1) {
    throw std::out_of_range("lgpal position out of range: (" + std::to_string(i) + ", " +
                            std::to_string(j) + ") for text of length " + std::to_string(n_));
  }
  if (i == 0 || j == n_ + 1) {
    return 0;
  }
  // f(S[i]) sits at position 2n + 2 - i of T.
  return lce(j, 2 * n_ + 2 - i);
}

}  // namespace gappal
