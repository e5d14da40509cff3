#include "gappal/oracle.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace gappal::oracle {

namespace {

Letter at(std::string_view x, std::size_t i) { return static_cast<Letter>(x[i]); }

std::size_t levenshtein(std::string_view a, std::string_view b) {
  std::vector<std::size_t> prev(b.size() + 1);
  std::vector<std::size_t> cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) {
    prev[j] = j;
  }
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({sub, prev[j] + 1, cur[j - 1] + 1});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

std::optional<std::size_t> distance(std::string_view x, const Involution& f, Metric metric) {
  switch (metric) {
    case Metric::exact:
      return naive_is_gpal(x, f) ? std::optional<std::size_t>(0) : std::nullopt;
    case Metric::hamming:
      return naive_hamming_dist_to_gpal(x, f);
    case Metric::edit:
      return naive_edit_dist_to_gpal(x, f);
  }
  return std::nullopt;
}

}  // namespace

bool naive_is_gpal(std::string_view x, const Involution& f) {
  const std::size_t len = x.size();
  for (std::size_t p = 0; p < len; ++p) {
    if (f(at(x, p)) != at(x, len - 1 - p)) {
      return false;
    }
  }
  return true;
}

std::optional<std::size_t> naive_hamming_dist_to_gpal(std::string_view x, const Involution& f) {
  const std::size_t len = x.size();
  std::size_t count = 0;
  for (std::size_t p = 0, q = len; p + 1 < q; ++p, --q) {
    if (f(at(x, p)) != at(x, q - 1)) {
      ++count;
    }
  }
  if (len % 2 == 1) {
    const Letter mid = at(x, len / 2);
    if (f(mid) != mid) {
      if (!f.has_fixed_point()) {
        return std::nullopt;
      }
      ++count;
    }
  }
  return count;
}

std::size_t naive_edit_dist_to_gpal(std::string_view x, const Involution& f) {
  const std::size_t len = x.size();
  if (len == 0) {
    return 0;
  }
  // dist[i][j] for the factor x[i..j], 0-based inclusive; dist of an empty
  // factor is 0.
  std::vector<std::vector<std::size_t>> dist(len + 1, std::vector<std::size_t>(len + 1, 0));
  auto get = [&](std::size_t i, std::size_t j) -> std::size_t {
    return (j + 1 <= i) ? 0 : dist[i][j];
  };
  for (std::size_t width = 1; width <= len; ++width) {
    for (std::size_t i = 0; i + width <= len; ++i) {
      const std::size_t j = i + width - 1;
      if (i == j) {
        dist[i][j] = f(at(x, i)) == at(x, i) ? 0 : 1;
      } else if (f(at(x, i)) == at(x, j)) {
        dist[i][j] = get(i + 1, j - 1);
      } else {
        dist[i][j] = 1 + std::min({get(i + 1, j), get(i, j - 1), get(i + 1, j - 1)});
      }
    }
  }
  return dist[0][len - 1];
}

std::size_t full_edit_dist_to_gpal(std::string_view x, const Involution& f) {
  std::set<Letter> letters;
  for (char c : x) {
    letters.insert(static_cast<Letter>(c));
    letters.insert(f(static_cast<Letter>(c)));
  }
  if (const auto fixed = f.fixed_points(); !fixed.empty()) {
    letters.insert(fixed.front());
  }
  const std::vector<Letter> sigma(letters.begin(), letters.end());
  std::vector<Letter> middles;
  for (Letter a : sigma) {
    if (f(a) == a) {
      middles.push_back(a);
    }
  }

  // Substituting one letter of every mismatched pair, and deleting a bad
  // middle letter, reaches a palindrome in ceil(|x|/2) steps; a closer one
  // is at most that much longer than x.
  const std::size_t upper = (x.size() + 1) / 2;
  std::size_t best = upper;
  for (std::size_t len = 0; len <= x.size() + upper; ++len) {
    const std::size_t half = len / 2;
    const bool odd = len % 2 == 1;
    if (odd && middles.empty()) {
      continue;
    }
    if (sigma.empty() && len > 0) {
      break;
    }
    std::vector<std::size_t> digits(half, 0);
    for (;;) {
      std::string prefix;
      for (std::size_t d : digits) {
        prefix.push_back(static_cast<char>(sigma[d]));
      }
      std::string mirror;
      for (std::size_t p = half; p-- > 0;) {
        mirror.push_back(static_cast<char>(f(static_cast<Letter>(prefix[p]))));
      }
      const std::size_t mid_options = odd ? middles.size() : 1;
      for (std::size_t mo = 0; mo < mid_options; ++mo) {
        std::string v = prefix;
        if (odd) {
          v.push_back(static_cast<char>(middles[mo]));
        }
        v += mirror;
        best = std::min(best, levenshtein(x, v));
      }
      // Next digit vector in base |sigma|.
      std::size_t pos = 0;
      while (pos < half && ++digits[pos] == sigma.size()) {
        digits[pos++] = 0;
      }
      if (pos == half) {
        break;
      }
    }
  }
  return best;
}

std::vector<std::size_t> brute_P_j(std::string_view s, const Involution& f, std::size_t j) {
  std::vector<std::size_t> out;
  for (std::size_t p = 1; p <= j; ++p) {
    if (naive_is_gpal(s.substr(p - 1, j - p + 1), f)) {
      out.push_back(p);
    }
  }
  return out;
}

MaxPalTable brute_maximal(std::string_view s, const Involution& f, std::size_t delta,
                          Metric metric) {
  const std::size_t n = s.size();
  MaxPalTable table(delta == 0 ? Metric::exact : metric, delta, n);
  for (std::size_t twice = 2; twice <= 2 * n; ++twice) {
    // Factors [lo..hi] with lo + hi = twice, growing outward from a single
    // letter or, at a half-integer center, from the empty factor [c+1..c].
    std::size_t lo = (twice + 1) / 2;
    std::size_t hi = twice / 2;
    std::vector<std::optional<PalExtent>> best(delta + 1);
    for (;;) {
      const std::string_view x = s.substr(lo - 1, hi + 1 - lo);
      if (const auto d = distance(x, f, metric); d) {
        for (std::size_t row = *d; row <= delta; ++row) {
          best[row] = PalExtent{lo, hi, *d};
        }
      }
      if (lo == 1 || hi == n) {
        break;
      }
      --lo;
      ++hi;
    }
    for (std::size_t row = 0; row <= delta; ++row) {
      if (best[row]) {
        table.set(row, *best[row]);
      }
    }
  }
  return table;
}

std::optional<std::size_t> brute_min_gaps(std::string_view s, const Involution& f,
                                          std::size_t max_gaps, std::size_t min_length,
                                          std::size_t delta, Metric metric, Pieces pieces) {
  const std::size_t n = s.size();
  // admissible[a][b]: S[a..b] (1-based) may be used as a palindrome piece.
  std::vector<std::vector<bool>> admissible(n + 2, std::vector<bool>(n + 2, false));
  if (pieces == Pieces::all) {
    for (std::size_t a = 1; a <= n; ++a) {
      for (std::size_t b = a; b <= n; ++b) {
        if (b + 1 - a < min_length) {
          continue;
        }
        const auto d = distance(s.substr(a - 1, b + 1 - a), f, delta == 0 ? Metric::exact : metric);
        admissible[a][b] = d && *d <= delta;
      }
    }
  } else if (n > 0) {
    const MaxPalTable table = brute_maximal(s, f, delta, metric);
    for (const PalExtent& e : table.row(delta)) {
      if (e.length() >= min_length && e.length() > 0) {
        admissible[e.start][e.end] = true;
      }
    }
  }

  // cost[j][q][g]: S[1..j] covered using q gaps; g = 1 iff it ends in a gap.
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> cost((n + 1) * (max_gaps + 1) * 2, kNone);
  auto cell = [&](std::size_t j, std::size_t q, std::size_t g) -> std::size_t& {
    return cost[(j * (max_gaps + 1) + q) * 2 + g];
  };
  cell(0, 0, 0) = 0;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t q = 0; q <= max_gaps; ++q) {
      for (std::size_t g = 0; g < 2; ++g) {
        const std::size_t c = cell(j, q, g);
        if (c == kNone) {
          continue;
        }
        for (std::size_t b = j + 1; b <= n; ++b) {
          if (admissible[j + 1][b]) {
            cell(b, q, 0) = std::min(cell(b, q, 0), c);
          }
          if (g == 0 && q < max_gaps) {
            cell(b, q + 1, 1) = std::min(cell(b, q + 1, 1), c + (b - j));
          }
        }
      }
    }
  }
  std::size_t best = kNone;
  for (std::size_t q = 0; q <= max_gaps; ++q) {
    best = std::min({best, cell(n, q, 0), cell(n, q, 1)});
  }
  if (best == kNone) {
    return std::nullopt;
  }
  return best;
}

std::size_t naive_smallest_period(std::string_view x) {
  for (std::size_t p = 1; p < x.size(); ++p) {
    bool ok = true;
    for (std::size_t i = 0; i + p < x.size() && ok; ++i) {
      ok = x[i] == x[i + p];
    }
    if (ok) {
      return p;
    }
  }
  return x.size();
}

}  // namespace gappal::oracle
