#include "gappal/maxpal.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace gappal {

std::string_view to_string(Metric metric) {
  switch (metric) {
    case Metric::exact:
      return "exact";
    case Metric::hamming:
      return "hamming";
    case Metric::edit:
      return "edit";
  }
  return "unknown";
}

MaxPalTable::MaxPalTable(Metric metric, std::size_t delta, std::size_t n)
    : metric_(metric), delta_(delta), n_(n) {
  if (n > std::numeric_limits<std::uint32_t>::max() / 2 - 1) {
    throw std::length_error("text too long for a palindrome table");
  }
  slots_.resize((delta + 1) * center_count());
}

std::size_t MaxPalTable::slot_index(std::size_t d, Center center) const {
  if (d > delta_) {
    throw std::out_of_range("row " + std::to_string(d) + " exceeds delta " +
                            std::to_string(delta_));
  }
  if (center.twice_value < 2 || center.twice_value > 2 * n_) {
    throw std::out_of_range("center 2c=" + std::to_string(center.twice_value) +
                            " outside [2.." + std::to_string(2 * n_) + "]");
  }
  return d * center_count() + (center.twice_value - 2);
}

std::optional<PalExtent> MaxPalTable::at(std::size_t d, Center center) const {
  const Slot& s = slots_[slot_index(d, center)];
  if (s.start == 0) {
    return std::nullopt;
  }
  return PalExtent{s.start, s.end, s.errors};
}

std::vector<PalExtent> MaxPalTable::row(std::size_t d) const {
  std::vector<PalExtent> out;
  if (n_ == 0) {
    return out;
  }
  const std::size_t base = slot_index(d, Center{2});
  for (std::size_t c = 0; c < center_count(); ++c) {
    const Slot& s = slots_[base + c];
    if (s.start != 0) {
      out.push_back(PalExtent{s.start, s.end, s.errors});
    }
  }
  return out;
}

void MaxPalTable::set(std::size_t d, const PalExtent& extent) {
  if (extent.start < 1 || extent.end > n_ || extent.end + 1 < extent.start) {
    throw std::out_of_range("extent [" + std::to_string(extent.start) + ".." +
                            std::to_string(extent.end) + "] outside text");
  }
  slots_[slot_index(d, extent.center())] =
      Slot{static_cast<std::uint32_t>(extent.start), static_cast<std::uint32_t>(extent.end),
           static_cast<std::uint32_t>(extent.errors_used)};
}

MaxPalTable maximal_exact(const Sequence& seq, const Involution& f, const LceEngine& engine) {
  return maximal_hamming(seq, f, engine, 0);
}

MaxPalTable maximal_hamming(const Sequence& seq, const Involution& f, const LceEngine& engine,
                            std::size_t delta) {
  const std::size_t n = seq.size();
  MaxPalTable table(delta == 0 ? Metric::exact : Metric::hamming, delta, n);

  for (std::size_t twice = 2; twice <= 2 * n; ++twice) {
    // l and r are the next symmetric pair to compare.
    std::size_t l = 0;
    std::size_t r = 0;
    std::size_t used = 0;
    if (twice % 2 == 0) {
      const std::size_t c = twice / 2;
      if (f(seq.at(c)) != seq.at(c)) {
        if (!f.has_fixed_point()) {
          continue;  // no odd-length generalized palindrome exists
        }
        used = 1;
      }
      l = c - 1;
      r = c + 1;
    } else {
      l = twice / 2;
      r = l + 1;
    }

    bool at_border = false;
    for (std::size_t d = used; d <= delta; ++d) {
      if (!at_border) {
        const std::size_t k = engine.lgpal(l, r);
        l -= k;
        r += k;
      }
      table.set(d, PalExtent{l + 1, r - 1, used});
      if (l >= 1 && r <= n) {
        // Mismatched pair: spend one error on it.
        --l;
        ++r;
        ++used;
      } else {
        at_border = true;
      }
    }
  }
  return table;
}

namespace {

template <typename Visit>
void for_each_extension(const PalExtent& pal, const LceEngine& engine, Visit&& visit) {
  const std::size_t n = engine.text_length();
  const std::size_t i = pal.start;
  const std::size_t j = pal.end;
  const std::size_t errors = pal.errors_used + 1;
  const bool left = i >= 2;
  const bool right = j + 1 <= n;
  if (left) {
    const std::size_t d = engine.lgpal(i - 2, j + 1);
    visit(PalExtent{i - 1 - d, j + d, errors});
  }
  if (right) {
    const std::size_t d = engine.lgpal(i - 1, j + 2);
    visit(PalExtent{i - d, j + 1 + d, errors});
  }
  if (left && right) {
    const std::size_t d = engine.lgpal(i - 2, j + 2);
    visit(PalExtent{i - 1 - d, j + 1 + d, errors});
  }
}

template <typename Visit>
void for_each_border_reduction(const PalExtent& pal, std::size_t n, Visit&& visit) {
  if (pal.end < pal.start) {
    return;
  }
  const std::size_t errors = pal.errors_used + 1;
  if (pal.start == 1) {
    visit(PalExtent{1, pal.end - 1, errors});
  }
  if (pal.end == n) {
    visit(PalExtent{pal.start + 1, n, errors});
  }
}

}  // namespace

std::vector<PalExtent> extend(const PalExtent& pal, const LceEngine& engine) {
  std::vector<PalExtent> out;
  out.reserve(3);
  for_each_extension(pal, engine, [&](const PalExtent& e) { out.push_back(e); });
  return out;
}

std::vector<PalExtent> border_reduce(const PalExtent& pal, std::size_t n) {
  std::vector<PalExtent> out;
  for_each_border_reduction(pal, n, [&](const PalExtent& e) { out.push_back(e); });
  return out;
}

MaxPalTable maximal_edit(const Sequence& seq, const Involution& f, const LceEngine& engine,
                         std::size_t delta) {
  const std::size_t n = seq.size();
  MaxPalTable table(delta == 0 ? Metric::exact : Metric::edit, delta, n);
  {
    const MaxPalTable exact = maximal_exact(seq, f, engine);
    for (const PalExtent& e : exact.row(0)) {
      table.set(0, e);
    }
  }

  // Empty extents just outside the valid center range. They are never
  // stored; their extensions are the single letters at the text ends.
  const PalExtent left_seed{1, 0, 0};
  const PalExtent right_seed{n + 1, n, 0};

  std::vector<PalExtent> best(2 * n + 1);  // indexed by start + end; start 0 = none
  for (std::size_t d = 0; d < delta; ++d) {
    std::vector<PalExtent> current = table.row(d);
    std::fill(best.begin(), best.end(), PalExtent{});
    for (const PalExtent& e : current) {
      best[e.start + e.end] = e;
    }
    auto offer = [&](const PalExtent& cand) {
      const std::size_t twice = cand.start + cand.end;
      if (twice < 2 || twice > 2 * n) {
        return;
      }
      PalExtent& slot = best[twice];
      if (slot.start == 0 || cand.length() > slot.length()) {
        slot = PalExtent{cand.start, cand.end, d + 1};
      }
    };
    current.push_back(left_seed);
    current.push_back(right_seed);
    for (const PalExtent& e : current) {
      for_each_extension(e, engine, offer);
      for_each_border_reduction(e, n, offer);
    }
    for (std::size_t twice = 2; twice <= 2 * n; ++twice) {
      if (best[twice].start != 0) {
        table.set(d + 1, best[twice]);
      }
    }
  }
  return table;
}

std::optional<std::size_t> hamming_distance_to_gpal(std::string_view x, const Involution& f) {
  const std::size_t len = x.size();
  std::size_t mismatches = 0;
  for (std::size_t p = 0; p < len / 2; ++p) {
    if (f(static_cast<Letter>(x[p])) != static_cast<Letter>(x[len - 1 - p])) {
      ++mismatches;
    }
  }
  if (len % 2 == 1) {
    const auto mid = static_cast<Letter>(x[len / 2]);
    if (f(mid) != mid) {
      if (!f.has_fixed_point()) {
        return std::nullopt;
      }
      ++mismatches;
    }
  }
  return mismatches;
}

std::optional<std::size_t> edit_distance_to_gpal_within(std::string_view x, const Involution& f,
                                                        std::size_t bound) {
  const std::size_t len = x.size();
  if (len == 0) {
    return 0;
  }
  // State (a, b): a letters consumed from the left, b from the right.
  // Each deletion changes a - b by one, so |a - b| <= cost <= bound.
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  const std::size_t width = 2 * bound + 1;
  std::vector<std::size_t> cost((len + 1) * width, kInf);
  auto cell = [&](std::size_t a, std::size_t b) -> std::size_t& {
    return cost[a * width + (b + bound - a)];
  };
  auto relax = [&](std::size_t a, std::size_t b, std::size_t value) {
    if (value > bound || a + b > len || (a > b ? a - b : b - a) > bound) {
      return;
    }
    std::size_t& c = cell(a, b);
    if (value < c) {
      c = value;
    }
  };

  std::size_t best = kInf;
  cell(0, 0) = 0;
  for (std::size_t a = 0; a <= len; ++a) {
    const std::size_t b_lo = a > bound ? a - bound : 0;
    const std::size_t b_hi = std::min(len - a, a + bound);
    for (std::size_t b = b_lo; b <= b_hi; ++b) {
      const std::size_t c = cell(a, b);
      if (c == kInf) {
        continue;
      }
      const std::size_t rest = len - a - b;
      if (rest == 0) {
        best = std::min(best, c);
        continue;
      }
      const auto lo = static_cast<Letter>(x[a]);
      const auto hi = static_cast<Letter>(x[len - 1 - b]);
      if (rest == 1) {
        best = std::min(best, c + (f(lo) == lo ? 0 : 1));
        continue;
      }
      relax(a + 1, b + 1, c + (f(lo) == hi ? 0 : 1));
      relax(a + 1, b, c + 1);
      relax(a, b + 1, c + 1);
    }
  }
  if (best > bound) {
    return std::nullopt;
  }
  return best;
}

}  // namespace gappal
