#include "gappal/decompose.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "gappal/lce.hpp"
#include "gappal/triples.hpp"

namespace gappal {

std::string_view to_string(SegmentKind kind) {
  return kind == SegmentKind::palindrome ? "palindrome" : "gap";
}

void FactorSet::add(std::size_t start, std::size_t end, std::size_t errors_used) {
  if (start < 1 || end < start || end > n_) {
    throw std::out_of_range("factor [" + std::to_string(start) + ".." + std::to_string(end) +
                            "] outside text of length " + std::to_string(n_));
  }
  by_end_[end].push_back(Factor{start, end, errors_used});
  ++size_;
}

namespace {

/// MG / MG' tables shared by both dynamic programs. Costs saturate at
/// infinity() = n + 1.
class GapTables {
 public:
  GapTables(std::size_t n, std::size_t max_gaps)
      : n_(n),
        width_(max_gaps + 1),
        best_(cells(), infinity()),
        in_gap_(cells(), infinity()),
        piece_start_(cells(), 0),
        piece_errors_(cells(), 0) {
    for (std::size_t q = 0; q < width_; ++q) {
      best_[q] = 0;
    }
  }

  std::size_t infinity() const noexcept { return n_ + 1; }
  std::size_t max_gaps() const noexcept { return width_ - 1; }

  std::size_t mg(std::size_t j, std::size_t q) const { return best_[j * width_ + q]; }
  std::size_t mg_gap(std::size_t j, std::size_t q) const { return in_gap_[j * width_ + q]; }
  /// Start of the palindrome chosen for MG[j][q]; 0 when a gap ends at j.
  std::size_t piece_start(std::size_t j, std::size_t q) const {
    return piece_start_[j * width_ + q];
  }

  /// Fills MG'[j][q], then MG[j][q] from the best palindrome ending at j
  /// (cost `pal_cost`, starting at `pal_start`; pal_start = 0 for none).
  void fill(std::size_t j, std::size_t q, std::size_t pal_cost, std::size_t pal_start,
            std::size_t pal_errors) {
    const std::size_t at = j * width_ + q;
    if (q > 0) {
      const std::size_t from = std::min(in_gap_[at - width_], best_[at - width_ - 1]);
      in_gap_[at] = std::min(infinity(), from + 1);
    }
    if (pal_start != 0 && pal_cost < infinity() && pal_cost <= in_gap_[at]) {
      best_[at] = pal_cost;
      piece_start_[at] = pal_start;
      piece_errors_[at] = pal_errors;
    } else {
      best_[at] = in_gap_[at];
    }
  }

  std::optional<Decomposition> backtrace() const {
    const std::size_t total = mg(n_, max_gaps());
    if (total >= infinity()) {
      return std::nullopt;
    }
    Decomposition out;
    std::size_t j = n_;
    std::size_t q = max_gaps();
    while (j > 0) {
      const std::size_t at = j * width_ + q;
      if (piece_start_[at] != 0) {
        const std::size_t a = piece_start_[at];
        out.segments.push_back(Segment{a, j, SegmentKind::palindrome, piece_errors_[at]});
        j = a - 1;
        continue;
      }
      // A gap ends at j; walk back to where it starts. Ties go to starting
      // the gap later when a palindrome precedes it, so gaps never abut.
      const std::size_t gap_end = j;
      for (;;) {
        const std::size_t open_new = mg(j - 1, q - 1);
        const std::size_t extend_old = mg_gap(j - 1, q);
        if (open_new < extend_old ||
            (open_new == extend_old && (j == 1 || piece_start(j - 1, q - 1) != 0))) {
          break;
        }
        --j;
      }
      out.segments.push_back(Segment{j, gap_end, SegmentKind::gap, 0});
      out.total_gap_length += gap_end + 1 - j;
      ++out.gap_count;
      --j;
      --q;
    }
    std::reverse(out.segments.begin(), out.segments.end());
    assert(out.total_gap_length == total);
    return out;
  }

 private:
  std::size_t cells() const noexcept { return (n_ + 1) * width_; }

  std::size_t n_;
  std::size_t width_;
  std::vector<std::size_t> best_;     // MG
  std::vector<std::size_t> in_gap_;   // MG'
  std::vector<std::size_t> piece_start_;
  std::vector<std::size_t> piece_errors_;
};

void require_min_length(std::size_t min_length) {
  if (min_length < 1) {
    throw std::invalid_argument("minimum palindrome length must be at least 1");
  }
}

}  // namespace

std::optional<Decomposition> min_gap_decompose(const Sequence& seq, const Involution& f,
                                               std::size_t max_gaps, std::size_t min_length) {
  require_min_length(min_length);
  const std::size_t n = seq.size();
  if (n == 0) {
    return Decomposition{};
  }
  f.require_total(seq.letters());

  GapTables tables(n, max_gaps);
  const std::size_t width = max_gaps + 1;
  const std::size_t inf = tables.infinity();

  // MG_step slots of the trimmed progressions at every position; the slot at
  // j - step is read back at j.
  std::vector<std::size_t> slot_begin(n + 2, 0);
  std::vector<std::size_t> slot_step;
  std::vector<std::size_t> slot_cost;
  std::vector<std::size_t> slot_start;

  std::vector<std::size_t> pal_cost(width);
  std::vector<std::size_t> pal_start(width);
  std::vector<std::size_t> value(width);
  std::vector<std::size_t> value_start(width);

  TripleSet triples;
  for (std::size_t j = 1; j <= n; ++j) {
    triples.advance(seq, f);
    slot_begin[j] = slot_step.size();
    std::fill(pal_cost.begin(), pal_cost.end(), inf);
    std::fill(pal_start.begin(), pal_start.end(), 0);

    for (const Triple& t : triples.trim(min_length)) {
      const std::size_t shortest = t.last();
      for (std::size_t q = 0; q < width; ++q) {
        value[q] = tables.mg(shortest - 1, q);
        value_start[q] = shortest;
      }
      if (!t.infinite_step() && t.count >= 2) {
        // The same progression, one member shorter, ended at j - step.
        const std::size_t prev = j - t.step;
        std::size_t found = slot_begin[prev + 1];
        for (std::size_t s = slot_begin[prev]; s < slot_begin[prev + 1]; ++s) {
          if (slot_step[s] == t.step) {
            found = s;
            break;
          }
        }
        if (found == slot_begin[prev + 1]) {
          throw std::logic_error("missing progression slot at position " +
                                 std::to_string(prev));
        }
        for (std::size_t q = 0; q < width; ++q) {
          const std::size_t c = slot_cost[found * width + q];
          if (c <= value[q]) {
            value[q] = c;
            value_start[q] = slot_start[found * width + q];
          }
        }
      }
      if (!t.infinite_step()) {
        slot_step.push_back(t.step);
        slot_cost.insert(slot_cost.end(), value.begin(), value.end());
        slot_start.insert(slot_start.end(), value_start.begin(), value_start.end());
      }
      for (std::size_t q = 0; q < width; ++q) {
        if (value[q] < pal_cost[q] || (value[q] == pal_cost[q] && value_start[q] < pal_start[q])) {
          pal_cost[q] = value[q];
          pal_start[q] = value_start[q];
        }
      }
    }
    slot_begin[j + 1] = slot_step.size();

    for (std::size_t q = 0; q < width; ++q) {
      tables.fill(j, q, pal_cost[q], pal_start[q], 0);
    }
  }
  return tables.backtrace();
}

std::optional<Decomposition> factorize_with_gaps(const FactorSet& factors, std::size_t max_gaps) {
  const std::size_t n = factors.text_length();
  if (n == 0) {
    return Decomposition{};
  }
  GapTables tables(n, max_gaps);
  const std::size_t inf = tables.infinity();
  for (std::size_t j = 1; j <= n; ++j) {
    const auto& ending = factors.ending_at(j);
    for (std::size_t q = 0; q <= max_gaps; ++q) {
      std::size_t cost = inf;
      std::size_t start = 0;
      std::size_t errors = 0;
      for (const auto& factor : ending) {
        const std::size_t c = tables.mg(factor.start - 1, q);
        if (c < cost || (c == cost && start != 0 && factor.start < start)) {
          cost = c;
          start = factor.start;
          errors = factor.errors_used;
        }
      }
      tables.fill(j, q, cost, start, errors);
    }
  }
  return tables.backtrace();
}

FactorSet maximal_factor_set(const MaxPalTable& table, std::size_t min_length) {
  require_min_length(min_length);
  FactorSet factors(table.text_length());
  for (const PalExtent& e : table.row(table.delta())) {
    if (e.length() >= min_length) {
      factors.add(e.start, e.end, e.errors_used);
    }
  }
  return factors;
}

std::optional<Decomposition> maximal_delta_decompose(const Sequence& seq, const Involution& f,
                                                     std::size_t max_gaps, std::size_t min_length,
                                                     std::size_t delta, Metric metric) {
  require_min_length(min_length);
  if (metric == Metric::exact && delta > 0) {
    throw std::invalid_argument("the exact metric admits no errors; choose hamming or edit");
  }
  if (seq.empty()) {
    return Decomposition{};
  }
  const LceEngine engine(seq, f);
  const MaxPalTable table = metric == Metric::edit ? maximal_edit(seq, f, engine, delta)
                                                   : maximal_hamming(seq, f, engine, delta);
  return factorize_with_gaps(maximal_factor_set(table, min_length), max_gaps);
}

std::optional<std::string> validate(const Decomposition& decomposition, const Sequence& seq,
                                    const Involution& f, const DecompositionLimits& limits) {
  std::size_t expected_start = 1;
  std::size_t gaps = 0;
  std::size_t gap_total = 0;
  for (const Segment& s : decomposition.segments) {
    const std::string where = "segment [" + std::to_string(s.start) + ".." +
                              std::to_string(s.end) + "]";
    if (s.start != expected_start || s.end < s.start || s.end > seq.size()) {
      return where + " does not continue the tiling at position " +
             std::to_string(expected_start);
    }
    expected_start = s.end + 1;
    if (s.kind == SegmentKind::gap) {
      ++gaps;
      gap_total += s.length();
      continue;
    }
    if (s.length() < limits.min_length) {
      return where + " is shorter than " + std::to_string(limits.min_length);
    }
    if (s.errors_used > limits.delta) {
      return where + " uses " + std::to_string(s.errors_used) + " errors, more than " +
             std::to_string(limits.delta);
    }
    const std::string_view x = seq.factor(s.start, s.end);
    bool ok = false;
    switch (limits.metric) {
      case Metric::exact:
      case Metric::hamming: {
        const auto d = hamming_distance_to_gpal(x, f);
        ok = d && *d <= s.errors_used;
        break;
      }
      case Metric::edit:
        ok = edit_distance_to_gpal_within(x, f, s.errors_used).has_value();
        break;
    }
    if (!ok) {
      return where + " is not a generalized " + std::to_string(s.errors_used) +
             "-palindrome under " + std::string(to_string(limits.metric)) + " distance";
    }
  }
  if (expected_start != seq.size() + 1) {
    return "segments cover [1.." + std::to_string(expected_start - 1) + "] instead of [1.." +
           std::to_string(seq.size()) + "]";
  }
  if (gaps > limits.max_gaps) {
    return std::to_string(gaps) + " gaps exceed the limit of " + std::to_string(limits.max_gaps);
  }
  if (gaps != decomposition.gap_count) {
    return "gap_count " + std::to_string(decomposition.gap_count) + " but " +
           std::to_string(gaps) + " gap segments";
  }
  if (gap_total != decomposition.total_gap_length) {
    return "total_gap_length " + std::to_string(decomposition.total_gap_length) + " but gaps sum to " +
           std::to_string(gap_total);
  }
  return std::nullopt;
}

}  // namespace gappal
