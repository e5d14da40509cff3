#include "gappal/triples.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace gappal {

void TripleSet::advance(const Sequence& seq, const Involution& f) {
  const std::size_t j = end_ + 1;
  if (j > seq.size()) {
    throw std::out_of_range("cannot advance past the end of the sequence");
  }
  const Letter current = seq.at(j);

  // Surviving progressions, shifted by one. Consecutive members of a
  // progression share the letter in front of them, so testing the first
  // member decides the whole progression.
  std::vector<Triple> runs;
  runs.reserve(triples_.size() + 2);
  for (const Triple& t : triples_) {
    if (t.start >= 2 && f(seq.at(t.start - 1)) == current) {
      runs.push_back(Triple{t.start - 1, t.step, t.count});
    }
  }
  if (j >= 2 && f(seq.at(j - 1)) == current) {
    runs.push_back(Triple{j - 1, Triple::kInfiniteStep, 1});
  }
  if (f(current) == current) {
    runs.push_back(Triple{j, Triple::kInfiniteStep, 1});
  }

  // Regroup: the head of each run may now have a different predecessor.
  std::vector<Triple> next;
  next.reserve(runs.size() + 1);
  auto append = [&next](std::size_t start, std::size_t step, std::size_t count) {
    if (!next.empty() && step != Triple::kInfiniteStep && next.back().step == step) {
      next.back().count += count;
    } else {
      next.push_back(Triple{start, step, count});
    }
  };
  bool have_prev = false;
  std::size_t prev = 0;
  for (const Triple& run : runs) {
    append(run.start, have_prev ? run.start - prev : Triple::kInfiniteStep, 1);
    if (run.count >= 2) {
      append(run.start + run.step, run.step, run.count - 1);
    }
    prev = run.last();
    have_prev = true;
  }

  triples_ = std::move(next);
  end_ = j;
}

std::vector<std::size_t> TripleSet::expand() const {
  std::vector<std::size_t> out;
  for (const Triple& t : triples_) {
    for (std::size_t c = 0; c < t.count; ++c) {
      out.push_back(t.start + c * (t.infinite_step() ? 0 : t.step));
    }
  }
  return out;
}

std::vector<Triple> TripleSet::trim(std::size_t min_length) const {
  if (min_length < 1) {
    throw std::invalid_argument("minimum palindrome length must be at least 1");
  }
  std::vector<Triple> out;
  if (end_ + 1 < min_length) {
    return out;
  }
  const std::size_t limit = end_ + 1 - min_length;  // last admissible start
  [[maybe_unused]] std::size_t partial = 0;
  for (const Triple& t : triples_) {
    if (t.start > limit) {
      break;
    }
    std::size_t kept = 1;
    if (!t.infinite_step()) {
      kept = std::min(t.count, (limit - t.start) / t.step + 1);
    }
    if (kept < t.count) {
      ++partial;
    }
    out.push_back(Triple{t.start, t.step, kept});
  }
  assert(partial <= 1);
  return out;
}

std::size_t TripleSet::size_bound(std::size_t j) {
  // 2 * ceil(log2(j + 1)) + 2
  const std::size_t ceil_log = j == 0 ? 0 : static_cast<std::size_t>(std::bit_width(j));
  return 2 * ceil_log + 2;
}

TripleSet advance(TripleSet state, const Sequence& seq, const Involution& f) {
  state.advance(seq, f);
  return state;
}

}  // namespace gappal
