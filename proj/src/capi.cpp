#include <memory>
#include <mutex>
#include <new>
#include <string>

#include "gappal/alphabet.hpp"
#include "gappal/decompose.hpp"
#include "gappal/gappal.h"
#include "gappal/lce.hpp"
#include "gappal/maxpal.hpp"

struct gappal_involution {
  gappal::Involution f;
};

struct gappal_text {
  gappal_text(gappal::Sequence s, gappal::Involution inv) : seq(std::move(s)), f(inv) {}

  gappal::Sequence seq;
  gappal::Involution f;
  mutable std::once_flag engine_once;
  mutable std::unique_ptr<gappal::LceEngine> engine;

  const gappal::LceEngine& lce() const {
    std::call_once(engine_once, [this] { engine = std::make_unique<gappal::LceEngine>(seq, f); });
    return *engine;
  }
};

struct gappal_table {
  gappal::MaxPalTable table;
};

struct gappal_decomposition {
  gappal::Decomposition value;
};

namespace {

thread_local std::string last_error;

gappal_status fail(gappal_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <typename Fn>
gappal_status guarded(Fn&& fn) noexcept {
  try {
    last_error.clear();
    return fn();
  } catch (const gappal::InvolutionError& e) {
    return fail(GAPPAL_ERR_INVOLUTION, e.what());
  } catch (const std::out_of_range& e) {
    return fail(GAPPAL_ERR_OUT_OF_RANGE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(GAPPAL_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(GAPPAL_ERR_NO_MEMORY, "out of memory");
  } catch (const std::length_error& e) {
    return fail(GAPPAL_ERR_NO_MEMORY, e.what());
  } catch (const std::exception& e) {
    return fail(GAPPAL_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(GAPPAL_ERR_INTERNAL, "unknown error");
  }
}

gappal_status require(const void* p, const char* name) {
  if (p == nullptr) {
    return fail(GAPPAL_ERR_INVALID_ARGUMENT, std::string(name) + " must not be NULL");
  }
  return GAPPAL_OK;
}

gappal::Metric to_metric(gappal_metric metric) {
  switch (metric) {
    case GAPPAL_METRIC_EXACT:
      return gappal::Metric::exact;
    case GAPPAL_METRIC_HAMMING:
      return gappal::Metric::hamming;
    case GAPPAL_METRIC_EDIT:
      return gappal::Metric::edit;
  }
  throw std::invalid_argument("unknown metric " + std::to_string(static_cast<int>(metric)));
}

gappal_status emit(std::optional<gappal::Decomposition> result, gappal_decomposition** out) {
  if (!result) {
    last_error = "no decomposition satisfies the constraints";
    return GAPPAL_INFEASIBLE;
  }
  *out = new gappal_decomposition{std::move(*result)};
  return GAPPAL_OK;
}

}  // namespace

extern "C" {

const char* gappal_last_error(void) { return last_error.c_str(); }

const char* gappal_status_name(gappal_status status) {
  switch (status) {
    case GAPPAL_OK:
      return "ok";
    case GAPPAL_INFEASIBLE:
      return "infeasible";
    case GAPPAL_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case GAPPAL_ERR_INVOLUTION:
      return "invalid involution";
    case GAPPAL_ERR_OUT_OF_RANGE:
      return "out of range";
    case GAPPAL_ERR_NO_MEMORY:
      return "out of memory";
    case GAPPAL_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

gappal_status gappal_involution_create(gappal_involution_kind kind, gappal_involution** out) {
  return guarded([&] {
    if (auto s = require(out, "out"); s != GAPPAL_OK) {
      return s;
    }
    *out = nullptr;
    switch (kind) {
      case GAPPAL_INVOLUTION_IDENTITY:
        *out = new gappal_involution{gappal::Involution::identity()};
        return GAPPAL_OK;
      case GAPPAL_INVOLUTION_DNA:
        *out = new gappal_involution{gappal::Involution::dna_complement()};
        return GAPPAL_OK;
    }
    return fail(GAPPAL_ERR_INVALID_ARGUMENT, "unknown involution kind");
  });
}

gappal_status gappal_involution_create_custom(const char* from, const char* to,
                                              size_t pair_count, gappal_involution** out) {
  return guarded([&] {
    if (auto s = require(out, "out"); s != GAPPAL_OK) {
      return s;
    }
    *out = nullptr;
    if (pair_count > 0 && (from == nullptr || to == nullptr)) {
      return fail(GAPPAL_ERR_INVALID_ARGUMENT, "pair arrays must not be NULL");
    }
    std::vector<std::pair<gappal::Letter, gappal::Letter>> pairs;
    for (size_t i = 0; i < pair_count; ++i) {
      pairs.emplace_back(static_cast<gappal::Letter>(from[i]), static_cast<gappal::Letter>(to[i]));
    }
    *out = new gappal_involution{gappal::Involution::custom(pairs)};
    return GAPPAL_OK;
  });
}

void gappal_involution_destroy(gappal_involution* f) { delete f; }

gappal_status gappal_involution_apply(const gappal_involution* f, char letter, char* out) {
  return guarded([&] {
    if (auto s = require(f, "f"); s != GAPPAL_OK) {
      return s;
    }
    if (auto s = require(out, "out"); s != GAPPAL_OK) {
      return s;
    }
    *out = static_cast<char>(f->f(static_cast<gappal::Letter>(letter)));
    return GAPPAL_OK;
  });
}

gappal_status gappal_text_create(const char* letters, size_t length, const gappal_involution* f,
                                 gappal_text** out) {
  return guarded([&] {
    if (auto s = require(out, "out"); s != GAPPAL_OK) {
      return s;
    }
    *out = nullptr;
    if (auto s = require(f, "f"); s != GAPPAL_OK) {
      return s;
    }
    if (length > 0 && letters == nullptr) {
      return fail(GAPPAL_ERR_INVALID_ARGUMENT, "letters must not be NULL");
    }
    const std::string_view view(letters == nullptr ? "" : letters, length);
    f->f.require_total(view);
    *out = new gappal_text(gappal::rank_reduce(view), f->f);
    return GAPPAL_OK;
  });
}

void gappal_text_destroy(gappal_text* text) { delete text; }

size_t gappal_text_length(const gappal_text* text) { return text == nullptr ? 0 : text->seq.size(); }

gappal_status gappal_text_lgpal(const gappal_text* text, size_t i, size_t j, size_t* out) {
  return guarded([&] {
    if (auto s = require(text, "text"); s != GAPPAL_OK) {
      return s;
    }
    if (auto s = require(out, "out"); s != GAPPAL_OK) {
      return s;
    }
    if (text->seq.empty()) {
      return fail(GAPPAL_ERR_OUT_OF_RANGE, "lgpal on an empty text");
    }
    *out = text->lce().lgpal(i, j);
    return GAPPAL_OK;
  });
}

gappal_status gappal_table_create(const gappal_text* text, gappal_metric metric, size_t delta,
                                  gappal_table** out) {
  return guarded([&] {
    if (auto s = require(out, "out"); s != GAPPAL_OK) {
      return s;
    }
    *out = nullptr;
    if (auto s = require(text, "text"); s != GAPPAL_OK) {
      return s;
    }
    if (text->seq.empty()) {
      *out = new gappal_table{gappal::MaxPalTable(to_metric(metric), delta, 0)};
      return GAPPAL_OK;
    }
    const auto& engine = text->lce();
    switch (to_metric(metric)) {
      case gappal::Metric::exact:
        if (delta != 0) {
          return fail(GAPPAL_ERR_INVALID_ARGUMENT, "the exact metric requires delta = 0");
        }
        *out = new gappal_table{gappal::maximal_exact(text->seq, text->f, engine)};
        break;
      case gappal::Metric::hamming:
        *out = new gappal_table{gappal::maximal_hamming(text->seq, text->f, engine, delta)};
        break;
      case gappal::Metric::edit:
        *out = new gappal_table{gappal::maximal_edit(text->seq, text->f, engine, delta)};
        break;
    }
    return GAPPAL_OK;
  });
}

void gappal_table_destroy(gappal_table* table) { delete table; }

gappal_status gappal_table_get(const gappal_table* table, size_t d, size_t twice_center,
                               gappal_extent* out, int* present) {
  return guarded([&] {
    if (auto s = require(table, "table"); s != GAPPAL_OK) {
      return s;
    }
    if (auto s = require(out, "out"); s != GAPPAL_OK) {
      return s;
    }
    if (auto s = require(present, "present"); s != GAPPAL_OK) {
      return s;
    }
    const auto e = table->table.at(d, gappal::Center{twice_center});
    *present = e ? 1 : 0;
    *out = e ? gappal_extent{e->start, e->end, e->errors_used} : gappal_extent{0, 0, 0};
    return GAPPAL_OK;
  });
}

gappal_status gappal_decompose_exact(const gappal_text* text, size_t max_gaps, size_t min_length,
                                     gappal_decomposition** out) {
  return guarded([&] {
    if (auto s = require(out, "out"); s != GAPPAL_OK) {
      return s;
    }
    *out = nullptr;
    if (auto s = require(text, "text"); s != GAPPAL_OK) {
      return s;
    }
    return emit(gappal::min_gap_decompose(text->seq, text->f, max_gaps, min_length), out);
  });
}

gappal_status gappal_decompose_maximal(const gappal_text* text, gappal_metric metric,
                                       size_t max_gaps, size_t min_length, size_t delta,
                                       gappal_decomposition** out) {
  return guarded([&] {
    if (auto s = require(out, "out"); s != GAPPAL_OK) {
      return s;
    }
    *out = nullptr;
    if (auto s = require(text, "text"); s != GAPPAL_OK) {
      return s;
    }
    return emit(gappal::maximal_delta_decompose(text->seq, text->f, max_gaps, min_length, delta,
                                                to_metric(metric)),
                out);
  });
}

gappal_status gappal_factorize(size_t n, const gappal_factor* factors, size_t factor_count,
                               size_t max_gaps, gappal_decomposition** out) {
  return guarded([&] {
    if (auto s = require(out, "out"); s != GAPPAL_OK) {
      return s;
    }
    *out = nullptr;
    if (factor_count > 0 && factors == nullptr) {
      return fail(GAPPAL_ERR_INVALID_ARGUMENT, "factors must not be NULL");
    }
    gappal::FactorSet set(n);
    for (size_t i = 0; i < factor_count; ++i) {
      set.add(factors[i].start, factors[i].end, factors[i].errors_used);
    }
    return emit(gappal::factorize_with_gaps(set, max_gaps), out);
  });
}

void gappal_decomposition_destroy(gappal_decomposition* decomposition) { delete decomposition; }

size_t gappal_decomposition_segment_count(const gappal_decomposition* decomposition) {
  return decomposition == nullptr ? 0 : decomposition->value.segments.size();
}

gappal_status gappal_decomposition_segment(const gappal_decomposition* decomposition, size_t index,
                                           gappal_segment* out) {
  return guarded([&] {
    if (auto s = require(decomposition, "decomposition"); s != GAPPAL_OK) {
      return s;
    }
    if (auto s = require(out, "out"); s != GAPPAL_OK) {
      return s;
    }
    const auto& seg = decomposition->value.segments.at(index);
    *out = gappal_segment{seg.start, seg.end,
                          seg.kind == gappal::SegmentKind::gap ? GAPPAL_SEGMENT_GAP
                                                               : GAPPAL_SEGMENT_PALINDROME,
                          seg.errors_used};
    return GAPPAL_OK;
  });
}

size_t gappal_decomposition_total_gap_length(const gappal_decomposition* decomposition) {
  return decomposition == nullptr ? 0 : decomposition->value.total_gap_length;
}

size_t gappal_decomposition_gap_count(const gappal_decomposition* decomposition) {
  return decomposition == nullptr ? 0 : decomposition->value.gap_count;
}

gappal_status gappal_decomposition_validate(const gappal_decomposition* decomposition,
                                            const gappal_text* text, gappal_metric metric,
                                            size_t max_gaps, size_t min_length, size_t delta) {
  return guarded([&] {
    if (auto s = require(decomposition, "decomposition"); s != GAPPAL_OK) {
      return s;
    }
    if (auto s = require(text, "text"); s != GAPPAL_OK) {
      return s;
    }
    const gappal::DecompositionLimits limits{max_gaps, min_length, delta, to_metric(metric)};
    if (auto problem = gappal::validate(decomposition->value, text->seq, text->f, limits)) {
      return fail(GAPPAL_ERR_INVALID_ARGUMENT, *problem);
    }
    return GAPPAL_OK;
  });
}

}  // extern "C"
