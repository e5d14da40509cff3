#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "cli_support.hpp"
#include "gappal/gappal.h"

namespace {

using gappal::cli::InputError;
using gappal::cli::Record;
using gappal::cli::RecordResult;
using gappal::cli::RunParameters;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;

struct InvolutionDeleter {
  void operator()(gappal_involution* p) const { gappal_involution_destroy(p); }
};
struct TextDeleter {
  void operator()(gappal_text* p) const { gappal_text_destroy(p); }
};
struct DecompositionDeleter {
  void operator()(gappal_decomposition* p) const { gappal_decomposition_destroy(p); }
};
using InvolutionHandle = std::unique_ptr<gappal_involution, InvolutionDeleter>;
using TextHandle = std::unique_ptr<gappal_text, TextDeleter>;
using DecompositionHandle = std::unique_ptr<gappal_decomposition, DecompositionDeleter>;

// Failure reported by the library, carrying its message.
struct LibraryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(gappal_status status, const std::string& context) {
  if (status != GAPPAL_OK) {
    throw LibraryError(context + ": " + gappal_last_error());
  }
}

InvolutionHandle make_involution(const std::string& selector) {
  gappal_involution* raw = nullptr;
  if (selector == "identity") {
    check(gappal_involution_create(GAPPAL_INVOLUTION_IDENTITY, &raw), "involution");
  } else if (selector == "dna") {
    check(gappal_involution_create(GAPPAL_INVOLUTION_DNA, &raw), "involution");
  } else if (selector.rfind("file:", 0) == 0) {
    const std::string path = selector.substr(5);
    std::ifstream in(path);
    if (!in) {
      throw InputError("cannot open involution file '" + path + "'");
    }
    const auto pairs = gappal::cli::parse_involution_pairs(in);
    std::string from;
    std::string to;
    for (const auto& [x, y] : pairs) {
      from.push_back(x);
      to.push_back(y);
    }
    check(gappal_involution_create_custom(from.data(), to.data(), pairs.size(), &raw),
          "involution file '" + path + "'");
  } else {
    throw InputError("unknown involution '" + selector + "' (use identity, dna or file:<path>)");
  }
  return InvolutionHandle(raw);
}

std::vector<Record> read_records(const std::optional<std::string>& path,
                                 const std::optional<std::string>& text) {
  if (text) {
    if (text->empty()) {
      throw InputError("--text is empty");
    }
    return {{"text", *text}};
  }
  if (*path == "-") {
    return gappal::cli::parse_fasta(std::cin);
  }
  std::ifstream in(*path);
  if (!in) {
    throw InputError("cannot open input file '" + *path + "'");
  }
  return gappal::cli::parse_fasta(in);
}

RecordResult process(const Record& record, const gappal_involution* f, const RunParameters& p,
                     gappal_metric metric) {
  RecordResult result;
  result.id = record.id;
  result.sequence = record.sequence;

  gappal_text* raw_text = nullptr;
  check(gappal_text_create(record.sequence.data(), record.sequence.size(), f, &raw_text),
        "record '" + record.id + "'");
  const TextHandle text(raw_text);

  gappal_decomposition* raw = nullptr;
  const gappal_status status =
      p.mode == "exact-gaps"
          ? gappal_decompose_exact(text.get(), p.max_gaps, p.min_length, &raw)
          : gappal_decompose_maximal(text.get(), metric, p.max_gaps, p.min_length, p.delta, &raw);
  if (status == GAPPAL_INFEASIBLE) {
    return result;
  }
  check(status, "record '" + record.id + "'");
  const DecompositionHandle d(raw);

  check(gappal_decomposition_validate(d.get(), text.get(), metric, p.max_gaps, p.min_length, p.delta),
        "record '" + record.id + "' failed validation");

  result.feasible = true;
  result.total_gap_length = gappal_decomposition_total_gap_length(d.get());
  result.gap_count = gappal_decomposition_gap_count(d.get());
  const std::size_t count = gappal_decomposition_segment_count(d.get());
  result.segments.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    gappal_segment s{};
    check(gappal_decomposition_segment(d.get(), k, &s), "segment");
    result.segments.push_back({s.start, s.end, s.kind == GAPPAL_SEGMENT_GAP, s.errors_used});
  }
  gappal::cli::check_tiling(result);
  return result;
}

std::vector<RecordResult> process_all(const std::vector<Record>& records, const gappal_involution* f,
                                      const RunParameters& p, gappal_metric metric) {
  std::vector<RecordResult> results(records.size());
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), records.size()));
  for (std::size_t begin = 0; begin < records.size(); begin += workers) {
    const std::size_t end = std::min(records.size(), begin + workers);
    std::vector<std::future<RecordResult>> batch;
    for (std::size_t k = begin; k < end; ++k) {
      batch.push_back(std::async(std::launch::async, process, std::cref(records[k]), f, std::cref(p),
                                 metric));
    }
    for (std::size_t k = begin; k < end; ++k) {
      results[k] = batch[k - begin].get();
    }
  }
  return results;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decompose sequences into generalized palindromes with bounded gaps."};
  app.set_version_flag("--version", std::string("gappal 1.0.0"));

  RunParameters params;
  params.mode = "exact-gaps";
  params.involution = "identity";
  std::string format = "pretty";
  std::optional<std::string> metric_name;
  std::optional<std::size_t> delta;
  std::optional<std::string> input_path;
  std::optional<std::string> inline_text;
  bool no_upper = false;

  app.add_option("--mode", params.mode, "exact-gaps or maximal-delta")
      ->check(CLI::IsMember({"exact-gaps", "maximal-delta"}))
      ->capture_default_str();
  app.add_option("--metric", metric_name, "hamming or edit (maximal-delta mode)")
      ->check(CLI::IsMember({"hamming", "edit"}));
  app.add_option("--involution", params.involution, "identity, dna, or file:<path>")
      ->capture_default_str();
  app.add_option("-g,--gaps", params.max_gaps, "maximum number of gaps")->capture_default_str();
  app.add_option("-m,--min-length", params.min_length, "minimum palindrome length (>= 1)")
      ->capture_default_str();
  app.add_option("--delta", delta, "error budget per palindrome (maximal-delta mode)");
  app.add_option("--format", format, "pretty, tsv or json")
      ->check(CLI::IsMember({"pretty", "tsv", "json"}))
      ->capture_default_str();
  app.add_flag("--no-upper", no_upper, "keep letter case instead of uppercasing input");
  auto* text_opt = app.add_option("--text", inline_text, "sequence given on the command line");
  auto* path_opt = app.add_option("input", input_path, "FASTA or raw sequence file, '-' for stdin");
  text_opt->excludes(path_opt);
  path_opt->excludes(text_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (!input_path && !inline_text) {
      throw InputError("an input path or --text is required");
    }
    gappal_metric metric = GAPPAL_METRIC_EXACT;
    if (params.mode == "maximal-delta") {
      if (!metric_name) {
        throw InputError("--metric is required in maximal-delta mode");
      }
      params.metric = *metric_name;
      params.delta = delta.value_or(0);
      metric = *metric_name == "edit" ? GAPPAL_METRIC_EDIT : GAPPAL_METRIC_HAMMING;
    } else {
      if (delta) {
        throw InputError("--delta is only accepted in maximal-delta mode");
      }
      if (metric_name) {
        throw InputError("--metric is only accepted in maximal-delta mode");
      }
    }
    params.uppercase = !no_upper;

    const InvolutionHandle f = make_involution(params.involution);
    std::vector<Record> records = read_records(input_path, inline_text);
    if (params.uppercase) {
      for (Record& r : records) {
        gappal::cli::uppercase_in_place(r.sequence);
      }
    }

    const std::vector<RecordResult> results = process_all(records, f.get(), params, metric);

    bool any_infeasible = false;
    for (const RecordResult& r : results) {
      if (!r.feasible) {
        any_infeasible = true;
        std::cerr << gappal::cli::infeasible_notice(r);
      }
    }
    if (format == "json") {
      std::cout << gappal::cli::render_json(params, results);
    } else if (format == "tsv") {
      std::cout << gappal::cli::tsv_header();
      for (const RecordResult& r : results) {
        std::cout << gappal::cli::render_tsv(r);
      }
    } else {
      for (const RecordResult& r : results) {
        std::cout << gappal::cli::render_pretty(r);
      }
    }
    std::cout.flush();
    return any_infeasible ? kExitInfeasible : kExitOk;
  } catch (const InputError& e) {
    std::cerr << "gappal: " << e.what() << '\n';
  } catch (const LibraryError& e) {
    std::cerr << "gappal: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "gappal: internal error: " << e.what() << '\n';
  }
  return kExitError;
}
