#pragma once

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gappal::cli {

/// Raised for malformed input files; the CLI maps it to exit status 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Record {
  std::string id;
  std::string sequence;
};

/// Parses FASTA. Header lines start with '>' and the id is the first word
/// after it; sequence lines are concatenated with all whitespace removed.
/// Input without any header is read as one record named `fallback_id`.
std::vector<Record> parse_fasta(std::istream& in, const std::string& fallback_id = "seq1");

/// Reads an involution file: one `X Y` pair per line meaning f(X) = Y.
/// Blank lines and lines starting with '#' are skipped.
std::vector<std::pair<char, char>> parse_involution_pairs(std::istream& in);

void uppercase_in_place(std::string& s);

struct SegmentView {
  std::size_t start = 0;
  std::size_t end = 0;
  bool gap = false;
  std::size_t errors_used = 0;
};

struct RecordResult {
  std::string id;
  std::string sequence;
  bool feasible = false;
  std::size_t total_gap_length = 0;
  std::size_t gap_count = 0;
  std::vector<SegmentView> segments;
};

struct RunParameters {
  std::string mode;
  std::string metric;  // empty in exact-gaps mode
  std::string involution;
  std::size_t max_gaps = 0;
  std::size_t min_length = 1;
  std::size_t delta = 0;
  bool uppercase = true;
};

/// Structural check of a result against its sequence: the segments must
/// tile [1..n] in order and agree with the reported gap totals.
void check_tiling(const RecordResult& result);

std::string render_pretty(const RecordResult& result);
std::string tsv_header();
std::string render_tsv(const RecordResult& result);
/// Whole JSON document for all records.
std::string render_json(const RunParameters& params, const std::vector<RecordResult>& results);
/// One-line notice written to stderr for an infeasible record.
std::string infeasible_notice(const RecordResult& result);

}  // namespace gappal::cli
