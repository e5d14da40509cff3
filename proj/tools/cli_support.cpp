#include "cli_support.hpp"

#include <cctype>
#include <sstream>

#include "json.hpp"

namespace gappal::cli {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string strip_whitespace(std::string_view line) {
  std::string out;
  out.reserve(line.size());
  for (char c : line) {
    if (!is_space(c)) {
      out.push_back(c);
    }
  }
  return out;
}

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> words;
  std::istringstream stream{std::string(line)};
  std::string w;
  while (stream >> w) {
    words.push_back(w);
  }
  return words;
}

}  // namespace

std::vector<Record> parse_fasta(std::istream& in, const std::string& fallback_id) {
  std::vector<Record> records;
  std::string line;
  std::string headerless;
  bool saw_header = false;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (!line.empty() && line.front() == '>') {
      const auto words = split_words(std::string_view(line).substr(1));
      if (words.empty()) {
        throw InputError("line " + std::to_string(line_no) + ": FASTA header without a name");
      }
      if (!saw_header && !headerless.empty()) {
        throw InputError("line " + std::to_string(line_no) +
                         ": sequence data appears before the first FASTA header");
      }
      if (saw_header && records.back().sequence.empty()) {
        throw InputError("FASTA record '" + records.back().id + "' has no sequence");
      }
      saw_header = true;
      records.push_back({words.front(), {}});
      continue;
    }
    if (line.find('>') != std::string::npos) {
      throw InputError("line " + std::to_string(line_no) + ": '>' inside a sequence line");
    }
    std::string data = strip_whitespace(line);
    if (saw_header) {
      records.back().sequence += data;
    } else {
      headerless += data;
    }
  }
  if (in.bad()) {
    throw InputError("read error");
  }
  if (!saw_header) {
    if (headerless.empty()) {
      throw InputError("input contains no sequence");
    }
    records.push_back({fallback_id, std::move(headerless)});
  } else if (records.back().sequence.empty()) {
    throw InputError("FASTA record '" + records.back().id + "' has no sequence");
  }
  return records;
}

std::vector<std::pair<char, char>> parse_involution_pairs(std::istream& in) {
  std::vector<std::pair<char, char>> pairs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto words = split_words(line);
    if (words.empty() || words.front().front() == '#') {
      continue;
    }
    if (words.size() != 2 || words[0].size() != 1 || words[1].size() != 1) {
      throw InputError("involution file line " + std::to_string(line_no) +
                       ": expected two single letters 'X Y'");
    }
    pairs.emplace_back(words[0][0], words[1][0]);
  }
  if (pairs.empty()) {
    throw InputError("involution file defines no pairs");
  }
  return pairs;
}

void uppercase_in_place(std::string& s) {
  for (char& c : s) {
    c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
}

void check_tiling(const RecordResult& r) {
  std::size_t next = 1;
  std::size_t gaps = 0;
  std::size_t total = 0;
  for (const SegmentView& s : r.segments) {
    if (s.start != next || s.end < s.start || s.end > r.sequence.size()) {
      throw std::logic_error("record '" + r.id + "': segments do not tile the sequence");
    }
    if (s.gap) {
      ++gaps;
      total += s.end - s.start + 1;
    }
    next = s.end + 1;
  }
  if (next != r.sequence.size() + 1 || gaps != r.gap_count || total != r.total_gap_length) {
    throw std::logic_error("record '" + r.id + "': segment list disagrees with its totals");
  }
}

std::string render_pretty(const RecordResult& r) {
  std::ostringstream out;
  out << '>' << r.id << "  length=" << r.sequence.size();
  if (!r.feasible) {
    out << "  infeasible\n";
    return out.str();
  }
  out << "  total_gap_length=" << r.total_gap_length << "  gaps=" << r.gap_count << '\n';
  for (std::size_t k = 0; k < r.segments.size(); ++k) {
    const SegmentView& s = r.segments[k];
    const std::string_view text = std::string_view(r.sequence).substr(s.start - 1, s.end - s.start + 1);
    if (k > 0) {
      out << ' ';
    }
    if (s.gap) {
      out << '[' << text << ']';
    } else {
      out << text;
    }
  }
  out << '\n';
  for (const SegmentView& s : r.segments) {
    out << "  " << s.start << ".." << s.end << '\t' << (s.gap ? "gap" : "palindrome")
        << "\tlength=" << (s.end - s.start + 1);
    if (!s.gap) {
      out << "\terrors=" << s.errors_used;
    }
    out << '\n';
  }
  return out.str();
}

std::string tsv_header() { return "seq_id\tstart\tend\tkind\tlength\terrors_used\n"; }

std::string render_tsv(const RecordResult& r) {
  std::ostringstream out;
  for (const SegmentView& s : r.segments) {
    out << r.id << '\t' << s.start << '\t' << s.end << '\t' << (s.gap ? "gap" : "palindrome")
        << '\t' << (s.end - s.start + 1) << '\t' << s.errors_used << '\n';
  }
  return out.str();
}

std::string render_json(const RunParameters& p, const std::vector<RecordResult>& results) {
  nlohmann::ordered_json doc;
  doc["parameters"] = {{"mode", p.mode},
                       {"metric", p.metric.empty() ? nlohmann::ordered_json(nullptr)
                                                   : nlohmann::ordered_json(p.metric)},
                       {"involution", p.involution},
                       {"g", p.max_gaps},
                       {"m", p.min_length},
                       {"delta", p.delta},
                       {"uppercase", p.uppercase}};
  auto records = nlohmann::ordered_json::array();
  for (const RecordResult& r : results) {
    nlohmann::ordered_json rec;
    rec["seq_id"] = r.id;
    rec["length"] = r.sequence.size();
    rec["status"] = r.feasible ? "ok" : "infeasible";
    if (r.feasible) {
      rec["total_gap_length"] = r.total_gap_length;
      rec["gap_count"] = r.gap_count;
      auto segs = nlohmann::ordered_json::array();
      for (const SegmentView& s : r.segments) {
        segs.push_back({{"start", s.start},
                        {"end", s.end},
                        {"kind", s.gap ? "gap" : "palindrome"},
                        {"length", s.end - s.start + 1},
                        {"errors_used", s.errors_used},
                        {"text", r.sequence.substr(s.start - 1, s.end - s.start + 1)}});
      }
      rec["segments"] = std::move(segs);
    }
    records.push_back(std::move(rec));
  }
  doc["records"] = std::move(records);
  return doc.dump(2) + "\n";
}

std::string infeasible_notice(const RecordResult& r) {
  return "status=infeasible\tseq_id=" + r.id + "\n";
}

}  // namespace gappal::cli
