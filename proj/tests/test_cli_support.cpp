#include <gtest/gtest.h>

#include <sstream>

#include "cli_support.hpp"
#include "json.hpp"

namespace gappal::cli {
namespace {

std::vector<Record> parse(const std::string& text) {
  std::istringstream in(text);
  return parse_fasta(in);
}

RecordResult gtatcg_result() {
  RecordResult r;
  r.id = "s";
  r.sequence = "GTATCG";
  r.feasible = true;
  r.total_gap_length = 3;
  r.gap_count = 2;
  r.segments = {{1, 1, true, 0}, {2, 4, false, 0}, {5, 6, true, 0}};
  return r;
}

TEST(Fasta, MultipleRecordsWithWrappedLines) {
  const auto records = parse(">first some description\nAC GT\nac\r\n\n>second\nGG\n");
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[0].id, "first");
  EXPECT_EQ(records[0].sequence, "ACGTac");
  EXPECT_EQ(records[1].id, "second");
  EXPECT_EQ(records[1].sequence, "GG");
}

TEST(Fasta, RawSequenceWithoutHeader) {
  const auto records = parse("ACGT\nTTAA\n");
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0].id, "seq1");
  EXPECT_EQ(records[0].sequence, "ACGTTTAA");
}

TEST(Fasta, MalformedInputs) {
  EXPECT_THROW(parse(""), InputError);
  EXPECT_THROW(parse("\n  \n"), InputError);
  EXPECT_THROW(parse(">\nACGT\n"), InputError);
  EXPECT_THROW(parse("ACGT\n>r\nAC\n"), InputError);
  EXPECT_THROW(parse(">a\n>b\nAC\n"), InputError);
  EXPECT_THROW(parse(">a\nAC\n>b\n"), InputError);
  EXPECT_THROW(parse(">a\nAC>GT\n"), InputError);
}

TEST(InvolutionFile, ParsesPairsAndComments) {
  std::istringstream in("# swap a and b\na b\n\nc c\n");
  EXPECT_EQ(parse_involution_pairs(in),
            (std::vector<std::pair<char, char>>{{'a', 'b'}, {'c', 'c'}}));
}

TEST(InvolutionFile, RejectsMalformedLines) {
  std::istringstream three("a b c\n");
  EXPECT_THROW(parse_involution_pairs(three), InputError);
  std::istringstream word("ab c\n");
  EXPECT_THROW(parse_involution_pairs(word), InputError);
  std::istringstream empty("# nothing\n");
  EXPECT_THROW(parse_involution_pairs(empty), InputError);
}

TEST(Uppercase, OnlyLettersChange) {
  std::string s = "acgT-n1";
  uppercase_in_place(s);
  EXPECT_EQ(s, "ACGT-N1");
}

TEST(Render, PrettyMarksGapsAndRoundTrips) {
  const std::string out = render_pretty(gtatcg_result());
  const std::string line = out.substr(out.find('\n') + 1, out.find('\n', out.find('\n') + 1) - out.find('\n') - 1);
  EXPECT_EQ(line, "[G] TAT [CG]");
  std::string stripped;
  for (char c : line) {
    if (c != '[' && c != ']' && c != ' ') {
      stripped.push_back(c);
    }
  }
  EXPECT_EQ(stripped, "GTATCG");
  EXPECT_NE(out.find("total_gap_length=3"), std::string::npos);
}

TEST(Render, Tsv) {
  EXPECT_EQ(tsv_header(), "seq_id\tstart\tend\tkind\tlength\terrors_used\n");
  EXPECT_EQ(render_tsv(gtatcg_result()),
            "s\t1\t1\tgap\t1\t0\n"
            "s\t2\t4\tpalindrome\t3\t0\n"
            "s\t5\t6\tgap\t2\t0\n");
}

TEST(Render, JsonStructure) {
  RunParameters p;
  p.mode = "exact-gaps";
  p.involution = "identity";
  p.max_gaps = 2;
  p.min_length = 3;
  RecordResult infeasible;
  infeasible.id = "t";
  infeasible.sequence = "abc";
  const auto doc = nlohmann::json::parse(render_json(p, {gtatcg_result(), infeasible}));
  EXPECT_EQ(doc["parameters"]["g"], 2);
  EXPECT_TRUE(doc["parameters"]["metric"].is_null());
  ASSERT_EQ(doc["records"].size(), 2u);
  EXPECT_EQ(doc["records"][0]["total_gap_length"], 3);
  EXPECT_EQ(doc["records"][0]["segments"][1]["text"], "TAT");
  EXPECT_EQ(doc["records"][0]["segments"][1]["kind"], "palindrome");
  EXPECT_EQ(doc["records"][1]["status"], "infeasible");
  EXPECT_FALSE(doc["records"][1].contains("segments"));
}

TEST(Render, TilingCheck) {
  RecordResult r = gtatcg_result();
  EXPECT_NO_THROW(check_tiling(r));
  r.segments[1].end = 3;
  EXPECT_THROW(check_tiling(r), std::logic_error);
  r = gtatcg_result();
  r.total_gap_length = 4;
  EXPECT_THROW(check_tiling(r), std::logic_error);
}

}  // namespace
}  // namespace gappal::cli
