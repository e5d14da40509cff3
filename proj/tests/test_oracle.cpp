#include <gtest/gtest.h>

#include "gappal/oracle.hpp"
#include "support.hpp"

namespace gappal::oracle {
namespace {

TEST(Oracle, IsGpalExamples) {
  EXPECT_TRUE(naive_is_gpal("AGTACTTCATGA", Involution::identity()));
  EXPECT_TRUE(naive_is_gpal("TAGTCGACTA", Involution::dna_complement()));
  EXPECT_FALSE(naive_is_gpal("AB", Involution::identity()));
  EXPECT_TRUE(naive_is_gpal("", Involution::dna_complement()));
  EXPECT_TRUE(naive_is_gpal("abcba", Involution::identity()));
  EXPECT_FALSE(naive_is_gpal("ACA", Involution::dna_complement()));
}

TEST(Oracle, HammingDistance) {
  EXPECT_EQ(naive_hamming_dist_to_gpal("GTATC", Involution::identity()), 1u);
  EXPECT_EQ(naive_hamming_dist_to_gpal("ACG", Involution::dna_complement()), std::nullopt);
  EXPECT_EQ(naive_hamming_dist_to_gpal("ACGT", Involution::dna_complement()), 0u);
  EXPECT_EQ(naive_hamming_dist_to_gpal("AAAA", Involution::dna_complement()), 2u);
}

TEST(Oracle, EditDistance) {
  EXPECT_EQ(naive_edit_dist_to_gpal("GTATCG", Involution::identity()), 1u);
  EXPECT_EQ(naive_edit_dist_to_gpal("ACG", Involution::dna_complement()), 1u);
  EXPECT_EQ(naive_edit_dist_to_gpal("A", Involution::dna_complement()), 1u);
  EXPECT_EQ(naive_edit_dist_to_gpal("", Involution::dna_complement()), 0u);
  EXPECT_EQ(full_edit_dist_to_gpal("GTATCG", Involution::identity()), 1u);
}

TEST(Oracle, RestrictedEditEqualsFullEdit) {
  for (const auto& s : testing::all_strings_up_to("ab", 8)) {
    ASSERT_EQ(naive_edit_dist_to_gpal(s, Involution::identity()),
              full_edit_dist_to_gpal(s, Involution::identity()))
        << s;
  }
  for (const auto& s : testing::random_corpus(211, "ACGT", 150, 1, 7)) {
    ASSERT_EQ(naive_edit_dist_to_gpal(s, Involution::dna_complement()),
              full_edit_dist_to_gpal(s, Involution::dna_complement()))
        << s;
  }
  const Involution swap = Involution::custom({{'a', 'b'}, {'c', 'c'}});
  for (const auto& s : testing::random_corpus(223, "abc", 150, 1, 7)) {
    ASSERT_EQ(naive_edit_dist_to_gpal(s, swap), full_edit_dist_to_gpal(s, swap)) << s;
  }
}

TEST(Oracle, DistanceSelfConsistency) {
  for (const Involution& f : {Involution::identity(), Involution::dna_complement()}) {
    const std::string_view alphabet = f.kind() == InvolutionKind::identity ? "ab" : "AT";
    for (const auto& s : testing::all_strings_up_to(alphabet, 10)) {
      const auto hamming = naive_hamming_dist_to_gpal(s, f);
      const std::size_t edit = naive_edit_dist_to_gpal(s, f);
      if (hamming) {
        ASSERT_LE(edit, *hamming) << s;
      }
      ASSERT_EQ(naive_is_gpal(s, f), hamming == std::optional<std::size_t>(0)) << s;
      ASSERT_EQ(naive_is_gpal(s, f), edit == 0) << s;
    }
  }
}

TEST(Oracle, PalindromicSuffixStarts) {
  EXPECT_EQ(brute_P_j("AACCAACCAACCAACCAA", Involution::identity(), 18),
            (std::vector<std::size_t>{1, 5, 9, 13, 17, 18}));
  EXPECT_EQ(brute_P_j("AT", Involution::dna_complement(), 1), std::vector<std::size_t>{});
  EXPECT_EQ(brute_P_j("AT", Involution::dna_complement(), 2), std::vector<std::size_t>{1});
}

TEST(Oracle, MinGapsExample) {
  EXPECT_EQ(brute_min_gaps("GTATCG", Involution::identity(), 2, 3, 0, Metric::exact, Pieces::all), 3u);
  EXPECT_EQ(brute_min_gaps("GTATCG", Involution::identity(), 1, 3, 0, Metric::exact, Pieces::all), 6u);
  EXPECT_EQ(brute_min_gaps("abaca", Involution::identity(), 0, 1, 0, Metric::hamming, Pieces::maximal),
            std::nullopt);
}

TEST(Oracle, SmallestPeriod) {
  EXPECT_EQ(naive_smallest_period("abaab"), 3u);
  EXPECT_EQ(naive_smallest_period("aaaa"), 1u);
  EXPECT_EQ(naive_smallest_period("abc"), 3u);
  EXPECT_EQ(naive_smallest_period(""), 0u);
}

}  // namespace
}  // namespace gappal::oracle
