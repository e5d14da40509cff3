#include <gtest/gtest.h>

#include "gappal/maxpal.hpp"
#include "gappal/oracle.hpp"
#include "support.hpp"

namespace gappal {
namespace {

struct Fixture {
  explicit Fixture(std::string_view s, Involution inv = Involution::identity())
      : seq(rank_reduce(s)), f(inv), engine(seq, f) {}
  Sequence seq;
  Involution f;
  LceEngine engine;
};

std::vector<std::string> row_strings(const MaxPalTable& table, const Sequence& seq, std::size_t d) {
  std::vector<std::string> out;
  for (std::size_t twice = 2; twice <= 2 * seq.size(); ++twice) {
    const auto e = table.at(d, Center{twice});
    out.push_back(e ? std::string(seq.factor(e->start, e->end)) : std::string("-"));
  }
  return out;
}

const std::vector<std::string> kGtatcgRow0 = {"G", "", "T", "", "TAT", "", "T", "", "C", "", "G"};
const std::vector<std::string> kGtatcgHamming1 = {"G",  "GT",  "GTA", "TA",  "GTATC", "AT",
                                                  "ATC", "TC", "TCG", "CG", "G"};
const std::vector<std::string> kGtatcgEdit1 = {"G",      "GT",  "GTA", "GTAT", "GTATC", "GTATCG",
                                               "ATC",    "TC",  "TCG", "CG",   "G"};

TEST(MaximalExact, GtatcgTable) {
  Fixture fx("GTATCG");
  const MaxPalTable table = maximal_exact(fx.seq, fx.f, fx.engine);
  EXPECT_EQ(row_strings(table, fx.seq, 0), kGtatcgRow0);
  EXPECT_EQ(table.metric(), Metric::exact);
}

TEST(MaximalExact, HairpinCenter) {
  Fixture fx("GACATTCGAACGT", Involution::dna_complement());
  const MaxPalTable table = maximal_exact(fx.seq, fx.f, fx.engine);
  EXPECT_EQ(table.at(0, Center{15}), (PalExtent{5, 10, 0}));
  // Fixed-point-free involution: no odd-length palindromes.
  for (std::size_t c = 1; c <= 13; ++c) {
    EXPECT_FALSE(table.at(0, Center{2 * c}).has_value());
  }
}

TEST(MaximalExact, SingleLetter) {
  Fixture fx("A");
  const MaxPalTable table = maximal_exact(fx.seq, fx.f, fx.engine);
  EXPECT_EQ(table.center_count(), 1u);
  EXPECT_EQ(table.at(0, Center{2}), (PalExtent{1, 1, 0}));
}

TEST(MaximalExact, MatchesExpandAroundCenter) {
  std::mt19937_64 rng(17);
  for (int rep = 0; rep < 200; ++rep) {
    const std::string s = testing::random_string(rng, "ab", 1 + rng() % 200);
    Fixture fx(s);
    const MaxPalTable table = maximal_exact(fx.seq, fx.f, fx.engine);
    const std::size_t n = s.size();
    for (std::size_t twice = 2; twice <= 2 * n; ++twice) {
      std::size_t lo = (twice + 1) / 2;
      std::size_t hi = twice / 2;
      while (lo > 1 && hi < n && s[lo - 2] == s[hi]) {
        --lo;
        ++hi;
      }
      ASSERT_EQ(table.at(0, Center{twice}), (PalExtent{lo, hi, 0})) << s << " @" << twice;
    }
  }
}

TEST(MaximalHamming, GtatcgTable) {
  Fixture fx("GTATCG");
  const MaxPalTable table = maximal_hamming(fx.seq, fx.f, fx.engine, 1);
  EXPECT_EQ(row_strings(table, fx.seq, 0), kGtatcgRow0);
  EXPECT_EQ(row_strings(table, fx.seq, 1), kGtatcgHamming1);
}

TEST(MaximalHamming, HairpinChain) {
  Fixture fx("GACATTCGAACGT", Involution::dna_complement());
  const MaxPalTable table = maximal_hamming(fx.seq, fx.f, fx.engine, 1);
  const auto e = table.at(1, Center{15});
  ASSERT_TRUE(e.has_value());
  EXPECT_EQ(e->start, 2u);
  EXPECT_EQ(e->end, 13u);
  EXPECT_EQ(oracle::naive_hamming_dist_to_gpal(fx.seq.factor(2, 13), fx.f), std::optional<std::size_t>(1));
}

TEST(MaximalHamming, ZeroBudgetIsExact) {
  for (const auto& s : testing::random_corpus(23, "ACGT", 50, 1, 40)) {
    Fixture fx(s, Involution::dna_complement());
    EXPECT_EQ(maximal_hamming(fx.seq, fx.f, fx.engine, 0), maximal_exact(fx.seq, fx.f, fx.engine));
  }
}

TEST(MaximalHamming, CenterLetterCostsOneWithFixedPoint) {
  // f swaps a and b and fixes c: an 'a' in the middle must become 'c'.
  const Involution f = Involution::custom({{'a', 'b'}, {'c', 'c'}});
  Fixture fx("aab", f);
  const MaxPalTable table = maximal_hamming(fx.seq, fx.f, fx.engine, 1);
  EXPECT_FALSE(table.at(0, Center{4}).has_value());
  EXPECT_EQ(table.at(1, Center{4}), (PalExtent{1, 3, 1}));
}

TEST(MaximalHamming, PairsUsedAndNextPairFails) {
  for (const auto& s : testing::random_corpus(29, "ACGT", 200, 1, 30)) {
    Fixture fx(s, Involution::dna_complement());
    const std::size_t delta = 3;
    const MaxPalTable table = maximal_hamming(fx.seq, fx.f, fx.engine, delta);
    const std::size_t n = s.size();
    for (std::size_t d = 0; d <= delta; ++d) {
      for (const PalExtent& e : table.row(d)) {
        const auto dist = oracle::naive_hamming_dist_to_gpal(fx.seq.factor(e.start, e.end), fx.f);
        ASSERT_TRUE(dist.has_value());
        EXPECT_EQ(*dist, e.errors_used);
        EXPECT_LE(e.errors_used, d);
        if (e.start > 1 && e.end < n) {
          // Growing by one pair would need d + 1 mismatches.
          EXPECT_EQ(e.errors_used, d);
          EXPECT_NE(fx.f(fx.seq.at(e.start - 1)), fx.seq.at(e.end + 1));
        }
      }
    }
  }
}

TEST(Extend, ResultsAreOneMoreErrorPalindromes) {
  Fixture fx("GTATCG");
  const auto out = extend(PalExtent{3, 3, 0}, fx.engine);
  ASSERT_EQ(out.size(), 3u);
  EXPECT_EQ(out[0], (PalExtent{2, 3, 1}));  // ignore S[2]
  EXPECT_EQ(out[1], (PalExtent{3, 4, 1}));  // ignore S[4]
  EXPECT_EQ(out[2], (PalExtent{2, 4, 1}));  // ignore both
  for (const PalExtent& e : out) {
    EXPECT_LE(oracle::naive_edit_dist_to_gpal(fx.seq.factor(e.start, e.end), fx.f), 1u);
  }
}

TEST(Extend, IgnoreRightOfTat) {
  Fixture fx("GTATCG");
  const auto out = extend(PalExtent{2, 4, 0}, fx.engine);
  ASSERT_EQ(out.size(), 3u);
  // ignore-right: lgpal(1, 6) compares G with G.
  EXPECT_EQ(out[1], (PalExtent{1, 6, 1}));
  EXPECT_EQ(oracle::naive_edit_dist_to_gpal("GTATCG", fx.f), 1u);
  for (const PalExtent& e : out) {
    EXPECT_LE(oracle::naive_edit_dist_to_gpal(fx.seq.factor(e.start, e.end), fx.f), 1u);
  }
}

TEST(Extend, BorderOmitsLeftwardExtensions) {
  Fixture fx("GTATCG");
  const auto out = extend(PalExtent{1, 1, 0}, fx.engine);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0], (PalExtent{1, 2, 1}));
  EXPECT_EQ(extend(PalExtent{6, 6, 0}, fx.engine).size(), 1u);
}

TEST(BorderReduce, Rules) {
  EXPECT_EQ(border_reduce(PalExtent{1, 5, 0}, 6), (std::vector<PalExtent>{{1, 4, 1}}));
  EXPECT_EQ(border_reduce(PalExtent{2, 6, 0}, 6), (std::vector<PalExtent>{{3, 6, 1}}));
  EXPECT_EQ(border_reduce(PalExtent{1, 6, 0}, 6), (std::vector<PalExtent>{{1, 5, 1}, {2, 6, 1}}));
  EXPECT_TRUE(border_reduce(PalExtent{2, 5, 0}, 6).empty());
}

TEST(MaximalEdit, GtatcgTable) {
  Fixture fx("GTATCG");
  const MaxPalTable table = maximal_edit(fx.seq, fx.f, fx.engine, 1);
  EXPECT_EQ(row_strings(table, fx.seq, 0), kGtatcgRow0);
  EXPECT_EQ(row_strings(table, fx.seq, 1), kGtatcgEdit1);
}

TEST(MaximalEdit, ZeroBudgetIsExact) {
  for (const auto& s : testing::random_corpus(31, "ab", 50, 1, 40)) {
    Fixture fx(s);
    EXPECT_EQ(maximal_edit(fx.seq, fx.f, fx.engine, 0), maximal_exact(fx.seq, fx.f, fx.engine));
  }
}

TEST(MaximalEdit, SingleLetterWithoutFixedPoint) {
  Fixture fx("A", Involution::dna_complement());
  const MaxPalTable table = maximal_edit(fx.seq, fx.f, fx.engine, 1);
  EXPECT_FALSE(table.at(0, Center{2}).has_value());
  EXPECT_EQ(table.at(1, Center{2}), (PalExtent{1, 1, 1}));
}

void expect_tables_match_oracle(std::string_view s, const Involution& f, std::size_t delta) {
  Fixture fx(s, f);
  EXPECT_EQ(maximal_hamming(fx.seq, fx.f, fx.engine, delta),
            oracle::brute_maximal(s, f, delta, Metric::hamming))
      << "hamming " << s;
  EXPECT_EQ(maximal_edit(fx.seq, fx.f, fx.engine, delta),
            oracle::brute_maximal(s, f, delta, Metric::edit))
      << "edit " << s;
}

TEST(MaximalTables, MatchOracleSmallExhaustive) {
  for (const auto& s : testing::all_strings_up_to("ab", 7)) {
    expect_tables_match_oracle(s, Involution::identity(), 2);
  }
  for (const auto& s : testing::all_strings_up_to("AT", 7)) {
    expect_tables_match_oracle(s, Involution::dna_complement(), 2);
  }
}

TEST(MaximalTables, MatchOracleCustomInvolution) {
  const Involution f = Involution::custom({{'a', 'b'}, {'c', 'c'}});
  for (const auto& s : testing::random_corpus(37, "abc", 150, 1, 11)) {
    expect_tables_match_oracle(s, f, 3);
  }
}

TEST(MaximalTables, MoreBudgetNeverShortens) {
  for (const auto& s : testing::random_corpus(41, "ACGT", 100, 1, 60)) {
    Fixture fx(s, Involution::dna_complement());
    for (const MaxPalTable& table : {maximal_hamming(fx.seq, fx.f, fx.engine, 4),
                                     maximal_edit(fx.seq, fx.f, fx.engine, 4)}) {
      for (std::size_t d = 0; d < 4; ++d) {
        for (std::size_t twice = 2; twice <= 2 * s.size(); ++twice) {
          const auto lo = table.at(d, Center{twice});
          const auto hi = table.at(d + 1, Center{twice});
          if (lo) {
            ASSERT_TRUE(hi.has_value());
            EXPECT_GE(hi->length(), lo->length());
          }
        }
      }
    }
  }
}

TEST(MaximalEdit, LiteralMaximality) {
  for (const auto& s : testing::random_corpus(43, "ACGT", 150, 1, 16)) {
    Fixture fx(s, Involution::dna_complement());
    const std::size_t delta = 3;
    const MaxPalTable table = maximal_edit(fx.seq, fx.f, fx.engine, delta);
    for (std::size_t d = 0; d <= delta; ++d) {
      for (const PalExtent& e : table.row(d)) {
        EXPECT_EQ(oracle::naive_edit_dist_to_gpal(fx.seq.factor(e.start, e.end), fx.f),
                  e.errors_used);
        if (e.start > 1 && e.end < s.size()) {
          EXPECT_GT(oracle::naive_edit_dist_to_gpal(fx.seq.factor(e.start - 1, e.end + 1), fx.f), d);
        }
      }
    }
  }
}

TEST(EditDistanceWithin, MatchesIntervalDp) {
  for (const auto& s : testing::random_corpus(47, "ACGT", 400, 0, 18)) {
    const Involution f = Involution::dna_complement();
    const std::size_t truth = oracle::naive_edit_dist_to_gpal(s, f);
    for (std::size_t bound = 0; bound <= 5; ++bound) {
      const auto got = edit_distance_to_gpal_within(s, f, bound);
      if (truth <= bound) {
        EXPECT_EQ(got, std::optional<std::size_t>(truth)) << s;
      } else {
        EXPECT_FALSE(got.has_value()) << s;
      }
    }
  }
}

TEST(HammingDistance, MatchesOracle) {
  const Involution custom = Involution::custom({{'a', 'b'}, {'c', 'c'}});
  for (const auto& s : testing::random_corpus(53, "abc", 300, 0, 12)) {
    EXPECT_EQ(hamming_distance_to_gpal(s, custom), oracle::naive_hamming_dist_to_gpal(s, custom));
  }
}

TEST(MaxPalTable, RejectsBadSlots) {
  MaxPalTable table(Metric::edit, 1, 4);
  EXPECT_THROW((void)table.at(2, Center{2}), std::out_of_range);
  EXPECT_THROW((void)table.at(0, Center{1}), std::out_of_range);
  EXPECT_THROW((void)table.at(0, Center{9}), std::out_of_range);
  EXPECT_THROW(table.set(0, PalExtent{3, 5, 0}), std::out_of_range);
}

}  // namespace
}  // namespace gappal
