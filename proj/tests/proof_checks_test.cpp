#include "autfn/proof_checks.hpp"

#include <gtest/gtest.h>

namespace autfn {
namespace {

std::size_t failures_at(const CheckReport& r, const std::string& where) {
  std::size_t seen = 0, bad = 0;
  for (const auto& o : r.outcomes) {
    if (o.where != where) continue;
    ++seen;
    if (!o.ok) ++bad;
  }
  EXPECT_GT(seen, 0u) << "no outcomes at " << where;
  return bad;
}

TEST(LinearIdentities, UnsignedPair) {
  auto r = check_linear_identities(4);
  EXPECT_EQ(failures_at(r, "b=a2 c=a3"), 0u);
}

TEST(LinearIdentities, SignedPair) {
  auto r = check_linear_identities(4);
  EXPECT_EQ(failures_at(r, "b=a2^- c=a3"), 0u);
}

TEST(LinearIdentities, FullSweeps) {
  for (int n = 3; n <= 5; ++n) {
    auto r = check_linear_identities(n);
    EXPECT_TRUE(r.ok()) << to_string(r);
    // (2n-2)(2n-4) ordered pairs, eight checks each
    EXPECT_EQ(r.outcomes.size(), static_cast<std::size_t>(8 * (2 * n - 2) * (2 * n - 4)));
  }
  EXPECT_THROW(check_linear_identities(2), std::invalid_argument);
}

TEST(ShortAutIdentities, RankEight) {
  auto r = check_short_aut_identities(8);
  EXPECT_TRUE(r.ok()) << to_string(r);
  EXPECT_EQ(failures_at(r, "i=6 j=7"), 0u);
  EXPECT_EQ(failures_at(r, "k=6"), 0u);
}

TEST(ShortAutIdentities, TripleAtRankNine) {
  auto r = check_short_aut_identities(9);
  EXPECT_TRUE(r.ok()) << to_string(r);
  EXPECT_EQ(failures_at(r, "i=6 j=7 k=8"), 0u);
}

TEST(ShortAutIdentities, SampledAboveNineIsSeededAndLargeEnough) {
  auto a = check_short_aut_identities(12, 5);
  auto b = check_short_aut_identities(12, 5);
  EXPECT_TRUE(a.ok()) << to_string(a);
  ASSERT_EQ(a.outcomes.size(), b.outcomes.size());
  for (std::size_t i = 0; i < a.outcomes.size(); ++i) EXPECT_EQ(a.outcomes[i].where, b.outcomes[i].where);
  std::size_t triples = 0;
  for (const auto& o : a.outcomes) triples += o.check == "triple";
  EXPECT_GE(triples, kSampledTuples);
  EXPECT_THROW(check_short_aut_identities(7), std::invalid_argument);
}

TEST(ShortAutIdentities, IndexTuplesExhaustiveCount) {
  EXPECT_EQ(detail::index_tuples(6, 9, 3, true, 0).size(), 24u);
  EXPECT_EQ(detail::index_tuples(6, 9, 2, true, 0).size(), 12u);
  EXPECT_TRUE(detail::index_tuples(6, 6, 2, true, 0).empty());
}

TEST(OutPlusIdentities, RankSixAndSeven) {
  for (int n : {6, 7}) {
    auto r = check_out_plus_identities(n);
    EXPECT_TRUE(r.ok()) << to_string(r);
    EXPECT_EQ(failures_at(r, "n=" + std::to_string(n)), 0u);
  }
  EXPECT_EQ(failures_at(check_out_plus_identities(6), "i=3"), 0u);
}

TEST(OutPlusIdentities, Sweep) {
  for (int n = 8; n <= 12; ++n) {
    auto r = check_out_plus_identities(n);
    EXPECT_TRUE(r.ok()) << to_string(r);
  }
}

TEST(CheckReportTest, RendersFailures) {
  CheckReport r{"demo", 4, {}};
  r.record("x", "here", true);
  r.record("y", "there", false);
  EXPECT_EQ(r.failures(), 1u);
  EXPECT_EQ(to_string(r), "demo n=4: 2 checks, 1 failures\n  FAIL y at there\n");
}

}  // namespace
}  // namespace autfn
