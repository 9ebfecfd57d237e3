#include <gtest/gtest.h>

#include <random>

#include "twobridge/invariants.hpp"
#include "twobridge/kakimizu.hpp"
#include "twobridge/properties.hpp"

namespace twobridge {
namespace {

// Even expansions are unique, so expanding the value of any random even
// sequence gives the sequence back.
TEST(Property, ExpandInvertsEvaluateOnRandomSequences) {
  std::mt19937_64 rng(20260115);
  std::uniform_int_distribution<int> half(-4, 4);
  std::uniform_int_distribution<int> length(1, 5);
  for (int trial = 0; trial < 3000; ++trial) {
    std::vector<Int> entries;
    const int n = length(rng);
    for (int k = 0; k < 2 * n; ++k) {
      int h = 0;
      while (h == 0) h = half(rng);
      entries.push_back(2 * h);
    }
    const Slope s = Slope::from_fraction(evaluate_cf(entries));
    EXPECT_EQ(expand_even_cf(s), EvenCF::from_entries(entries)) << s;
  }
}

TEST(Property, MirrorNegatesExpansion) {
  for (const Slope& s : all_slopes(151))
    EXPECT_EQ(expand_even_cf(s.mirror()), expand_even_cf(s).negated()) << s;
}

TEST(Property, DualityIsAnInvolution) {
  for (const Slope& s : all_slopes(151)) EXPECT_EQ(inverse_slope(inverse_slope(s)), s) << s;
}

TEST(Property, DualSwapsInversionEntries) {
  for (const Slope& s : all_slopes(101)) {
    const auto pr = genus_profile(s);
    if (pr.symmetry != SymmetryType::kGeneric) continue;
    const auto dual = genus_profile(pr.dual);
    const auto v = pr.values();
    const auto w = dual.values();
    EXPECT_EQ((std::vector<Int>{w[2], w[3], w[0], w[1]}), v) << s;
  }
}

TEST(Property, HopfSetIsSymmetricForPalindromicSlopes) {
  for (const Slope& s : all_slopes(201)) {
    if (!slope_predicates(s).is_palindromic) continue;
    EXPECT_TRUE(kakimizu::hopf_set(expand_even_cf(s)).is_symmetric()) << s;
  }
}

TEST(Property, QuotientIsAPointIffAtMostOneNonHopfEntry) {
  for (const Slope& s : all_slopes(121)) {
    const auto qc = kakimizu::build_reduced_complex(s);
    const int non_hopf = 2 * qc.n - static_cast<int>(qc.hopf.indices.size());
    EXPECT_EQ(slope_predicates(s).is_fibered, non_hopf == 0) << s;
    EXPECT_EQ(qc.vertices.size() == 1, non_hopf <= 1) << s;
  }
}

TEST(Suite, SmallRunPasses) {
  for (const auto& r : run_property_suite(41)) EXPECT_TRUE(r.ok()) << r.name << ": " << r.detail;
}

TEST(Suite, ChecksCountTheirCases) {
  const auto r = check_cf_roundtrip(9);
  EXPECT_EQ(r.checked, 2u + 4u + 6u + 6u);
  EXPECT_TRUE(r.ok());
}

// The two quotient constructions agree wherever the direct one is feasible.
TEST(Suite, RoutesAgreeUpToGenusFive) {
  const auto r = check_route_agreement(200, 5);
  EXPECT_TRUE(r.ok()) << r.detail;
}

}  // namespace
}  // namespace twobridge
