#include <gtest/gtest.h>

#include "twobridge/invariants.hpp"

namespace twobridge {
namespace {

constexpr MarkedClass kHShort{Inversion::kQ, Arc::kShort};
constexpr MarkedClass kHLong{Inversion::kQ, Arc::kLong};
constexpr MarkedClass kPrimeShort{Inversion::kPrime, Arc::kShort};

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvariantViolation;
}

std::vector<Int> values_of(std::string_view text) {
  return genus_profile(parse_fraction(text)).values();
}

TEST(Classify, SymmetryTypes) {
  const auto torus = classify_marked_classes(parse_fraction("4/5"));
  EXPECT_EQ(torus.symmetry, SymmetryType::kTorus);
  EXPECT_EQ(torus.classes.size(), 2u);
  const auto generic = classify_marked_classes(parse_fraction("2/9"));
  EXPECT_EQ(generic.symmetry, SymmetryType::kGeneric);
  EXPECT_EQ(generic.classes.size(), 4u);
  const auto pal = classify_marked_classes(parse_fraction("4/15"));
  EXPECT_EQ(pal.symmetry, SymmetryType::kPalindromic);
  ASSERT_EQ(pal.classes.size(), 4u);
  EXPECT_EQ(pal.classes[2], kPrimeShort);
}

TEST(Classify, Names) {
  EXPECT_EQ(to_string(kHShort), "(h_{q/p},short)");
  EXPECT_EQ(to_string(MarkedClass{Inversion::kQPrime, Arc::kLong}), "(h_{q'/p},long)");
  EXPECT_EQ(to_string(SymmetryType::kPalindromic), "palindromic");
}

TEST(SeifertGenus, Examples) {
  EXPECT_EQ(seifert_genus(parse_fraction("2/3")), 1);
  EXPECT_EQ(seifert_genus(parse_fraction("4/5")), 2);
  EXPECT_EQ(seifert_genus(parse_fraction("16/37")), 3);
}

TEST(EquivariantGenus, TableRows) {
  EXPECT_EQ(equivariant_genus(parse_fraction("2/9"), kHShort), 2);
  EXPECT_EQ(values_of("2/9"), (std::vector<Int>{2, 1, 1, 2}));
  EXPECT_EQ(values_of("16/37"), (std::vector<Int>{3, 4, 4, 3}));
  EXPECT_EQ(values_of("6/11"), (std::vector<Int>{1, 2, 3, 1}));
  EXPECT_EQ(values_of("2/17"), (std::vector<Int>{4, 1, 1, 2}));
  EXPECT_EQ(values_of("4/11"), (std::vector<Int>{2, 2, 2, 2}));
  EXPECT_EQ(values_of("4/5"), (std::vector<Int>{2, 2}));
}

TEST(EquivariantGenus, Palindromic) {
  const Slope s = parse_fraction("4/15");
  EXPECT_EQ(equivariant_genus(s, kPrimeShort), 1);
  EXPECT_EQ(equivariant_genus(s, kHShort), 2);
  EXPECT_EQ(equivariant_genus(s, kHLong), 2);
}

TEST(EquivariantGenus, InvalidClass) {
  EXPECT_EQ(code_of([] { equivariant_genus(parse_fraction("2/9"), kPrimeShort); }),
            ErrorCode::kInvalidClass);
  EXPECT_EQ(code_of([] {
              equivariant_genus(parse_fraction("4/5"), {Inversion::kQPrime, Arc::kShort});
            }),
            ErrorCode::kInvalidClass);
}

TEST(EquivariantGenus, MirrorInvariant) {
  for (const Slope& s : all_slopes(61))
    EXPECT_EQ(genus_profile(s).values(), genus_profile(s.mirror()).values()) << s;
}

TEST(Profile, Attributes) {
  EXPECT_EQ(attribute_words(genus_profile(parse_fraction("4/5")).attributes),
            (std::vector<std::string>{"torus"}));
  EXPECT_EQ(attribute_words(genus_profile(parse_fraction("8/21")).attributes),
            (std::vector<std::string>{"fib", "sym"}));
  EXPECT_EQ(attribute_words(genus_profile(parse_fraction("4/11")).attributes),
            (std::vector<std::string>{"fib"}));
  EXPECT_TRUE(attribute_words(genus_profile(parse_fraction("2/9")).attributes).empty());
}

TEST(Profile, Counts) {
  const auto torus = genus_profile(parse_fraction("2/3"));
  EXPECT_EQ(torus.inversion_count, 1);
  EXPECT_EQ(torus.strong_equivalence_class_count, 1);
  const auto generic = genus_profile(parse_fraction("2/9"));
  EXPECT_EQ(generic.inversion_count, 2);
  EXPECT_EQ(generic.strong_equivalence_class_count, 2);
  const auto pal = genus_profile(parse_fraction("4/15"));
  EXPECT_EQ(pal.inversion_count, 2);
  EXPECT_EQ(pal.strong_equivalence_class_count, 4);
}

TEST(Profile, EntriesBoundedBelowByGenus) {
  for (const Slope& s : all_slopes(99)) {
    const auto pr = genus_profile(s);
    for (Int v : pr.values()) EXPECT_GE(v, pr.genus) << s;
  }
}

TEST(GapExample, Examples) {
  const auto trefoil = find_gap_example(1, 1);
  EXPECT_EQ(trefoil.cf, EvenCF::from_entries({2, 2}));
  EXPECT_EQ(trefoil.marked, kHShort);

  const auto g14 = find_gap_example(1, 4);
  EXPECT_EQ(g14.cf, EvenCF::from_entries({8, 2}));
  EXPECT_EQ(g14.slope.to_string(), "2/15");
  EXPECT_EQ(g14.equivariant, 4);
  // The table's 10_1 realizes the same pair.
  EXPECT_EQ(equivariant_genus(parse_fraction("2/17"), kHShort), 4);
  EXPECT_EQ(seifert_genus(parse_fraction("2/17")), 1);

  const auto g25 = find_gap_example(2, 5);
  EXPECT_EQ(g25.cf, EvenCF::from_entries({8, 2, 2, 2}));
  EXPECT_EQ(seifert_genus(g25.slope), 2);
  EXPECT_EQ(equivariant_genus(g25.slope, g25.marked), 5);
}

TEST(GapExample, Ordering) {
  EXPECT_EQ(code_of([] { find_gap_example(3, 2); }), ErrorCode::kInvalidOrdering);
  EXPECT_EQ(code_of([] { find_gap_example(0, 2); }), ErrorCode::kInvalidOrdering);
}

TEST(ArcGapExample, Examples) {
  const auto zero = find_arc_gap_example(0);
  EXPECT_EQ(zero.slope.to_string(), "2/3");
  EXPECT_EQ(zero.short_genus, 1);
  EXPECT_EQ(zero.long_genus, 1);

  const auto plus3 = find_arc_gap_example(3);
  EXPECT_EQ(plus3.cf, EvenCF::from_entries({8, -2}));
  EXPECT_EQ(plus3.short_genus, 4);
  EXPECT_EQ(plus3.long_genus, 1);

  const auto minus1 = find_arc_gap_example(-1);
  EXPECT_EQ(minus1.cf, EvenCF::from_entries({2, 4}));
  EXPECT_EQ(minus1.short_genus, 1);
  EXPECT_EQ(minus1.long_genus, 2);
}

}  // namespace
}  // namespace twobridge
