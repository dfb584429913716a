#include "qtanner/group.hpp"

#include <gtest/gtest.h>

using namespace qtanner;

TEST(Cyclic, Basics) {
  const FiniteGroup c1 = cyclic(1);
  EXPECT_EQ(c1.order(), 1u);
  EXPECT_EQ(c1.mul(0, 0), 0u);

  const FiniteGroup c5 = cyclic(5);
  EXPECT_EQ(c5.mul(2, 4), 1u);
  EXPECT_EQ(c5.identity(), 0u);
  EXPECT_EQ(c5.inv(2), 3u);
  EXPECT_EQ(c5.label(3), "3");

  EXPECT_EQ(cyclic(46).order(), 46u);
  EXPECT_THROW(cyclic(0), input_error);
}

TEST(DirectProduct, KleinAndOrder12) {
  const FiniteGroup klein = direct_product(cyclic(2), cyclic(2));
  EXPECT_EQ(klein.order(), 4u);
  for (std::uint32_t g = 1; g < 4; ++g) {
    EXPECT_EQ(klein.inv(g), g);
    EXPECT_EQ(klein.mul(g, g), klein.identity());
  }

  EXPECT_EQ(direct_product(cyclic(6), cyclic(2)).order(), 12u);

  // C1 x G is G up to relabeling: same table entries.
  const FiniteGroup g = cyclic(7);
  const FiniteGroup trivial_prod = direct_product(cyclic(1), g);
  for (std::uint32_t a = 0; a < 7; ++a)
    for (std::uint32_t b = 0; b < 7; ++b) EXPECT_EQ(trivial_prod.mul(a, b), g.mul(a, b));
}

TEST(Quaternion, DefiningRelations) {
  const FiniteGroup q = quaternion8();
  const auto at = [&](const char* s) { return *q.index_of_label(s); };
  EXPECT_EQ(q.mul(at("i"), at("j")), at("k"));
  EXPECT_EQ(q.mul(at("j"), at("i")), at("-k"));
  EXPECT_EQ(q.mul(at("j"), at("k")), at("i"));
  EXPECT_EQ(q.mul(at("k"), at("i")), at("j"));
  for (std::uint32_t g = 0; g < 8; ++g) {
    const std::uint32_t sq = q.mul(g, g);
    EXPECT_TRUE(sq == at("1") || sq == at("-1"));
  }
  std::size_t order2 = 0;
  for (std::uint32_t g = 0; g < 8; ++g)
    if (q.element_order(g) == 2) ++order2;
  EXPECT_EQ(order2, 1u);  // only -1
}

TEST(Semidirect, TwistedAndUntwisted) {
  const FiniteGroup sd = semidirect_c4_c4(Twist::Nontrivial);
  EXPECT_EQ(sd.order(), 16u);
  const std::uint32_t a = *sd.index_of_label("a1b0");
  const std::uint32_t b = *sd.index_of_label("a0b1");
  EXPECT_EQ(sd.mul(b, a), *sd.index_of_label("a3b1"));  // b a = a^3 b
  EXPECT_NE(sd.mul(a, b), sd.mul(b, a));

  const FiniteGroup untwisted = semidirect_c4_c4(Twist::Trivial);
  const FiniteGroup prod = direct_product(cyclic(4), cyclic(4));
  for (std::uint32_t x = 0; x < 16; ++x)
    for (std::uint32_t y = 0; y < 16; ++y) EXPECT_EQ(untwisted.mul(x, y), prod.mul(x, y));
}

TEST(FromTable, ValidatesAxioms) {
  // C3 as a raw table.
  const FiniteGroup c3 = from_table({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  EXPECT_EQ(c3.order(), 3u);
  // Latin square violation
  EXPECT_THROW(from_table({{0, 1}, {0, 1}}), input_error);
  // Latin square but not associative (no identity works either): 2x2 swap
  EXPECT_THROW(from_table({{1, 0}, {1, 0}}), input_error);
}

TEST(RegularActions, ExamplesAndComposition) {
  const FiniteGroup c5 = cyclic(5);
  EXPECT_EQ(left_regular_perm(c5, 0), (Permutation{0, 1, 2, 3, 4}));
  EXPECT_EQ(left_regular_perm(c5, 2), (Permutation{2, 3, 4, 0, 1}));
  EXPECT_EQ(right_regular_perm(c5, 0), (Permutation{0, 1, 2, 3, 4}));
  EXPECT_EQ(right_regular_perm(c5, 1), (Permutation{4, 0, 1, 2, 3}));

  const FiniteGroup q = quaternion8();
  const std::uint32_t i = *q.index_of_label("i");
  EXPECT_EQ(left_regular_perm(q, i)[*q.index_of_label("-1")], *q.index_of_label("-i"));

  // Function composition: both regular actions are homomorphisms. Matrix
  // products compose in the reverse order.
  for (const FiniteGroup& g : {q, cyclic(6), semidirect_c4_c4(Twist::Nontrivial)}) {
    for (std::uint32_t a = 0; a < g.order(); ++a)
      for (std::uint32_t b = 0; b < g.order(); ++b) {
        EXPECT_EQ(compose(left_regular_perm(g, a), left_regular_perm(g, b)),
                  left_regular_perm(g, g.mul(a, b)));
        EXPECT_EQ(compose(right_regular_perm(g, a), right_regular_perm(g, b)),
                  right_regular_perm(g, g.mul(a, b)));
        EXPECT_EQ(multiply(permutation_matrix(left_regular_perm(g, a)),
                           permutation_matrix(left_regular_perm(g, b))),
                  permutation_matrix(left_regular_perm(g, g.mul(b, a))));
        EXPECT_EQ(multiply(permutation_matrix(right_regular_perm(g, a)),
                           permutation_matrix(right_regular_perm(g, b))),
                  permutation_matrix(right_regular_perm(g, g.mul(b, a))));
      }
  }
}

TEST(RegularActions, LeftRightCommuteAsMatrices) {
  for (const FiniteGroup& g :
       {quaternion8(), semidirect_c4_c4(Twist::Nontrivial), cyclic(16),
        direct_product(cyclic(2), cyclic(2))}) {
    for (std::uint32_t a = 0; a < g.order(); ++a)
      for (std::uint32_t b = 0; b < g.order(); ++b) {
        const BitMatrix la = permutation_matrix(left_regular_perm(g, a));
        const BitMatrix rb = permutation_matrix(right_regular_perm(g, b));
        EXPECT_EQ(multiply(la, rb), multiply(rb, la));
      }
  }
}

TEST(Transitivity, CycleStructure) {
  EXPECT_TRUE(is_right_transitive(cyclic(5), 1));
  EXPECT_FALSE(is_right_transitive(cyclic(6), 2));  // order 3
  const FiniteGroup klein = direct_product(cyclic(2), cyclic(2));
  for (std::uint32_t x = 0; x < 4; ++x) EXPECT_FALSE(is_right_transitive(klein, x));

  // Transitivity iff the identity's cycle under g -> g*x has length |G|.
  for (const FiniteGroup& g : {cyclic(12), quaternion8()}) {
    for (std::uint32_t x = 0; x < g.order(); ++x) {
      std::size_t len = 0;
      std::uint32_t at = g.identity();
      do {
        at = g.mul(at, x);
        ++len;
      } while (at != g.identity());
      EXPECT_EQ(is_right_transitive(g, x), len == g.order());
    }
  }
}

TEST(Automorphisms, KnownCounts) {
  const GroupDesc c12 = GroupDesc::cyclic(12);
  EXPECT_EQ(c12.automorphisms_of(c12.build()).size(), 4u);  // phi(12)
  const GroupDesc c5 = GroupDesc::cyclic(5);
  EXPECT_EQ(c5.automorphisms_of(c5.build()).size(), 4u);

  // Generic search agrees with the closed form on cyclic groups.
  EXPECT_EQ(automorphisms(cyclic(10)).size(), 4u);

  EXPECT_EQ(automorphisms(direct_product(cyclic(2), cyclic(2))).size(), 6u);  // S3
  EXPECT_EQ(automorphisms(quaternion8()).size(), 24u);                        // S4

  // Every returned map is an automorphism fixing the identity.
  const FiniteGroup sd = semidirect_c4_c4(Twist::Nontrivial);
  const auto auts = automorphisms(sd);
  EXPECT_FALSE(auts.empty());
  for (const auto& phi : auts) {
    EXPECT_EQ(phi[sd.identity()], sd.identity());
    for (std::uint32_t a = 0; a < sd.order(); ++a)
      for (std::uint32_t b = 0; b < sd.order(); ++b)
        EXPECT_EQ(phi[sd.mul(a, b)], sd.mul(phi[a], phi[b]));
  }
}

TEST(GroupDesc, BuildAndPrint) {
  const GroupDesc d =
      GroupDesc::product(GroupDesc::cyclic(6), GroupDesc::cyclic(2));
  EXPECT_EQ(d.str(), "product(cyclic(6),cyclic(2))");
  EXPECT_EQ(d.build().order(), 12u);
  EXPECT_EQ(GroupDesc::semidirect_c4_c4(Twist::Nontrivial).str(),
            "semidirect_c4_c4(nontrivial)");
  EXPECT_TRUE(GroupDesc::quaternion8() == GroupDesc::quaternion8());
  EXPECT_FALSE(GroupDesc::cyclic(3) == GroupDesc::cyclic(4));
}
