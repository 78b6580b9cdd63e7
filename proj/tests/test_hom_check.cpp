#include <gtest/gtest.h>

#include "common.hpp"

using namespace metacyclic;
using testing_groups::P;

namespace {

std::uint64_t count_accepted(const GroupParams &G, bool drop_parity) {
  std::uint64_t n = 0;
  const std::uint64_t na = pow2(G.a()), nb = pow2(G.b());
  for (std::uint64_t x1 = 0; x1 < na; ++x1)
    for (std::uint64_t y1 = 0; y1 < nb; ++y1)
      for (std::uint64_t x2 = 0; x2 < na; ++x2)
        for (std::uint64_t y2 = 0; y2 < nb; ++y2) {
          const auto c = lemma22_conditions({{x1, y1}, {x2, y2}}, G);
          n += (c.divisible && c.power && c.conjugation && (drop_parity || c.parity)) ? 1 : 0;
        }
  return n;
}

} // namespace

TEST(Lemma22, Examples) {
  const GroupParams G = P("I:4,4,3,2");
  EXPECT_TRUE(lemma22_check(GenImages::identity(G), G));
  const GenImages sq{alpha(), pow(beta(G), 2, G)};
  const auto c = lemma22_conditions(sq, G);
  EXPECT_FALSE(c.parity);
  EXPECT_FALSE(lemma22_check(sq, G));
  EXPECT_FALSE(oracle_check(sq, G));
  EXPECT_EQ(count_accepted(G, false), 2048U);
}

TEST(Oracle, Examples) {
  const GroupParams G = P("I:4,4,3,2");
  EXPECT_TRUE(oracle_check(GenImages::identity(G), G));
  const GenImages conj{{G.r().value(), 0}, beta(G)};
  EXPECT_TRUE(oracle_check(conj, G));
  EXPECT_EQ(apply_by_words(conj, alpha(), G), (Element{G.r().value(), 0}));
  const Element g{3, 7};
  EXPECT_EQ(apply_by_words(GenImages::identity(G), g, G), g);
  const GenImages psi0{{1, 8}, {0, 1}};
  EXPECT_EQ(apply_by_words(psi0, {2, 1}, G), mul(pow({1, 8}, 2, G), beta(G), G));
}

TEST(Oracle, UnclassifiedGroupAllowed) {
  const GroupParams G = GroupParams::general(4, 4, 3, 5);
  EXPECT_TRUE(oracle_check(GenImages::identity(G), G));
  EXPECT_THROW(lemma22_check(GenImages::identity(G), G), Error);
}

class Lemma22Master : public ::testing::TestWithParam<std::string> {};

// The congruence conditions and the relation oracle define the same predicate on
// the whole candidate space.
TEST_P(Lemma22Master, MatchesOracleExhaustively) {
  const GroupParams G = P(GetParam());
  ClosureScratch scratch;
  const std::uint64_t na = pow2(G.a()), nb = pow2(G.b());
  std::uint64_t accepted = 0;
  for (std::uint64_t x1 = 0; x1 < na; ++x1)
    for (std::uint64_t y1 = 0; y1 < nb; ++y1)
      for (std::uint64_t x2 = 0; x2 < na; ++x2)
        for (std::uint64_t y2 = 0; y2 < nb; ++y2) {
          const GenImages g{{x1, y1}, {x2, y2}};
          const bool lem = lemma22_check(g, G);
          ASSERT_EQ(lem, oracle_check(g, G, scratch)) << x1 << "," << y1 << "," << x2 << "," << y2;
          accepted += lem;
          const auto c = lemma22_conditions(g, G);
          if (c.divisible && c.parity) {
            ASSERT_EQ(c.power && c.conjugation, simplified_conditions(g, G));
          }
        }
  EXPECT_EQ(accepted, pow2(aut_order_formula_bits(G)));
}

TEST_P(Lemma22Master, DroppingParityConditionEnlarges) {
  const GroupParams G = P(GetParam());
  EXPECT_GT(count_accepted(G, true), count_accepted(G, false));
}

INSTANTIATE_TEST_SUITE_P(Small, Lemma22Master, ::testing::Values("I:4,4,3,2", "II:3,3,2", "II:4,3,2"),
                         testing_groups::param_name);

TEST(ApplyByWords, BijectiveAndMultiplicative) {
  for (const char *spec : {"I:4,4,3,2", "II:3,3,2", "II:4,3,2"}) {
    const GroupParams G = P(spec);
    const auto all = enumerate_automorphisms(G);
    const auto elems = enumerate(G);
    for (std::size_t i = 0; i < all.size(); i += 37) {
      std::vector<Element> image;
      for (const Element &g : elems)
        image.push_back(apply_by_words(all[i], g, G));
      std::sort(image.begin(), image.end());
      ASSERT_TRUE(std::adjacent_find(image.begin(), image.end()) == image.end());
      for (const Element &g : elems)
        for (const Element &h : elems)
          ASSERT_EQ(apply_by_words(all[i], mul(g, h, G), G),
                    mul(apply_by_words(all[i], g, G), apply_by_words(all[i], h, G), G));
    }
  }
}
