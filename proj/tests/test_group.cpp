#include <gtest/gtest.h>

#include <random>
#include <unordered_set>

#include "common.hpp"

using namespace metacyclic;
using testing_groups::P;

TEST(Params, Classification) {
  const GroupParams I = P("I:4,4,3,2");
  EXPECT_EQ(I.family(), Family::I);
  EXPECT_EQ(I.r().value(), 5U);
  EXPECT_EQ(I.f(), 4U);
  EXPECT_EQ(I.z(), 0);
  EXPECT_THROW(P("I:4,4,2,2"), ConstraintViolation);

  const GroupParams II = P("II:3,3,2");
  EXPECT_EQ(II.family(), Family::II);
  EXPECT_EQ(II.r().value(), 3U);
  EXPECT_EQ(II.c(), 2U);
  EXPECT_EQ(II.d(), 1U);
}

TEST(Params, Rejections) {
  EXPECT_THROW(P("I:4,4,3,1"), ConstraintViolation);
  EXPECT_THROW(P("I:4,3,3,2"), ConstraintViolation);
  EXPECT_THROW(P("II:3,3,3"), ConstraintViolation);
  EXPECT_THROW(P("II:4,1,2"), FamilyIIIError);
  EXPECT_THROW(P("III:3,1"), FamilyIIIError);
  EXPECT_THROW(P("IV:1,2"), ParseError);
  EXPECT_THROW(P("I:4,4,3"), ParseError);
  EXPECT_THROW(P("I:4,4,x,2"), ParseError);
  // general constructor: congruences still enforced
  EXPECT_THROW(GroupParams::general(4, 4, 3, 2), ConstraintViolation);
  EXPECT_EQ(GroupParams::general(4, 4, 3, 5).family(), Family::Unclassified);
}

TEST(Params, DerivedConstants) {
  // w = -(1 + 2^(d-1))^-1 mod 2^(a+d-c)
  for (const auto &s : testing_groups::family_I_specs()) {
    const GroupParams G = P(s);
    const Residue one_plus(1 + static_cast<std::int64_t>(pow2(G.d() - 1)), G.y_bits());
    EXPECT_EQ(G.w() * one_plus, Residue(-1, G.y_bits())) << s;
    EXPECT_EQ(G.z(), G.b() < G.a() ? -1 : 0) << s;
  }
}

TEST(Element, MulExamples) {
  const GroupParams G = P("I:4,4,3,2");
  EXPECT_EQ(mul({1, 0}, {0, 1}, G), (Element{1, 1}));
  EXPECT_EQ(mul({2, 3}, {1, 1}, G), (Element{15, 4}));
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    const Element g = element_at(rng() % 256, G);
    EXPECT_EQ(mul(g, identity_element(), G), g);
    EXPECT_EQ(mul(identity_element(), g, G), g);
  }
}

TEST(Element, PowExamples) {
  const GroupParams G = P("I:4,4,3,2");
  EXPECT_EQ(pow({1, 1}, 2, G), (Element{6, 2}));
  EXPECT_EQ(pow({1, 0}, 16, G), identity_element());
  EXPECT_EQ(pow({7, 9}, 0, G), identity_element());
  EXPECT_EQ(order_of(beta(G), G), 32U);
  EXPECT_EQ(inv(identity_element(), G), identity_element());
  EXPECT_EQ(enumerate(G).size(), 256U);
}

TEST(Element, EnumerationOrderAndCap) {
  const GroupParams G = P("II:3,3,2");
  const auto all = enumerate(G);
  ASSERT_EQ(all.size(), 64U);
  for (std::size_t i = 0; i + 1 < all.size(); ++i)
    EXPECT_LT(all[i], all[i + 1]);
  EXPECT_THROW(enumerate(G, 5), CapExceeded);
}

TEST(Element, ParseAndFormat) {
  const GroupParams G = P("I:4,4,3,2");
  EXPECT_EQ(parse_element("a^2*b^3", G), (Element{2, 3}));
  EXPECT_EQ(parse_element("1", G), identity_element());
  EXPECT_EQ(parse_element("a^17*b^0", G), (Element{1, 0}));
  // b^16 = a^8
  EXPECT_EQ(parse_element("a^0*b^16", G), (Element{8, 0}));
  EXPECT_EQ(format_element({15, 4}), "a^15*b^4");
  EXPECT_THROW(parse_element("a^-1*b^0", G), ParseError);
  EXPECT_THROW(parse_element("b^2*a^1", G), ParseError);
}

class GroupLaws : public ::testing::TestWithParam<std::string> {};

TEST_P(GroupLaws, Associativity) {
  const GroupParams G = P(GetParam());
  const std::uint64_t n = pow2(G.order_bits());
  std::mt19937_64 rng(3);
  for (int i = 0; i < 10000; ++i) {
    const Element g = element_at(rng() % n, G), h = element_at(rng() % n, G), k = element_at(rng() % n, G);
    ASSERT_EQ(mul(mul(g, h, G), k, G), mul(g, mul(h, k, G), G));
  }
}

TEST_P(GroupLaws, PowMatchesIteratedMul) {
  const GroupParams G = P(GetParam());
  for_each_element(G, [&](const Element &g) {
    Element acc = identity_element();
    for (std::int64_t k = 0; k <= 64; ++k) {
      ASSERT_EQ(pow(g, k, G), acc) << format_element(g) << "^" << k;
      acc = mul(acc, g, G);
    }
    ASSERT_EQ(mul(g, inv(g, G), G), identity_element());
    ASSERT_EQ(pow(g, -3, G), inv(pow(g, 3, G), G));
  });
}

TEST_P(GroupLaws, DefiningRelations) {
  const GroupParams G = P(GetParam());
  const Element a = alpha(), b = beta(G);
  EXPECT_EQ(pow(a, static_cast<std::int64_t>(pow2(G.a())), G), identity_element());
  EXPECT_EQ(pow(b, static_cast<std::int64_t>(pow2(G.b())), G), pow(a, static_cast<std::int64_t>(pow2(G.c())), G));
  EXPECT_EQ(mul(mul(b, a, G), inv(b, G), G), pow(a, static_cast<std::int64_t>(G.r().value()), G));
}

TEST_P(GroupLaws, NonsplitWitness) {
  const GroupParams G = P(GetParam());
  EXPECT_EQ(order_of(beta(G), G), pow2(G.a() + G.b() - G.c()));
  EXPECT_GT(order_of(beta(G), G), pow2(G.b()));
}

TEST_P(GroupLaws, IndexRoundTrip) {
  const GroupParams G = P(GetParam());
  std::unordered_set<Element> seen;
  for_each_element(G, [&](const Element &g) {
    ASSERT_EQ(element_at(element_index(g, G), G), g);
    seen.insert(g);
  });
  EXPECT_EQ(seen.size(), pow2(G.order_bits()));
}

INSTANTIATE_TEST_SUITE_P(TestGroups, GroupLaws, ::testing::ValuesIn(testing_groups::all_specs()),
                         testing_groups::param_name);
