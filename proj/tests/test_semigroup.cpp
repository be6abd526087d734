#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "toricres/matfact.hpp"
#include "toricres/semigroup.hpp"

using namespace toricres;

namespace {

AffineSemigroup S(std::vector<LatticeVec> gens) { return AffineSemigroup(std::move(gens)); }

std::vector<LatticeVec> random_pointed_gens(std::mt19937_64& rng, std::size_t count, Int range) {
  std::uniform_int_distribution<Int> c(-range, range);
  while (true) {
    std::vector<LatticeVec> gens;
    while (gens.size() < count) {
      LatticeVec v{c(rng), c(rng)};
      if (!v.is_zero() && std::find(gens.begin(), gens.end(), v) == gens.end()) gens.push_back(v);
    }
    try {
      if (std::holds_alternative<Cone2>(cone_hull(gens))) return gens;
    } catch (const Error&) {
    }
  }
}

}  // namespace

TEST(Semigroup, ConstructionRejectsLines) {
  try {
    S({{1, 0}, {-1, 0}, {0, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPointed);
  }
  EXPECT_THROW(S({{0, 0}, {1, 0}}), Error);
}

TEST(Semigroup, GeneratorsDeduplicated) {
  const auto s = S({{1, 1}, {1, 0}, {1, 1}, {2, 3}});
  EXPECT_EQ(s.gens(), (std::vector<LatticeVec>{{1, 0}, {1, 1}, {2, 3}}));
}

TEST(Semigroup, Member) {
  const auto g2 = gamma_n(2);
  EXPECT_TRUE(member(g2, {2, 1}));
  EXPECT_FALSE(member(g2, {0, 1}));
  EXPECT_TRUE(member(g2, g2.gens().front()));
  EXPECT_TRUE(member(g2, {0, 0}));
  // In the cone but not in the semigroup.
  EXPECT_FALSE(member(S({{1, 0}, {1, 2}}), {1, 1}));
}

TEST(Semigroup, MemberOnRaySemigroup) {
  const auto s = S({{2, 0}, {3, 0}});
  EXPECT_FALSE(member(s, {1, 0}));
  EXPECT_TRUE(member(s, {5, 0}));
  EXPECT_TRUE(member(s, {4, 0}));
  EXPECT_FALSE(member(s, {4, 1}));
  EXPECT_FALSE(s.is_full_dimensional());
  EXPECT_THROW(s.cone(), Error);
}

TEST(Semigroup, MemberAgreesWithEnumeration) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const auto gens = random_pointed_gens(rng, 3, 4);
    const AffineSemigroup s(gens);
    const LatticeVec w = s.grading();
    for (Int a = -20; a <= 20; ++a) {
      for (Int b = -20; b <= 20; ++b) {
        const LatticeVec v{a, b};
        const Int level = dot(w, v);
        if (level < 0 || level > 20 || !cone_contains(s.hull(), v)) continue;
        EXPECT_EQ(member(s, v), oracle::member_by_enumeration(gens, v, level)) << to_string(v);
      }
    }
  }
}

TEST(Semigroup, MinimalGeneratorsExamples) {
  const Int n = 3;
  const auto m1 = minimal_generators(S({{1, 0}, {1, 1}, {n, n + 1}, {0, 1}, {n - 1, n + 1}}));
  EXPECT_EQ(m1.gens(), (std::vector<LatticeVec>{{1, 0}, {0, 1}}));
  const auto m2 = minimal_generators(S({{0, -1}, {1, 1}, {1, 2}}));
  EXPECT_EQ(m2.gens(), (std::vector<LatticeVec>{{0, -1}, {1, 2}}));
  EXPECT_EQ(minimal_generators(S({{1, 0}})).gens(), (std::vector<LatticeVec>{{1, 0}}));
}

TEST(Semigroup, MinimalGeneratorsConsistentWithMember) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const AffineSemigroup s(random_pointed_gens(rng, 5, 5));
    const auto m = minimal_generators(s);
    for (auto g : s.gens()) EXPECT_TRUE(member(m, g));
    EXPECT_TRUE(same_semigroup(s, m));
    // Irredundant.
    for (std::size_t i = 0; i < m.gens().size() && m.gens().size() > 1; ++i) {
      std::vector<LatticeVec> rest;
      for (std::size_t j = 0; j < m.gens().size(); ++j) {
        if (j != i) rest.push_back(m.gens()[j]);
      }
      EXPECT_FALSE(member(AffineSemigroup(rest), m.gens()[i]));
    }
  }
}

TEST(Semigroup, Saturation) {
  const auto g4 = gamma_n(4);
  EXPECT_TRUE(same_semigroup(saturation(g4), g4));
  EXPECT_TRUE(is_saturated(g4));
  const auto sat = saturation(S({{1, 0}, {1, 2}}));
  EXPECT_EQ(sat.gens(), (std::vector<LatticeVec>{{1, 0}, {1, 1}, {1, 2}}));
  const auto quadrant = S({{1, 0}, {0, 1}});
  EXPECT_EQ(saturation(quadrant), quadrant);
  EXPECT_THROW(saturation(S({{1, 1}})), Error);
}

TEST(Semigroup, SaturationIdempotentAndContaining) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    const AffineSemigroup s(random_pointed_gens(rng, 3, 6));
    const auto sat = saturation(s);
    EXPECT_TRUE(same_semigroup(saturation(sat), sat));
    for (auto g : s.gens()) EXPECT_TRUE(member(sat, g));
    EXPECT_EQ(is_saturated(s), same_semigroup(s, sat));
  }
}

TEST(Semigroup, Classify) {
  EXPECT_EQ(classify(gamma_n(1)), ChartClass::cyclic(2, 1));
  const Int n = 6;
  EXPECT_EQ(classify(S({{0, -1}, {1, 1}, {n - 1, n}})), ChartClass::cyclic(5, 4));
  EXPECT_EQ(classify(S({{1, 0}, {1, 2}})), ChartClass::non_normal(2, 1));
  EXPECT_EQ(classify(S({{1, 0}, {0, 1}})), ChartClass::smooth());
  EXPECT_EQ(classify(S({{2, 0}, {0, 1}, {1, 0}})), ChartClass::smooth());
  EXPECT_EQ(classify(S({{2, 0}, {3, 0}, {0, 1}})), ChartClass::non_normal(1, 0));
}

TEST(Semigroup, RecognizesAkFamily) {
  for (Int k = 1; k <= 12; ++k) EXPECT_EQ(classify(gamma_n(k)), ChartClass::cyclic(k + 1, k));
}

TEST(Semigroup, ClassifyIsGl2zInvariant) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const AffineSemigroup s(random_pointed_gens(rng, 3, 5));
    const Mat2 m = oracle::random_unimodular(rng);
    EXPECT_EQ(classify(s), classify(transform(s, m)));
  }
}

TEST(Semigroup, TagRoundTrip) {
  for (const auto& c : {ChartClass::smooth(), ChartClass::cyclic(5, 4), ChartClass::non_normal(2, 1)}) {
    EXPECT_EQ(ChartClass::from_tag(c.tag()), c);
  }
  EXPECT_EQ(ChartClass::cyclic(3, 2).tag(), "cyclic:3,2");
  EXPECT_THROW(ChartClass::from_tag("cyclic:3"), Error);
}
