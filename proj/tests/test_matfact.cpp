#include <gtest/gtest.h>

#include <random>

#include "toricres/matfact.hpp"

using namespace toricres;

namespace {

PolyQ P(const char* text) { return PolyQ::parse(text); }

PolyQ random_poly(std::mt19937_64& rng, unsigned max_degree) {
  std::uniform_int_distribution<int> coef(-3, 3), den(1, 3), exp(0, static_cast<int>(max_degree)), terms(0, 4);
  PolyQ p;
  const int count = terms(rng);
  for (int t = 0; t < count; ++t) {
    Monomial m{};
    unsigned left = max_degree;
    for (int v = 0; v < 3; ++v) {
      const unsigned e = static_cast<unsigned>(exp(rng)) % (left + 1);
      m[v] = e;
      left -= e;
    }
    p += PolyQ::monomial(m, Rational(coef(rng), den(rng)));
  }
  return p;
}

}  // namespace

TEST(Poly, Arithmetic) {
  EXPECT_EQ(P("x*z") + PolyQ(-1) * P("y^3"), P("x*z - y^3"));
  EXPECT_EQ(P("x + y") + PolyQ(), P("x + y"));
  EXPECT_EQ(P("x + y") * P("x - y"), P("x^2 - y^2"));
  EXPECT_TRUE((P("x") - P("x")).is_zero());
  EXPECT_EQ(P("(x+1)^2"), P("x^2 + 2*x + 1"));
  EXPECT_EQ(P("3/2*x") * P("2/3"), P("x"));
}

TEST(Poly, CanonicalText) {
  EXPECT_EQ(P("x*z - y^4").to_string(), "-y^4 + x*z");
  EXPECT_EQ(P("0").to_string(), "0");
  EXPECT_EQ(P("-3/2*x^2*y + 7").to_string(), "-3/2*x^2*y + 7");
  EXPECT_EQ(P("z*y*x").to_string(), "x*y*z");
}

TEST(Poly, TextRoundTrip) {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 200; ++i) {
    const PolyQ p = random_poly(rng, 4);
    EXPECT_EQ(PolyQ::parse(p.to_string()), p) << p.to_string();
  }
}

TEST(Poly, ParseErrors) {
  for (const char* bad : {"", "x +", "w", "x^", "(x", "x/y", "x/0", "2x"}) {
    try {
      PolyQ::parse(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::Parse) << bad;
    }
  }
}

TEST(Poly, Divisibility) {
  const PolyQ f = P("x*z - y^3");
  EXPECT_TRUE(divisible(f * P("x + y^2 - 3"), f));
  EXPECT_FALSE(divisible(f + P("x"), f));
  EXPECT_EQ(remainder(P("x^2*z"), P("x*z")), PolyQ());
}

TEST(Matfact, SplittingIdentityEnforced) {
  try {
    Splitting(P("x*z - y^2"), P("x"), P("0"), P("0"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidSplitting);
  }
  EXPECT_NO_THROW(Splitting(P("x^2+y^2+z^2"), P("x"), P("y"), P("z")));
}

TEST(Matfact, DMatrixOfAn) {
  const auto m = build_bcd(Splitting::an(3));
  EXPECT_EQ(m.d(1, 3), P("y^3"));
  EXPECT_EQ(m.d(2, 3), P("-x"));
  const std::vector<const char*> expected{"0", "-z", "y", "0", "z", "0", "-x", "y^3",
                                          "-y", "x", "0", "-x", "0", "-y^3", "x", "0"};
  for (std::size_t i = 0; i < 16; ++i) EXPECT_EQ(m.d(i / 4, i % 4), P(expected[i])) << i;
}

TEST(Matfact, UpperBlockOfDIsAntisymmetric) {
  const auto m = build_bcd(Splitting(P("x^3 + y^2*z + z^5"), P("x^2"), P("y*z"), P("z^4")));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(m.d(i, j), -m.d(j, i));
  }
}

TEST(Matfact, FactorizationOfAnAndQuadric) {
  for (unsigned n = 1; n <= 6; ++n) {
    const auto s = Splitting::an(n);
    const auto m = build_bcd(s);
    EXPECT_TRUE(check_matrix_factorization(m.c, m.d, s.f()));
    EXPECT_TRUE(check_complex(m, s.f()));
  }
  const Splitting quadric(P("x^2+y^2+z^2"), P("x"), P("y"), P("z"));
  const auto m = build_bcd(quadric);
  EXPECT_TRUE(check_matrix_factorization(m.c, m.d, quadric.f()));
  EXPECT_TRUE(check_matrix_factorization(MatP::identity(4), MatP::identity(4), PolyQ(1)));
}

TEST(Matfact, PerturbedFactorizationFails) {
  const auto s = Splitting::an(2);
  const auto m = build_bcd(s);
  auto c = m.c;
  c(0, 1) += PolyQ(1);
  EXPECT_FALSE(check_matrix_factorization(c, m.d, s.f()));
}

TEST(Matfact, RepeatedFxEntriesInCBreakFactorization) {
  // Using f_x where f_z belongs in C fails once f_x != f_z.
  const auto s = Splitting::an(2);
  auto m = build_bcd(s);
  m.c(0, 1) = s.fx();
  m.c(1, 2) = s.fx();
  m.c(2, 1) = -s.fx();
  m.c(1, 0) = -s.fx();
  EXPECT_FALSE(check_matrix_factorization(m.c, m.d, s.f()));
}

TEST(Matfact, RandomSplittingsFactorize) {
  std::mt19937_64 rng(59);
  for (int i = 0; i < 30; ++i) {
    const PolyQ fx = random_poly(rng, 3), fy = random_poly(rng, 3), fz = random_poly(rng, 3);
    const PolyQ f = PolyQ::x() * fx + PolyQ::y() * fy + PolyQ::z() * fz;
    if (f.is_zero()) continue;
    const Splitting s(f, fx, fy, fz);
    const auto m = build_bcd(s);
    EXPECT_TRUE(check_matrix_factorization(m.c, m.d, f));
    EXPECT_TRUE(check_complex(m, f));
  }
}

TEST(Matfact, MinorsIdeal) {
  const auto m = build_bcd(Splitting::an(4));
  EXPECT_EQ(minors_ideal(m.d, {3, 4}), (std::vector<PolyQ>{P("y^5"), P("x*y"), P("x^2"), P("x*y^4")}));
  EXPECT_EQ(minimalize_monomials(minors_ideal(m.d, {3, 4})), (std::vector<PolyQ>{P("x^2"), P("x*y"), P("y^5")}));
  try {
    minors_ideal(m.d, {1, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidColumns);
  }
  EXPECT_THROW(minors_ideal(m.d, {0, 2}), Error);
  EXPECT_THROW(minors_ideal(m.d, {3, 5}), Error);
}

TEST(Matfact, MinorsAllZero) {
  MatP d(4, 4);
  d(0, 0) = P("x");
  try {
    minors_ideal(d, {1, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AllZero);
  }
}

TEST(Matfact, MinorsSignNormalized) {
  const auto m = build_bcd(Splitting(P("x^2+y^2+z^2"), P("x"), P("y"), P("z")));
  for (const auto& p : minors_ideal(m.d, {1, 2})) EXPECT_GT(p.leading_coefficient(), 0);
}

TEST(Matfact, Monomialize) {
  const Int n = 4;
  const std::vector<PolyQ> gens{P("y^5"), P("x*y"), P("x^2"), P("x*y^4")};
  EXPECT_EQ(monomialize(gens, ToricParam::an(n), gamma_n(n)).exps(),
            (std::vector<LatticeVec>{{2, 0}, {2, 1}, {5, 5}}));
  EXPECT_EQ(monomialize({P("x")}, ToricParam::an(n), gamma_n(n)).exps(), (std::vector<LatticeVec>{{1, 0}}));
  try {
    monomialize({P("x + y")}, ToricParam::an(n), gamma_n(n));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotMonomial);
  }
  // x*z and y^(n+1) land on the same exponent and cancel.
  EXPECT_THROW(monomialize({P("x*z - y^5")}, ToricParam::an(n), gamma_n(n)), Error);
}

TEST(Matfact, DerivationIdeal) {
  EXPECT_EQ(derivation_ideal_an(1).exps(), (std::vector<LatticeVec>{{2, 0}, {2, 1}, {2, 2}}));
  EXPECT_EQ(derivation_ideal_an(2).exps(), (std::vector<LatticeVec>{{2, 0}, {2, 1}, {3, 3}}));
  EXPECT_EQ(derivation_ideal_an(7).exps(), (std::vector<LatticeVec>{{2, 0}, {2, 1}, {8, 8}}));
  for (unsigned n = 1; n <= 12; ++n) {
    const Int m = n + 1;
    EXPECT_EQ(derivation_ideal_an(n).exps(), (std::vector<LatticeVec>{{2, 0}, {2, 1}, {m, m}}));
  }
  EXPECT_THROW(derivation_ideal_an(0), Error);
}
