#include <gtest/gtest.h>

#include "nakaseq/modcat.hpp"

using namespace nakaseq;

TEST(DescribeModule, ProjectiveOverSelfinjective) {
  const auto a = make_selfinjective(4, 4);
  const auto d = describe_module(a, {2, 4});
  EXPECT_EQ(d.socle, 1);
  EXPECT_EQ(d.radical, (Indec{3, 3}));
  EXPECT_TRUE(d.projective);
  EXPECT_EQ(d.injective_envelope, (Indec{2, 4}));
}

TEST(DescribeModule, SimpleOverRadicalSquareZero) {
  const auto a = make_selfinjective(4, 2);
  const auto d = describe_module(a, {1, 1});
  EXPECT_EQ(d.socle, 1);
  EXPECT_FALSE(d.radical.has_value());
  EXPECT_FALSE(d.projective);
  EXPECT_EQ(d.injective_envelope, (Indec{4, 2}));
}

TEST(DescribeModule, NonSelfinjectiveHasNoEnvelope) {
  const auto a = parse_algebra_spec("cyclic:3,3,2");
  const auto d = describe_module(a, {3, 2});
  EXPECT_EQ(d.socle, 1);
  EXPECT_TRUE(d.projective);
  EXPECT_FALSE(d.injective_envelope.has_value());
  EXPECT_THROW(describe_module(a, {3, 3}), ModuleError);
}

TEST(Syzygy, Examples) {
  const auto l24 = make_selfinjective(4, 2);
  EXPECT_EQ(syzygy(l24, {1, 1}), (Indec{2, 1}));
  EXPECT_EQ(syzygy(l24, {4, 1}), (Indec{1, 1}));
  EXPECT_FALSE(syzygy(l24, {3, 2}).has_value());
  const auto c332 = parse_algebra_spec("cyclic:3,3,2");
  EXPECT_EQ(syzygy(c332, {1, 1}), (Indec{2, 2}));
  const auto h = make_hereditary_a(3);
  EXPECT_EQ(syzygy(h, {1, 1}), (Indec{2, 2}));
  EXPECT_FALSE(syzygy(h, {3, 1}).has_value());
}

TEST(Syzygy, ProjectiveCoverAndRadical) {
  const auto a = parse_algebra_spec("cyclic:4,3,3,2");
  for (const auto& m : indecomposables(a)) {
    const auto p = projective_cover(a, m);
    EXPECT_EQ(p.top, m.top);
    EXPECT_TRUE(is_projective(a, p));
    const auto k = syzygy(a, m);
    EXPECT_EQ((k ? k->length : 0) + m.length, p.length);
    if (k) {
      EXPECT_EQ(socle(a, *k), socle(a, p));
    }
  }
}

TEST(Lattice, GammaExamples) {
  const int n = 5;
  const auto a = make_selfinjective(n, n);
  EXPECT_EQ(gamma(a, {n, 1}), (LatticePoint{0, 0}));
  EXPECT_EQ(gamma(a, {1, n}), (LatticePoint{0, n - 1}));
  EXPECT_EQ(gamma_inv(a, {n, 0}), (Indec{n, 1}));
  EXPECT_EQ(gamma_inv(a, {-1, 0}), (Indec{1, 1}));
  EXPECT_THROW(gamma_inv(a, {0, n}), Error);
  EXPECT_THROW(gamma_inv(a, {0, -1}), Error);
  EXPECT_THROW(gamma(parse_algebra_spec("cyclic:3,3,2"), {1, 1}), Error);
}

TEST(Lattice, GammaInverts) {
  for (int n = 2; n <= 6; ++n) {
    for (int k = 2; k <= 7; ++k) {
      const auto a = make_selfinjective(n, k);
      for (const auto& m : indecomposables(a)) {
        const auto p = gamma(a, m);
        EXPECT_GE(p.a, 0);
        EXPECT_LT(p.a, n);
        EXPECT_EQ(gamma_inv(a, p), m);
        EXPECT_EQ(gamma_inv(a, {p.a + 3 * n, p.b}), m);
      }
    }
  }
}

TEST(Lattice, SigmaShiftsProjectivesDown) {
  // One step right lowers every index by one: σ(P_i) = P_{i-1}.
  const auto a = make_selfinjective(4, 3);
  EXPECT_EQ(sigma(a, {2, 3}), (Indec{1, 3}));
  EXPECT_EQ(sigma(a, {1, 3}), (Indec{4, 3}));
  EXPECT_EQ(sigma(a, {3, 1}), (Indec{2, 1}));
}

TEST(Lattice, SigmaKeepsLengthAndLowersTop) {
  const auto a = make_selfinjective(5, 3);
  for (const auto& m : indecomposables(a)) {
    const auto s = sigma(a, m);
    EXPECT_EQ(s.length, m.length);
    EXPECT_EQ(s.top, a.wrap(m.top - 1));
    EXPECT_EQ(socle(a, s), a.wrap(socle(a, m) - 1));
  }
}

TEST(Lattice, SigmaOrbitHasLengthN) {
  const auto a = make_selfinjective(6, 2);
  for (const auto& m : indecomposables(a)) {
    Indec x = m;
    for (int i = 0; i < 6; ++i) {
      x = sigma(a, x);
      if (i < 5) {
        EXPECT_NE(x, m);
      }
    }
    EXPECT_EQ(x, m);
  }
}
