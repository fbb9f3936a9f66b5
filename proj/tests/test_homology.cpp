#include <gtest/gtest.h>

#include "nakaseq/homology.hpp"
#include "oracle/quiver_hom.hpp"

using namespace nakaseq;

namespace {

oracle::Quiver quiver_of(const NakayamaAlgebra& a) {
  return {a.vertices(), a.is_cyclic(), a.kupisch()};
}

std::pair<int, int> key(const Indec& m) { return {m.top, m.length}; }

}  // namespace

TEST(HomDim, Examples) {
  const auto l24 = make_selfinjective(4, 2);
  const auto l44 = make_selfinjective(4, 4);
  EXPECT_EQ(hom_dim(l24, {2, 2}, {1, 2}), 1);
  EXPECT_EQ(hom_dim(l44, {3, 4}, {3, 3}), 1);
  EXPECT_EQ(hom_dim(l24, {1, 2}, {2, 1}), 0);
  EXPECT_THROW(hom_dim(l24, {1, 3}, {1, 1}), ModuleError);
}

TEST(HomDim, EndomorphismsOfShortModules) {
  for (auto spec : {"cyclic:3,3,2", "cyclic:4,3,3,2", "selfinjective:n=3,k=7"}) {
    const auto a = parse_algebra_spec(spec);
    for (const auto& m : indecomposables(a)) {
      const int expect = 1 + (m.length - 1) / a.vertices();
      EXPECT_EQ(hom_dim(a, m, m), expect) << spec << ' ' << m;
    }
  }
}

TEST(Ext1Dim, Examples) {
  const auto l44 = make_selfinjective(4, 4);
  EXPECT_EQ(ext1_dim(l44, {3, 1}, {3, 3}), 0);
  EXPECT_EQ(ext1_dim(l44, {2, 2}, {3, 3}), 1);
  EXPECT_EQ(ext1_dim(make_selfinjective(4, 2), {1, 1}, {2, 1}), 1);
  for (const auto& x : indecomposables(l44)) {
    EXPECT_EQ(ext1_dim(l44, {1, 4}, x), 0);
  }
}

TEST(ExtDim, Examples) {
  const auto c = parse_algebra_spec("cyclic:3,3,2");
  EXPECT_EQ(ext_dim(c, {3, 1}, {2, 1}, 2), 1);
  EXPECT_EQ(ext_dim(c, {3, 1}, {2, 1}, 1), 0);
  EXPECT_EQ(hom_dim(c, {3, 1}, {2, 1}), 0);
  const auto h = make_hereditary_a(3);
  for (const auto& m : indecomposables(h)) {
    for (const auto& n : indecomposables(h)) {
      EXPECT_EQ(ext_dim(h, m, n, 2), 0);
      EXPECT_EQ(ext_dim(h, m, n, 1), ext1_dim(h, m, n));
    }
  }
  EXPECT_THROW(ext_dim(h, {1, 1}, {1, 1}, 0), Error);
}

// Independent GF(p) intertwiner oracle versus the combinatorial formulas.
class OracleAgreement : public ::testing::TestWithParam<const char*> {};

TEST_P(OracleAgreement, HomAndExt) {
  const auto a = parse_algebra_spec(GetParam());
  const auto q = quiver_of(a);
  const auto mods = indecomposables(a);
  for (const auto& m : mods) {
    for (const auto& n : mods) {
      ASSERT_EQ(hom_dim(a, m, n), oracle::hom_dim(q, key(m), key(n))) << m << ' ' << n;
      for (int r = 1; r <= 4; ++r) {
        ASSERT_EQ(ext_dim(a, m, n, r), oracle::ext_dim(q, key(m), key(n), r))
            << m << ' ' << n << " r=" << r;
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(
    Algebras, OracleAgreement,
    ::testing::Values("selfinjective:n=4,k=2", "selfinjective:n=3,k=3",
                      "cyclic:3,3,2", "hereditary-a:4", "cyclic:4,3,3,2",
                      "selfinjective:n=4,k=4", "selfinjective:n=3,k=5",
                      "selfinjective:n=5,k=3", "linear:2,2,1", "linear:3,3,2,1",
                      "cyclic:2,3", "cyclic:5,4,4,3,3"));

TEST(OmegaOrbit, SelfinjectiveSimpleCycles) {
  const auto a = make_selfinjective(4, 2);
  const auto o = omega_orbit(a, {1, 1});
  EXPECT_EQ(o.chain, (std::vector<Indec>{{1, 1}, {2, 1}, {3, 1}, {4, 1}}));
  EXPECT_EQ(o.terminal, OmegaOrbit::Terminal::enters_cycle);
  EXPECT_EQ(o.cycle_start, 0u);
  EXPECT_EQ(o.period(), 4u);
  EXPECT_TRUE(is_periodic(a, {1, 1}));
}

TEST(OmegaOrbit, ProjectiveReachesZero) {
  const auto a = make_selfinjective(4, 2);
  const auto o = omega_orbit(a, {2, 2});
  EXPECT_EQ(o.chain.size(), 1u);
  EXPECT_EQ(o.terminal, OmegaOrbit::Terminal::reaches_zero);
  EXPECT_FALSE(is_periodic(a, {2, 2}));
}

TEST(OmegaOrbit, ExampleAlgebra) {
  const auto a = parse_algebra_spec("cyclic:3,3,2");
  const auto s2 = omega_orbit(a, {2, 1});
  EXPECT_EQ(s2.chain, (std::vector<Indec>{{2, 1}, {3, 2}}));
  EXPECT_EQ(s2.terminal, OmegaOrbit::Terminal::reaches_zero);
  EXPECT_FALSE(is_periodic(a, {2, 1}));
  const auto s1 = omega_orbit(a, {1, 1});
  EXPECT_EQ(s1.chain, (std::vector<Indec>{{1, 1}, {2, 2}}));
  EXPECT_EQ(s1.period(), 2u);
  EXPECT_TRUE(is_periodic(a, {1, 1}));
}

TEST(OmegaOrbit, ChainInvariants) {
  const auto a = parse_algebra_spec("cyclic:5,4,4,3,3");
  for (const auto& m : indecomposables(a)) {
    const auto o = omega_orbit(a, m);
    for (std::size_t i = 0; i < o.chain.size(); ++i) {
      for (std::size_t j = i + 1; j < o.chain.size(); ++j) EXPECT_NE(o.chain[i], o.chain[j]);
    }
    if (o.terminal == OmegaOrbit::Terminal::enters_cycle) {
      EXPECT_EQ(syzygy(a, o.chain.back()), o.chain[o.cycle_start]);
    } else {
      EXPECT_FALSE(syzygy(a, o.chain.back()).has_value());
    }
  }
}

TEST(OmegaOrbit, EventuallyPeriodicIsNotPeriodic) {
  // Ω S_3 = S_1 lies on the cycle S_1 -> (2,2) -> S_1, which never
  // returns to S_3.
  const auto a = parse_algebra_spec("cyclic:3,3,2");
  const auto o = omega_orbit(a, {3, 1});
  EXPECT_EQ(o.chain, (std::vector<Indec>{{3, 1}, {1, 1}, {2, 2}}));
  EXPECT_EQ(o.terminal, OmegaOrbit::Terminal::enters_cycle);
  EXPECT_EQ(o.cycle_start, 1u);
  EXPECT_EQ(o.period(), 2u);
  EXPECT_FALSE(is_periodic(a, {3, 1}));
}

TEST(OmegaOrbit, PeriodicityMatchesSelfinjectivity) {
  for (int n = 2; n <= 5; ++n) {
    for (int k = 2; k <= 6; ++k) {
      const auto a = make_selfinjective(n, k);
      for (const auto& m : indecomposables(a)) {
        EXPECT_EQ(is_periodic(a, m), !is_projective(a, m));
      }
    }
  }
  for (auto spec : {"linear:2,2,1", "hereditary-a:5", "linear:3,3,2,1", "linear:4,4,3,2,1"}) {
    const auto a = parse_algebra_spec(spec);
    for (const auto& m : indecomposables(a)) EXPECT_FALSE(is_periodic(a, m));
  }
}

TEST(ExtDim, VanishesPastProjectiveDimensionOnLinear) {
  const auto a = parse_algebra_spec("linear:3,3,2,1");
  int longest = 0;
  for (const auto& m : indecomposables(a)) {
    longest = std::max(longest, static_cast<int>(omega_orbit(a, m).chain.size()));
  }
  for (const auto& m : indecomposables(a)) {
    for (const auto& n : indecomposables(a)) {
      EXPECT_EQ(ext_dim(a, m, n, longest + 1), 0);
    }
  }
}

TEST(ExtVanishing, FirstNonvanishing) {
  const auto a = parse_algebra_spec("cyclic:3,3,2");
  EXPECT_EQ(first_nonvanishing_ext(a, {3, 1}, {2, 1}), 2);
  EXPECT_FALSE(all_ext_vanish(a, {3, 1}, {2, 1}));
  EXPECT_TRUE(all_ext_vanish(a, {3, 2}, {2, 1}));
  for (const auto& m : indecomposables(a)) {
    for (const auto& n : indecomposables(a)) {
      const auto r = first_nonvanishing_ext(a, m, n);
      bool any = false;
      for (int d = 1; d <= 12; ++d) {
        const int e = ext_dim(a, m, n, d);
        if (e && !any) {
          EXPECT_EQ(r, d);
        }
        any = any || e;
      }
      EXPECT_EQ(any, r.has_value());
    }
  }
}

TEST(Regions, Examples) {
  const auto a = make_selfinjective(4, 4);
  EXPECT_TRUE(hom_region_contains(a, {1, 1}, {2, 4}));
  EXPECT_TRUE(ext_region_contains(a, {2, 2}, {3, 3}));
  EXPECT_FALSE(ext_region_contains(a, {3, 1}, {3, 3}));
  for (const auto& m : indecomposables(a)) EXPECT_TRUE(hom_region_contains(a, m, m));
}

TEST(Regions, HomIntoProjectiveCriterion) {
  // Hom(X, P_2) = 0 exactly when Γ(X)_1 + Γ(X)_2 <= n-2.
  const int n = 5;
  const auto a = make_selfinjective(n, n);
  for (const auto& x : indecomposables(a)) {
    const auto p = gamma(a, x);
    EXPECT_EQ(hom_dim(a, x, {2, n}) == 0, p.a + p.b <= n - 2) << x;
  }
}

TEST(Regions, RequireSmallLoewyLength) {
  EXPECT_THROW(hom_region_contains(make_selfinjective(3, 4), {1, 1}, {1, 1}), Error);
  EXPECT_THROW(ext_region_contains(parse_algebra_spec("cyclic:3,3,2"), {1, 1}, {1, 1}), Error);
}

TEST(Regions, AgreeWithDimensions) {
  for (int n = 2; n <= 7; ++n) {
    for (int k = 2; k <= n; ++k) {
      const auto a = make_selfinjective(n, k);
      const auto mods = indecomposables(a);
      for (const auto& m : mods) {
        for (const auto& x : mods) {
          ASSERT_EQ(hom_region_contains(a, m, x), hom_dim(a, m, x) > 0)
              << "n=" << n << " k=" << k << ' ' << m << ' ' << x;
          ASSERT_EQ(ext_region_contains(a, m, x), ext1_dim(a, m, x) > 0)
              << "n=" << n << " k=" << k << ' ' << m << ' ' << x;
        }
      }
    }
  }
}

TEST(Sigma, PreservesDimensions) {
  for (auto [n, k] : {std::pair{4, 2}, {5, 3}, {4, 4}, {3, 5}}) {
    const auto a = make_selfinjective(n, k);
    const auto mods = indecomposables(a);
    for (const auto& m : mods) {
      for (const auto& x : mods) {
        EXPECT_EQ(hom_dim(a, sigma(a, m), sigma(a, x)), hom_dim(a, m, x));
        EXPECT_EQ(ext1_dim(a, sigma(a, m), sigma(a, x)), ext1_dim(a, m, x));
      }
    }
  }
}

// Non-periodic modules of length <= n that still have a non-vanishing
// self-extension in degree 3; the GF(p) oracle gives the same values.
TEST(ExtDim, HigherSelfExtensionsOfNonPeriodicModules) {
  const auto a = parse_algebra_spec("cyclic:4,3,3,2");
  const auto q = quiver_of(a);
  for (const Indec m : {Indec{2, 1}, Indec{2, 2}}) {
    EXPECT_FALSE(is_periodic(a, m));
    EXPECT_EQ(ext_dim(a, m, m, 1), 0);
    EXPECT_EQ(ext_dim(a, m, m, 2), 0);
    EXPECT_EQ(ext_dim(a, m, m, 3), 1);
    EXPECT_EQ(oracle::ext_dim(q, key(m), key(m), 3), 1);
  }
  const auto c = parse_algebra_spec("cyclic:3,3,2");
  const auto qc = quiver_of(c);
  EXPECT_EQ(ext_dim(c, {1, 2}, {2, 1}, 3), 1);
  EXPECT_EQ(oracle::ext_dim(qc, {1, 2}, {2, 1}, 3), 1);
  EXPECT_EQ(ext_dim(c, {3, 1}, {3, 2}, 3), 1);
  EXPECT_EQ(oracle::ext_dim(qc, {3, 1}, {3, 2}, 3), 1);
}
