#ifndef NAKASEQ_HOMOLOGY_HPP
#define NAKASEQ_HOMOLOGY_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "nakaseq/algebra.hpp"
#include "nakaseq/modcat.hpp"

namespace nakaseq {

/// dim Hom(M, N). Each nonzero map factors as a length-t quotient of M
/// isomorphic to the length-t submodule of N, so we count the t in
/// [1, min(l(M), l(N))] for which those two have the same top.
inline int hom_dim(const NakayamaAlgebra& a, const Indec& m, const Indec& n) {
  a.require(m);
  a.require(n);
  int count = 0;
  const int upto = std::min(m.length, n.length);
  for (int t = 1; t <= upto; ++t) {
    if (a.same_vertex(m.top, n.top + n.length - t)) ++count;
  }
  return count;
}

/// dim Ext^1(M, N) from 0 -> ΩM -> P(M) -> M -> 0:
///   hom(ΩM, N) - hom(P(M), N) + hom(M, N).
inline int ext1_dim(const NakayamaAlgebra& a, const Indec& m, const Indec& n) {
  a.require(n);
  const auto omega = syzygy(a, m);
  if (!omega) return 0;
  return hom_dim(a, *omega, n) - hom_dim(a, projective_cover(a, m), n) +
         hom_dim(a, m, n);
}

/// Ω^j(M), or zero once the orbit dies.
inline ModuleOrZero syzygy_power(const NakayamaAlgebra& a, const Indec& m,
                                 int j) {
  ModuleOrZero cur = m;
  for (int i = 0; i < j && cur; ++i) cur = syzygy(a, *cur);
  return cur;
}

/// dim Ext^r(M, N) = dim Ext^1(Ω^{r-1} M, N).
inline int ext_dim(const NakayamaAlgebra& a, const Indec& m, const Indec& n,
                   int r) {
  if (r < 1) throw Error("Ext degree must be positive");
  a.require(m);
  const auto shifted = syzygy_power(a, m, r - 1);
  return shifted ? ext1_dim(a, *shifted, n) : 0;
}

struct OmegaOrbit {
  enum class Terminal { reaches_zero, enters_cycle };

  /// Ω^0 M, Ω^1 M, ... pairwise distinct.
  std::vector<Indec> chain;
  Terminal terminal = Terminal::reaches_zero;
  /// For enters_cycle: Ω(chain.back()) == chain[cycle_start].
  std::size_t cycle_start = 0;

  std::size_t period() const noexcept {
    return terminal == Terminal::enters_cycle ? chain.size() - cycle_start : 0;
  }
};

/// Follows Ω until it hits zero or repeats. The orbit has at most
/// Σ c_i entries, so this always terminates.
inline OmegaOrbit omega_orbit(const NakayamaAlgebra& a, const Indec& m) {
  a.require(m);
  OmegaOrbit orbit;
  orbit.chain.push_back(m);
  for (;;) {
    const auto next = syzygy(a, orbit.chain.back());
    if (!next) {
      orbit.terminal = OmegaOrbit::Terminal::reaches_zero;
      return orbit;
    }
    auto it = std::find(orbit.chain.begin(), orbit.chain.end(), *next);
    if (it != orbit.chain.end()) {
      orbit.terminal = OmegaOrbit::Terminal::enters_cycle;
      orbit.cycle_start = static_cast<std::size_t>(it - orbit.chain.begin());
      return orbit;
    }
    orbit.chain.push_back(*next);
  }
}

/// M ≅ Ω^j M for some j >= 1.
inline bool is_periodic(const NakayamaAlgebra& a, const Indec& m) {
  const auto orbit = omega_orbit(a, m);
  return orbit.terminal == OmegaOrbit::Terminal::enters_cycle &&
         orbit.cycle_start == 0;
}

/// Ext^r(M, N) = 0 for every r >= 1. Ext^{t+1}(M, N) = Ext^1(Ω^t M, N), and
/// the Ω^t M range over the finite orbit, so checking the orbit suffices.
inline bool all_ext_vanish(const NakayamaAlgebra& a, const Indec& m,
                           const Indec& n) {
  for (const auto& x : omega_orbit(a, m).chain) {
    if (ext1_dim(a, x, n) != 0) return false;
  }
  return true;
}

/// Smallest r with Ext^r(M, N) != 0, if any.
inline std::optional<int> first_nonvanishing_ext(const NakayamaAlgebra& a,
                                                 const Indec& m,
                                                 const Indec& n) {
  const auto orbit = omega_orbit(a, m);
  for (std::size_t t = 0; t < orbit.chain.size(); ++t) {
    if (ext1_dim(a, orbit.chain[t], n) != 0) return static_cast<int>(t) + 1;
  }
  return std::nullopt;
}

// Region descriptions of Hom and Ext^1 support over Λ(n,k), k <= n. With
// (a, b) = Γ(M) the regions, in lattice coordinates (x, y), are
//   Hom(M, X) != 0 :  a <= x <= a+b,  x + y >= a+b
//   Ext(M, X) != 0 :  a+b-k+1 <= x <= a-1,  y <= k-2,  a-1 <= x + y <= a+b-1
// where x ranges over the universal-cover lifts of Γ(X)_1. The Ext region is
// the trapezoid under τM cut by x >= a+b-k+1: left of that line every map
// X -> τM factors through the injective envelope of X, so the stable Hom
// (and hence Ext^1) vanishes. For projective M the cut leaves nothing.

namespace detail {

inline void require_region_algebra(const NakayamaAlgebra& a) {
  require_selfinjective(a, "region predicates");
  if (a.loewy_length() > a.vertices()) {
    throw Error("region predicates require k <= n");
  }
}

/// Lifts of x0 (mod n) lying in [lo, hi].
template <typename Pred>
bool any_lift(int x0, int n, int lo, int hi, Pred pred) {
  int x = lo + mod(x0 - lo, n);
  for (; x <= hi; x += n) {
    if (pred(x)) return true;
  }
  return false;
}

}  // namespace detail

inline bool hom_region_contains(const NakayamaAlgebra& alg, const Indec& m,
                                const Indec& x) {
  detail::require_region_algebra(alg);
  const auto [a, b] = gamma(alg, m);
  const auto px = gamma(alg, x);
  return detail::any_lift(px.a, alg.vertices(), a, a + b,
                          [&](int lift) { return lift + px.b >= a + b; });
}

inline bool ext_region_contains(const NakayamaAlgebra& alg, const Indec& m,
                                const Indec& x) {
  detail::require_region_algebra(alg);
  const int k = alg.loewy_length();
  const auto [a, b] = gamma(alg, m);
  const auto px = gamma(alg, x);
  if (px.b > k - 2) return false;
  return detail::any_lift(px.a, alg.vertices(), a + b - k + 1, a - 1, [&](int lift) {
    const int diag = lift + px.b;
    return diag >= a - 1 && diag <= a + b - 1;
  });
}

}  // namespace nakaseq

#endif  // NAKASEQ_HOMOLOGY_HPP
