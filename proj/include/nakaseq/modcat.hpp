#ifndef NAKASEQ_MODCAT_HPP
#define NAKASEQ_MODCAT_HPP

#include <optional>
#include <string>

#include "nakaseq/algebra.hpp"

namespace nakaseq {

/// An indecomposable or the zero module (std::nullopt).
using ModuleOrZero = std::optional<Indec>;

inline bool is_zero(const ModuleOrZero& m) noexcept { return !m.has_value(); }

inline int socle(const NakayamaAlgebra& a, const Indec& m) {
  return a.wrap(m.top + m.length - 1);
}

inline bool is_projective(const NakayamaAlgebra& a, const Indec& m) {
  return m.length == a.projective_length(m.top);
}

inline Indec projective_cover(const NakayamaAlgebra& a, const Indec& m) {
  return {m.top, a.projective_length(m.top)};
}

inline ModuleOrZero radical(const NakayamaAlgebra& a, const Indec& m) {
  if (m.length == 1) return std::nullopt;
  return Indec{a.wrap(m.top + 1), m.length - 1};
}

/// Kernel of the projective cover P_top -> M: the bottom segment of P_top
/// complementary to M.
inline ModuleOrZero syzygy(const NakayamaAlgebra& a, const Indec& m) {
  a.require(m);
  const int c = a.projective_length(m.top);
  if (m.length == c) return std::nullopt;
  return Indec{a.wrap(m.top + m.length), c - m.length};
}

struct ModuleDescription {
  Indec module;
  int top = 0;
  int socle = 0;
  ModuleOrZero radical;
  /// Only set over selfinjective algebras.
  std::optional<Indec> injective_envelope;
  bool projective = false;
};

inline ModuleDescription describe_module(const NakayamaAlgebra& a,
                                         const Indec& m) {
  a.require(m);
  ModuleDescription d;
  d.module = m;
  d.top = m.top;
  d.socle = socle(a, m);
  d.radical = radical(a, m);
  d.projective = is_projective(a, m);
  if (a.is_selfinjective()) {
    const int k = a.loewy_length();
    d.injective_envelope = Indec{a.wrap(d.socle - k + 1), k};
  }
  return d;
}

// Lattice model of the selfinjective algebra Λ(n,k). A module M sits at
// (n - socle(M), length(M) - 1); the first coordinate lives in the
// universal cover and is read modulo n.

struct LatticePoint {
  int a = 0;
  int b = 0;

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

namespace detail {

inline void require_selfinjective(const NakayamaAlgebra& a, const char* what) {
  if (!a.is_selfinjective()) {
    throw Error(std::string(what) + " is only defined for selfinjective algebras");
  }
}

inline int mod(int x, int n) {
  int r = x % n;
  return r < 0 ? r + n : r;
}

}  // namespace detail

inline LatticePoint gamma(const NakayamaAlgebra& a, const Indec& m) {
  detail::require_selfinjective(a, "gamma");
  a.require(m);
  return {a.vertices() - socle(a, m), m.length - 1};
}

inline Indec gamma_inv(const NakayamaAlgebra& a, LatticePoint p) {
  detail::require_selfinjective(a, "gamma_inv");
  const int n = a.vertices();
  const int k = a.loewy_length();
  if (p.b < 0 || p.b > k - 1) {
    throw Error("lattice height " + std::to_string(p.b) + " outside [0, " +
                std::to_string(k - 1) + "]");
  }
  const int soc = n - detail::mod(p.a, n);  // a = 0 gives socle n
  return {a.wrap(soc - p.b), p.b + 1};
}

/// One step right in the lattice: socle index drops by one, length kept.
/// Agrees with the inverse AR translate on nonprojectives.
inline Indec sigma(const NakayamaAlgebra& a, const Indec& m) {
  const auto p = gamma(a, m);
  return gamma_inv(a, {p.a + 1, p.b});
}

}  // namespace nakaseq

#endif  // NAKASEQ_MODCAT_HPP
