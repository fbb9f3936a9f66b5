#ifndef NAKASEQ_RENDER_HPP
#define NAKASEQ_RENDER_HPP

#include <sstream>
#include <string>

#include "nakaseq/algebra.hpp"
#include "nakaseq/homology.hpp"
#include "nakaseq/modcat.hpp"

namespace nakaseq {

struct RegionSelection {
  bool hom = true;
  bool ext = true;
};

namespace detail {

struct PointState {
  bool self = false;
  bool hom = false;
  bool ext = false;
};

inline PointState point_state(const NakayamaAlgebra& a, const Indec& m,
                              const Indec& x, RegionSelection regions) {
  return {x == m, regions.hom && hom_region_contains(a, m, x),
          regions.ext && ext_region_contains(a, m, x)};
}

}  // namespace detail

/// Fundamental domain of Λ(n,k) with the Hom/Ext regions of one module.
/// Lattice point (a, b) sits at pixel (40a + 20b, -40b) shifted by a margin.
/// Elements are emitted row-major, top row first.
inline std::string render_svg(const NakayamaAlgebra& alg, const Indec& m,
                              RegionSelection regions) {
  detail::require_region_algebra(alg);
  alg.require(m);
  const int n = alg.vertices();
  const int k = alg.loewy_length();
  constexpr int margin = 30;
  constexpr int cell = 16;
  const int width = 2 * margin + 40 * (n - 1) + 20 * (k - 1);
  const int height = 2 * margin + 40 * (k - 1);
  auto px = [&](int a, int b) { return margin + 40 * a + 20 * b; };
  auto py = [&](int b) { return margin + 40 * (k - 1) - 40 * b; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
     << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
     << height << "\">\n";
  os << "<title>" << render_algebra_spec(alg) << " module " << m << "</title>\n";
  os << "<rect width=\"" << width << "\" height=\"" << height
     << "\" fill=\"#ffffff\"/>\n";

  for (int b = k - 1; b >= 0; --b) {
    for (int a = 0; a < n; ++a) {
      const auto x = gamma_inv(alg, {a, b});
      const auto s = detail::point_state(alg, m, x, regions);
      const char* fill = nullptr;
      if (s.hom && s.ext) {
        fill = "#e7e0e5";
      } else if (s.hom) {
        fill = "#cfe8ff";
      } else if (s.ext) {
        fill = "#ffd9cc";
      }
      if (fill) {
        os << "<rect x=\"" << px(a, b) - cell / 2 << "\" y=\"" << py(b) - cell / 2
           << "\" width=\"" << cell << "\" height=\"" << cell << "\" fill=\""
           << fill << "\"/>\n";
      }
    }
  }
  for (int b = k - 1; b >= 0; --b) {
    for (int a = 0; a < n; ++a) {
      const auto x = gamma_inv(alg, {a, b});
      os << "<circle cx=\"" << px(a, b) << "\" cy=\"" << py(b)
         << "\" r=\"3\" fill=\"" << (x == m ? "#d00000" : "#000000")
         << "\"><title>" << x.top << ',' << x.length << "</title></circle>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

/// One character per lattice point, top row (b = k-1) first:
/// 'o' the module itself, 'B' both regions, 'H' Hom, 'E' Ext, '.' neither.
inline std::string render_ascii(const NakayamaAlgebra& alg, const Indec& m,
                                RegionSelection regions) {
  detail::require_region_algebra(alg);
  alg.require(m);
  const int n = alg.vertices();
  const int k = alg.loewy_length();
  std::string out;
  for (int b = k - 1; b >= 0; --b) {
    for (int a = 0; a < n; ++a) {
      const auto s = detail::point_state(alg, m, gamma_inv(alg, {a, b}), regions);
      out += s.self ? 'o' : (s.hom && s.ext) ? 'B' : s.hom ? 'H' : s.ext ? 'E' : '.';
    }
    out += '\n';
  }
  return out;
}

}  // namespace nakaseq

#endif  // NAKASEQ_RENDER_HPP
