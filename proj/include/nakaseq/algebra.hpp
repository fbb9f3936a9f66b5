#ifndef NAKASEQ_ALGEBRA_HPP
#define NAKASEQ_ALGEBRA_HPP

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

namespace nakaseq {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed algebra spec text.
class SyntaxError : public Error {
 public:
  using Error::Error;
};

/// Kupisch series that does not describe a connected Nakayama algebra.
class AdmissibilityError : public Error {
 public:
  AdmissibilityError(int index, std::string rule)
      : Error(rule), index_(index), rule_(std::move(rule)) {}

  /// 1-based index of the first entry that breaks a rule.
  int index() const noexcept { return index_; }
  const std::string& rule() const noexcept { return rule_; }

 private:
  int index_;
  std::string rule_;
};

/// A module is referenced that does not exist over the algebra.
class ModuleError : public Error {
 public:
  using Error::Error;
};

enum class Shape { cyclic, linear };

/// Indecomposable (uniserial) module keyed by its top vertex and length.
/// The composition series reads top, top+1, ..., top+length-1 (socle last).
struct Indec {
  int top = 1;
  int length = 1;

  friend auto operator<=>(const Indec&, const Indec&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Indec& m) {
  return os << '(' << m.top << ',' << m.length << ')';
}

/// Nakayama algebra given by its Kupisch series. Vertices are 1-based,
/// arrows i -> i+1 (and n -> 1 when cyclic). Immutable once constructed.
class NakayamaAlgebra {
 public:
  NakayamaAlgebra(Shape shape, std::vector<int> kupisch)
      : shape_(shape), kupisch_(std::move(kupisch)) {
    validate();
  }

  Shape shape() const noexcept { return shape_; }
  bool is_cyclic() const noexcept { return shape_ == Shape::cyclic; }
  int vertices() const noexcept { return static_cast<int>(kupisch_.size()); }
  const std::vector<int>& kupisch() const noexcept { return kupisch_; }

  /// Length of the indecomposable projective P_vertex.
  int projective_length(int vertex) const {
    return kupisch_[static_cast<std::size_t>(wrap(vertex) - 1)];
  }

  bool is_selfinjective() const noexcept {
    return is_cyclic() &&
           std::all_of(kupisch_.begin(), kupisch_.end(),
                       [&](int c) { return c == kupisch_.front(); });
  }

  /// Longest projective; equals k for the selfinjective algebra.
  int loewy_length() const noexcept {
    return *std::max_element(kupisch_.begin(), kupisch_.end());
  }

  /// Reduces a vertex index into 1..n for cyclic algebras. Linear algebras
  /// are returned unchanged.
  int wrap(int vertex) const noexcept {
    if (!is_cyclic()) return vertex;
    const int n = vertices();
    int r = (vertex - 1) % n;
    if (r < 0) r += n;
    return r + 1;
  }

  bool same_vertex(int u, int v) const noexcept { return wrap(u) == wrap(v); }

  bool contains(const Indec& m) const noexcept {
    if (m.top < 1 || m.top > vertices() || m.length < 1) return false;
    if (m.length > kupisch_[static_cast<std::size_t>(m.top - 1)]) return false;
    return is_cyclic() || m.top + m.length - 1 <= vertices();
  }

  void require(const Indec& m) const {
    if (!contains(m)) {
      throw ModuleError("module (" + std::to_string(m.top) + "," +
                        std::to_string(m.length) + ") does not exist");
    }
  }

  friend bool operator==(const NakayamaAlgebra&,
                         const NakayamaAlgebra&) = default;

 private:
  static std::string entry(int i) { return "c_" + std::to_string(i); }

  void validate() const {
    const int n = vertices();
    if (n == 0) throw AdmissibilityError(0, "empty Kupisch series");
    auto c = [&](int i) { return kupisch_[static_cast<std::size_t>(i - 1)]; };

    for (int i = 1; i <= n; ++i) {
      const bool last_linear = !is_cyclic() && i == n;
      if (last_linear) {
        if (c(i) != 1) {
          throw AdmissibilityError(
              i, entry(i) + " = " + std::to_string(c(i)) + " != 1");
        }
      } else if (c(i) < 2) {
        throw AdmissibilityError(
            i, entry(i) + " = " + std::to_string(c(i)) + " < 2");
      }
      if (i > 1 || is_cyclic()) {
        const int prev = i > 1 ? i - 1 : n;
        if (c(i) < c(prev) - 1) {
          throw AdmissibilityError(
              i, entry(i) + " = " + std::to_string(c(i)) + " < " +
                     entry(prev) + " - 1 = " + std::to_string(c(prev) - 1));
        }
      }
      if (!is_cyclic() && c(i) > n - i + 1) {
        throw AdmissibilityError(i, entry(i) + " = " + std::to_string(c(i)) +
                                        " > n - " + std::to_string(i) +
                                        " + 1 = " + std::to_string(n - i + 1));
      }
    }
  }

  Shape shape_;
  std::vector<int> kupisch_;
};

inline NakayamaAlgebra make_selfinjective(int n, int k) {
  if (n < 2 || k < 2) {
    throw AdmissibilityError(0, "selfinjective requires n >= 2 and k >= 2");
  }
  return NakayamaAlgebra(Shape::cyclic,
                         std::vector<int>(static_cast<std::size_t>(n), k));
}

/// Path algebra of the linearly oriented A_m quiver: c_i = m - i + 1.
inline NakayamaAlgebra make_hereditary_a(int m) {
  if (m < 1) throw AdmissibilityError(0, "hereditary-a requires m >= 1");
  std::vector<int> c(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) c[static_cast<std::size_t>(i)] = m - i;
  return NakayamaAlgebra(Shape::linear, std::move(c));
}

/// Every indecomposable, sorted by (top, length). Size is the sum of the
/// Kupisch series.
inline std::vector<Indec> indecomposables(const NakayamaAlgebra& a) {
  std::vector<Indec> out;
  for (int top = 1; top <= a.vertices(); ++top) {
    for (int len = 1; len <= a.projective_length(top); ++len) {
      out.push_back({top, len});
    }
  }
  return out;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline int parse_int(std::string_view s, std::string_view what) {
  s = trim(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw SyntaxError("expected integer for " + std::string(what) + ", got '" +
                      std::string(s) + "'");
  }
  return value;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

inline std::vector<int> parse_series(std::string_view body) {
  std::vector<int> c;
  for (auto part : split(body, ',')) c.push_back(parse_int(part, "Kupisch entry"));
  return c;
}

}  // namespace detail

/// Parses one of
///   selfinjective:n=<int>,k=<int>
///   cyclic:<c1>,<c2>,...
///   linear:<c1>,<c2>,...
///   hereditary-a:<m>
inline NakayamaAlgebra parse_algebra_spec(std::string_view text) {
  text = detail::trim(text);
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw SyntaxError("algebra spec needs '<kind>:<args>', got '" +
                      std::string(text) + "'");
  }
  const auto kind = text.substr(0, colon);
  const auto body = text.substr(colon + 1);

  if (kind == "selfinjective") {
    std::optional<int> n, k;
    for (auto part : detail::split(body, ',')) {
      part = detail::trim(part);
      if (part.starts_with("n=") && !n) {
        n = detail::parse_int(part.substr(2), "n");
      } else if (part.starts_with("k=") && !k) {
        k = detail::parse_int(part.substr(2), "k");
      } else {
        throw SyntaxError("selfinjective expects n=<int>,k=<int>, got '" +
                          std::string(body) + "'");
      }
    }
    if (!n || !k) {
      throw SyntaxError("selfinjective expects n=<int>,k=<int>, got '" +
                        std::string(body) + "'");
    }
    return make_selfinjective(*n, *k);
  }
  if (kind == "cyclic") return NakayamaAlgebra(Shape::cyclic, detail::parse_series(body));
  if (kind == "linear") return NakayamaAlgebra(Shape::linear, detail::parse_series(body));
  if (kind == "hereditary-a") return make_hereditary_a(detail::parse_int(body, "m"));
  throw SyntaxError("unknown algebra kind '" + std::string(kind) + "'");
}

/// Canonical text form. Constant cyclic series render as selfinjective.
inline std::string render_algebra_spec(const NakayamaAlgebra& a) {
  const auto& c = a.kupisch();
  if (a.is_selfinjective() && a.vertices() >= 2) {
    return "selfinjective:n=" + std::to_string(a.vertices()) +
           ",k=" + std::to_string(c.front());
  }
  std::string out = a.is_cyclic() ? "cyclic:" : "linear:";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(c[i]);
  }
  return out;
}

}  // namespace nakaseq

#endif  // NAKASEQ_ALGEBRA_HPP
