#ifndef NAKASEQ_EXCSEQ_HPP
#define NAKASEQ_EXCSEQ_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nakaseq/algebra.hpp"
#include "nakaseq/homology.hpp"

namespace nakaseq {

/// weak: End = k and Ext^1 = 0. standard: End = k and Ext^r = 0 for all r.
enum class Mode { weak, standard };

inline std::string_view to_string(Mode m) {
  return m == Mode::weak ? "weak" : "standard";
}

inline std::optional<Mode> parse_mode(std::string_view s) {
  if (s == "weak") return Mode::weak;
  if (s == "standard") return Mode::standard;
  return std::nullopt;
}

inline bool is_weak_exceptional(const NakayamaAlgebra& a, const Indec& m) {
  return hom_dim(a, m, m) == 1 && ext1_dim(a, m, m) == 0;
}

/// (M, N) with M earlier: both exceptional, Hom(N, M) = Ext^1(N, M) = 0.
inline bool is_weak_pair(const NakayamaAlgebra& a, const Indec& m,
                         const Indec& n) {
  return is_weak_exceptional(a, m) && is_weak_exceptional(a, n) &&
         hom_dim(a, n, m) == 0 && ext1_dim(a, n, m) == 0;
}

inline bool is_standard_exceptional(const NakayamaAlgebra& a, const Indec& m) {
  return hom_dim(a, m, m) == 1 && all_ext_vanish(a, m, m);
}

inline bool is_standard_pair(const NakayamaAlgebra& a, const Indec& m,
                             const Indec& n) {
  return is_standard_exceptional(a, m) && is_standard_exceptional(a, n) &&
         hom_dim(a, n, m) == 0 && all_ext_vanish(a, n, m);
}

inline bool is_exceptional(const NakayamaAlgebra& a, Mode mode, const Indec& m) {
  return mode == Mode::weak ? is_weak_exceptional(a, m)
                            : is_standard_exceptional(a, m);
}

inline bool is_pair(const NakayamaAlgebra& a, Mode mode, const Indec& m,
                    const Indec& n) {
  return mode == Mode::weak ? is_weak_pair(a, m, n) : is_standard_pair(a, m, n);
}

struct Violation {
  /// 0-based positions; first == second flags a module that is not
  /// exceptional on its own.
  std::size_t first = 0;
  std::size_t second = 0;
  std::string reason;
};

struct SequenceCheck {
  bool valid = true;
  std::optional<Violation> violation;
};

/// Checks every (i, j) with i <= j in lexicographic order and reports the
/// first failure.
inline SequenceCheck validate_sequence(const NakayamaAlgebra& a, Mode mode,
                                       std::span<const Indec> modules) {
  for (const auto& m : modules) a.require(m);
  auto fail = [](std::size_t i, std::size_t j, std::string why) {
    return SequenceCheck{false, Violation{i, j, std::move(why)}};
  };
  for (std::size_t i = 0; i < modules.size(); ++i) {
    const auto& m = modules[i];
    if (hom_dim(a, m, m) != 1) return fail(i, i, "End(M) is not one-dimensional");
    if (mode == Mode::weak) {
      if (ext1_dim(a, m, m) != 0) return fail(i, i, "Ext^1(M,M) != 0");
    } else if (auto r = first_nonvanishing_ext(a, m, m)) {
      return fail(i, i, "Ext^" + std::to_string(*r) + "(M,M) != 0");
    }
    for (std::size_t j = i + 1; j < modules.size(); ++j) {
      const auto& n = modules[j];
      if (hom_dim(a, n, m) != 0) return fail(i, j, "Hom(N,M) != 0");
      if (mode == Mode::weak) {
        if (ext1_dim(a, n, m) != 0) return fail(i, j, "Ext^1(N,M) != 0");
      } else if (auto r = first_nonvanishing_ext(a, n, m)) {
        return fail(i, j, "Ext^" + std::to_string(*r) + "(N,M) != 0");
      }
    }
  }
  return {};
}

/// Hom(M_i, M_j) = 0 for all i != j.
inline bool is_orthogonal(const NakayamaAlgebra& a,
                          std::span<const Indec> modules) {
  for (std::size_t i = 0; i < modules.size(); ++i) {
    for (std::size_t j = 0; j < modules.size(); ++j) {
      if (i != j && hom_dim(a, modules[i], modules[j]) != 0) return false;
    }
  }
  return true;
}

}  // namespace nakaseq

#endif  // NAKASEQ_EXCSEQ_HPP
