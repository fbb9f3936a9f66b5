#ifndef NAKASEQ_VERIFY_HPP
#define NAKASEQ_VERIFY_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "nakaseq/enumerate.hpp"
#include "nakaseq/formulas.hpp"
#include "nakaseq/homology.hpp"
#include "nakaseq/io.hpp"

namespace nakaseq {

enum class VerifySuite {
  thm1,
  thm2,
  thm3,
  seidel,
  rad2,
  weakvs,
  regions,
  sigma,
  unique_linear,
};

struct SuiteInfo {
  VerifySuite suite;
  std::string_view name;
  int lo;  // documented safe parameter bounds
  int hi;
};

inline constexpr SuiteInfo kSuites[] = {
    {VerifySuite::thm1, "thm1", 2, 6},
    {VerifySuite::thm2, "thm2", 3, 8},
    {VerifySuite::thm3, "thm3", 2, 12},
    {VerifySuite::seidel, "seidel", 1, 7},
    {VerifySuite::rad2, "rad2", 1, 8},
    {VerifySuite::weakvs, "weakvs", 2, 6},
    {VerifySuite::regions, "regions", 2, 8},
    {VerifySuite::sigma, "sigma", 2, 6},
    {VerifySuite::unique_linear, "unique-linear", 3, 8},
};

inline const SuiteInfo& suite_info(VerifySuite s) {
  for (const auto& info : kSuites) {
    if (info.suite == s) return info;
  }
  throw std::logic_error("unknown suite");
}

inline std::optional<VerifySuite> parse_suite(std::string_view name) {
  for (const auto& info : kSuites) {
    if (info.name == name) return info.suite;
  }
  return std::nullopt;
}

/// One CSV row. Suites that check a property rather than a count report the
/// number of checked cases as predicted_count and the agreeing ones as
/// found_count, with the size columns left empty.
struct VerifyRow {
  std::string suite;
  int param = 0;
  std::optional<int> predicted_size;
  std::optional<int> found_size;
  BigInt predicted_count = 0;
  BigInt found_count = 0;
  bool match = false;
};

struct VerifyConfig {
  unsigned threads = 1;
  std::optional<std::uint64_t> node_budget;
};

namespace detail {

inline VerifyRow count_row(std::string_view suite, int param,
                           const NakayamaAlgebra& a, Mode mode,
                           std::optional<int> predicted_size,
                           const BigInt& predicted_count,
                           const VerifyConfig& cfg) {
  EnumOptions o;
  o.mode = mode;
  o.threads = cfg.threads;
  o.node_budget = cfg.node_budget;
  const auto r = enumerate(a, o);
  VerifyRow row{std::string(suite), param, predicted_size, r.max_size,
                predicted_count, r.count, false};
  row.match = (!predicted_size || *predicted_size == r.max_size) &&
              predicted_count == r.count;
  return row;
}

inline VerifyRow family_row(std::string_view suite, Family f, int param,
                            Mode mode, const VerifyConfig& cfg) {
  const FamilyParams p{f, param};
  return count_row(suite, param, family_algebra(p), mode, predicted_size(p),
                   predicted_count(p), cfg);
}

/// Linear Kupisch series (n-1, n-1, n-2, ..., 2, 1).
inline NakayamaAlgebra unique_linear_algebra(int n) {
  std::vector<int> c{n - 1};
  for (int v = n - 1; v >= 1; --v) c.push_back(v);
  return NakayamaAlgebra(Shape::linear, std::move(c));
}

/// The cyclic algebras the standard-vs-periodic equivalence is checked on:
/// Λ(n,k) for 2 <= k <= n plus a few non-constant series.
inline std::vector<NakayamaAlgebra> weakvs_algebras(int n) {
  std::vector<NakayamaAlgebra> out;
  for (int k = 2; k <= n; ++k) out.push_back(make_selfinjective(n, k));
  for (auto spec : {"cyclic:3,3,2", "cyclic:4,3,3,2"}) {
    auto a = parse_algebra_spec(spec);
    if (a.vertices() == n) out.push_back(std::move(a));
  }
  return out;
}

}  // namespace detail

/// Standard exceptional ⇔ (not Ω-periodic and length <= n), per module.
/// Returns (checked, agreeing).
inline std::pair<int, int> weakvs_agreement(const NakayamaAlgebra& a) {
  int checked = 0, agree = 0;
  for (const auto& m : indecomposables(a)) {
    ++checked;
    const bool lhs = is_standard_exceptional(a, m);
    const bool rhs = !is_periodic(a, m) && m.length <= a.vertices();
    if (lhs == rhs) ++agree;
  }
  return {checked, agree};
}

/// Region predicates against dimensions on all ordered pairs; counts both
/// the Hom and Ext comparisons. Returns (checked, agreeing).
inline std::pair<long, long> region_agreement(const NakayamaAlgebra& a) {
  long checked = 0, agree = 0;
  const auto mods = indecomposables(a);
  for (const auto& m : mods) {
    for (const auto& x : mods) {
      checked += 2;
      agree += hom_region_contains(a, m, x) == (hom_dim(a, m, x) > 0);
      agree += ext_region_contains(a, m, x) == (ext1_dim(a, m, x) > 0);
    }
  }
  return {checked, agree};
}

/// Applies σ to every module of every full weak sequence and counts the
/// images that are again in the set. Returns (witnesses, images found).
inline std::pair<BigInt, BigInt> sigma_agreement(const NakayamaAlgebra& a,
                                                 const VerifyConfig& cfg) {
  EnumOptions o;
  o.mode = Mode::weak;
  o.materialize = true;
  o.threads = cfg.threads;
  o.node_budget = cfg.node_budget;
  const auto r = enumerate(a, o);
  const std::set<Sequence> all(r.sequences.begin(), r.sequences.end());
  BigInt found = 0;
  for (auto s : r.sequences) {
    for (auto& m : s) m = sigma(a, m);
    if (all.count(s)) ++found;
  }
  return {BigInt(r.sequences.size()), found};
}

inline VerifyRow verify_one(VerifySuite suite, int param, const VerifyConfig& cfg) {
  const auto& info = suite_info(suite);
  if (param < info.lo || param > info.hi) {
    throw std::out_of_range(std::string(info.name) + " parameter " +
                            std::to_string(param) + " outside safe range " +
                            std::to_string(info.lo) + ".." + std::to_string(info.hi));
  }
  const auto name = info.name;
  switch (suite) {
    case VerifySuite::thm1:
      return detail::family_row(name, Family::selfinj_nn, param, Mode::weak, cfg);
    case VerifySuite::thm2:
      return detail::family_row(name, Family::selfinj_n1n, param, Mode::weak, cfg);
    case VerifySuite::thm3:
      return detail::family_row(name, Family::lambda2, param, Mode::weak, cfg);
    case VerifySuite::seidel:
      return detail::family_row(name, Family::hereditary_a, param, Mode::standard, cfg);
    case VerifySuite::rad2:
      return detail::family_row(name, Family::linear_rad2, param, Mode::standard, cfg);
    case VerifySuite::unique_linear:
      return detail::count_row(name, param, detail::unique_linear_algebra(param),
                               Mode::weak, 2 * param - 2, BigInt(1), cfg);
    case VerifySuite::weakvs: {
      VerifyRow row{std::string(name), param, {}, {}, 0, 0, false};
      for (const auto& a : detail::weakvs_algebras(param)) {
        const auto [checked, agree] = weakvs_agreement(a);
        row.predicted_count += checked;
        row.found_count += agree;
      }
      row.match = row.predicted_count == row.found_count;
      return row;
    }
    case VerifySuite::regions: {
      VerifyRow row{std::string(name), param, {}, {}, 0, 0, false};
      for (int k = 2; k <= param; ++k) {
        const auto [checked, agree] = region_agreement(make_selfinjective(param, k));
        row.predicted_count += checked;
        row.found_count += agree;
      }
      row.match = row.predicted_count == row.found_count;
      return row;
    }
    case VerifySuite::sigma: {
      VerifyRow row{std::string(name), param, {}, {}, 0, 0, false};
      for (int k = 2; k <= param; ++k) {
        const auto [total, found] = sigma_agreement(make_selfinjective(param, k), cfg);
        row.predicted_count += total;
        row.found_count += found;
      }
      row.match = row.predicted_count == row.found_count;
      return row;
    }
  }
  throw std::logic_error("unknown suite");
}

inline std::vector<VerifyRow> run_suite(VerifySuite suite, int lo, int hi,
                                        const VerifyConfig& cfg) {
  std::vector<VerifyRow> rows;
  for (int p = lo; p <= hi; ++p) rows.push_back(verify_one(suite, p, cfg));
  return rows;
}

inline constexpr std::string_view kVerifyCsvHeader =
    "suite,param,predicted_size,found_size,predicted_count,found_count,match";

inline std::string verify_csv_row(const VerifyRow& r) {
  auto opt = [](const std::optional<int>& v) {
    return v ? std::to_string(*v) : std::string();
  };
  return csv_field(r.suite) + ',' + std::to_string(r.param) + ',' +
         opt(r.predicted_size) + ',' + opt(r.found_size) + ',' +
         to_decimal(r.predicted_count) + ',' + to_decimal(r.found_count) + ',' +
         (r.match ? "true" : "false");
}

}  // namespace nakaseq

#endif  // NAKASEQ_VERIFY_HPP
