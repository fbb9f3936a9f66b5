#ifndef NAKASEQ_FORMULAS_HPP
#define NAKASEQ_FORMULAS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "nakaseq/algebra.hpp"
#include "nakaseq/bigint.hpp"

namespace nakaseq {

// Closed-form predictions for the sizes and counts of full exceptional
// sequences. They are kept independent of the enumerator so the two can be
// checked against each other.

enum class Family {
  selfinj_nn,   // Λ(n, n), weak
  selfinj_n1n,  // Λ(n, n-1), weak
  lambda2,      // Λ(n, 2), weak
  hereditary_a, // A_m linear, standard
  linear_rad2,  // linear (2, ..., 2, 1) on n vertices, standard
};

struct FamilyParams {
  Family family;
  int param;
};

inline std::string_view to_string(Family f) {
  switch (f) {
    case Family::selfinj_nn: return "selfinj-nn";
    case Family::selfinj_n1n: return "selfinj-n1n";
    case Family::lambda2: return "lambda2";
    case Family::hereditary_a: return "hereditary-a";
    case Family::linear_rad2: return "linear-rad2";
  }
  return "?";
}

inline std::optional<Family> parse_family(std::string_view s) {
  for (auto f : {Family::selfinj_nn, Family::selfinj_n1n, Family::lambda2,
                 Family::hereditary_a, Family::linear_rad2}) {
    if (to_string(f) == s) return f;
  }
  return std::nullopt;
}

inline int family_minimum(Family f) {
  switch (f) {
    case Family::selfinj_nn: return 2;
    case Family::selfinj_n1n: return 3;
    case Family::lambda2: return 2;
    case Family::hereditary_a: return 1;
    case Family::linear_rad2: return 1;
  }
  return 1;
}

inline void require_in_range(const FamilyParams& p) {
  if (p.param < family_minimum(p.family)) {
    throw std::out_of_range(std::string(to_string(p.family)) +
                            " parameter must be >= " +
                            std::to_string(family_minimum(p.family)));
  }
}

/// The algebra each family's prediction talks about.
inline NakayamaAlgebra family_algebra(const FamilyParams& p) {
  require_in_range(p);
  const int n = p.param;
  switch (p.family) {
    case Family::selfinj_nn: return make_selfinjective(n, n);
    case Family::selfinj_n1n: return make_selfinjective(n, n - 1);
    case Family::lambda2: return make_selfinjective(n, 2);
    case Family::hereditary_a: return make_hereditary_a(n);
    case Family::linear_rad2: {
      std::vector<int> c(static_cast<std::size_t>(n), 2);
      c.back() = 1;
      return NakayamaAlgebra(Shape::linear, std::move(c));
    }
  }
  throw std::logic_error("unknown family");
}

inline BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline BigInt power(int base, int exp) { return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp)); }

namespace detail {

inline BigInt to_integer(const Rational& q, const char* what) {
  if (boost::multiprecision::denominator(q) != 1) {
    throw std::logic_error(std::string(what) + " is not an integer");
  }
  return boost::multiprecision::numerator(q);
}

inline void check_positive(int value, int minimum, const char* what) {
  if (value < minimum) {
    throw std::out_of_range(std::string(what) + " must be >= " +
                            std::to_string(minimum));
  }
}

}  // namespace detail

/// c(x, y) = sum_{j=2}^{x} C(y+j-2, j-1), the number of interleavings of two
/// main bodies with x and y modules.
inline BigInt c_bodies_sum(int x, int y) {
  detail::check_positive(x, 2, "x");
  detail::check_positive(y, 1, "y");
  BigInt s = 0;
  for (int j = 2; j <= x; ++j) s += binomial(y + j - 2, j - 1);
  return s;
}

inline BigInt c_bodies_closed(int x, int y) {
  detail::check_positive(x, 2, "x");
  detail::check_positive(y, 1, "y");
  return binomial(y + x - 1, y) - 1;
}

inline BigInt c_bodies(int x, int y) {
  auto s = c_bodies_sum(x, y);
  if (s != c_bodies_closed(x, y)) {
    throw std::logic_error("c(x,y) summation and closed form disagree");
  }
  return s;
}

/// sum over j ≡ 0 (mod 3) of C(n, j), by direct summation.
inline BigInt mod_three_binomial_sum_direct(int n) {
  detail::check_positive(n, 0, "n");
  BigInt s = 0;
  for (int j = 0; j <= n; j += 3) s += binomial(n, j);
  return s;
}

/// (2^n + 2 cos(nπ/3)) / 3 with the cosine read off n mod 6.
inline BigInt mod_three_binomial_sum_closed(int n) {
  detail::check_positive(n, 0, "n");
  static constexpr int two_cos[6] = {2, 1, -1, -2, -1, 1};
  const Rational q = Rational(power(2, n) + two_cos[n % 6]) / 3;
  return detail::to_integer(q, "mod-3 binomial closed form");
}

inline BigInt mod_three_binomial_sum(int n) {
  auto s = mod_three_binomial_sum_direct(n);
  if (s != mod_three_binomial_sum_closed(n)) {
    throw std::logic_error("mod-3 binomial sum and closed form disagree");
  }
  return s;
}

/// Full sequences of Λ(2k, 2) whose first module has socle 2k: the k+1
/// rigid bones plus the interleavings of the two-body bones.
inline BigInt braid2_total_sum(int k) {
  detail::check_positive(k, 1, "k");
  BigInt s = 1 + k;
  for (int j = 1; j <= k - 1; ++j) s += c_bodies(3 * j + 1, 3 * k - 3 * j - 2);
  return s;
}

/// 1 + 8^k/12 - (-1)^k/3, evaluated exactly.
inline Rational braid2_total_closed(int k) {
  detail::check_positive(k, 1, "k");
  const int sign = (k % 2 == 0) ? 1 : -1;
  return Rational(1) + Rational(power(8, k), 12) - Rational(sign, 3);
}

inline BigInt braid2_total(int k) {
  auto s = braid2_total_sum(k);
  if (Rational(s) != braid2_total_closed(k)) {
    throw std::logic_error("braid2 sum and closed form disagree");
  }
  return s;
}

inline BigInt predicted_count(const FamilyParams& p) {
  require_in_range(p);
  const int n = p.param;
  switch (p.family) {
    case Family::selfinj_nn:
      return power(n, n);
    case Family::selfinj_n1n:
      return n;
    case Family::lambda2: {
      const int k = n / 2;
      if (n % 2 == 1) return n;
      const BigInt total = detail::to_integer(
          Rational(2 * k) * braid2_total_closed(k), "Λ(2k,2) count");
      if (total != BigInt(2 * k) * braid2_total_sum(k)) {
        throw std::logic_error("Λ(2k,2) count: closed form and bone sum disagree");
      }
      return total;
    }
    case Family::hereditary_a:
      return power(n + 1, n - 1);
    case Family::linear_rad2: {
      BigInt s = 0;
      for (int j = 1; j <= n; ++j) s += binomial(n, j) * power(j, n - j);
      return s;
    }
  }
  throw std::logic_error("unknown family");
}

inline int predicted_size(const FamilyParams& p) {
  require_in_range(p);
  const int n = p.param;
  switch (p.family) {
    case Family::selfinj_nn: return n;
    case Family::selfinj_n1n: return 2 * n - 2;
    case Family::lambda2: {
      const int k = n / 2;
      return n % 2 == 1 ? 3 * k + 1 : 3 * k - 1;
    }
    case Family::hereditary_a: return n;
    case Family::linear_rad2: return n;
  }
  throw std::logic_error("unknown family");
}

}  // namespace nakaseq

#endif  // NAKASEQ_FORMULAS_HPP
