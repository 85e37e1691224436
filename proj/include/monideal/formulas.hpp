#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace monideal {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Socle degrees. Each is piecewise in k with the break at (n-1)(a-1),
// where both branches agree.

/// s(J^k) for J = (x_i^{am})(x_i^m) in n variables.
std::int64_t socle_J_formula(std::int64_t n, std::int64_t a, std::int64_t m, std::int64_t k);
/// s(E^k) for E = (x_i^a)(x_i).
std::int64_t socle_E_formula(std::int64_t n, std::int64_t a, std::int64_t k);

// Generator counts in two variables.

/// mu(J^k): (k+1)^2 up to k = a-1, then (a+1)k+1. Independent of m.
BigInt mu_J_formula(std::int64_t a, std::int64_t k);
/// mu(I_{a,m}^k): (1-m)k^2 + (am-m+2)k + 1 up to k = a-1, then (a+1)k+1.
BigInt mu_Iam_formula(std::int64_t a, std::int64_t m, std::int64_t k);

/// Nearest integer to p/q, halves rounded up. Exact; q must be positive.
std::int64_t round_nearest(std::int64_t p, std::int64_t q);

/// Location of the maximum of k -> mu(I_{a,m}^k) over 1 <= k <= a-1,
/// predicted from the vertex of the quadratic branch.
struct ArgmaxPrediction {
  std::int64_t t = 0;        ///< round_nearest((a-1)m+2, 2m-2)
  Rational vertex;           ///< ((a-1)m+2)/(2m-2), unrounded
  bool tie = false;          ///< vertex is a half-integer: two integers share the max
  bool in_range = false;     ///< 1 <= vertex <= a-1
  bool valid() const noexcept { return in_range && !tie; }
};

/// Needs a >= 3 and m >= 2 (for m = 1 the quadratic term vanishes).
ArgmaxPrediction predicted_argmax(std::int64_t a, std::int64_t m);

/// The piecewise generator count of I_{a,a} I_{2a,a} ... I_{la,a}.
class PiecewiseMuFormula {
 public:
  PiecewiseMuFormula(std::int64_t a, std::int64_t l);

  std::int64_t a() const noexcept { return a_; }
  std::int64_t l() const noexcept { return l_; }

  /// f_j(k) = (1-a)k^2 + (ja^2-a+2)k + 1, the quadratic factor of block j.
  BigInt f(std::int64_t j, std::int64_t k) const;
  /// g_j(k) = jak + k + 1, the linear factor of block j.
  BigInt g(std::int64_t j, std::int64_t k) const;

  /// Each factor picks its own branch: f_j while k <= ja-1, then g_j.
  BigInt operator()(std::int64_t k) const;
  /// Same value via the interval table: on (i-1)a <= k <= ia-1 the
  /// product g_1..g_{i-1} f_i..f_l, and g_1..g_l from la on.
  BigInt by_interval(std::int64_t k) const;

 private:
  std::int64_t a_;
  std::int64_t l_;
};

BigInt mu_product_formula(std::int64_t a, std::int64_t l, std::int64_t k);

/// H(n) = 1 + 1/2 + ... + 1/n; H(0) = 0.
Rational harmonic_number(std::int64_t n);

/// l/i > H(l-i), exactly. Needs 1 <= i < l.
bool harmonic_condition(std::int64_t l, std::int64_t i);

struct ParamChoice {
  std::int64_t l = 0;
  /// Indices i in 1..q+1 with harmonic_condition(l, i).
  std::vector<std::int64_t> satisfied;
  /// Lower end for the empirical search over a; largeness of a is not bounded here.
  std::int64_t a_min_hint = 3;
};

/// l = (q+1)^2 and the indices for which the harmonic condition holds.
ParamChoice choose_params_for_q(std::int64_t q);

}  // namespace monideal
