#include "monideal/formulas.hpp"

#include "monideal/errors.hpp"

namespace monideal {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw ArgumentError(what);
}

std::int64_t floor_div(std::int64_t p, std::int64_t q) {
  std::int64_t d = p / q;
  if ((p % q != 0) && ((p < 0) != (q < 0))) --d;
  return d;
}

}  // namespace

std::int64_t socle_J_formula(std::int64_t n, std::int64_t a, std::int64_t m, std::int64_t k) {
  require(n >= 2 && a >= 3 && m >= 1 && k >= 1, "socle_J_formula needs n>=2, a>=3, m>=1, k>=1");
  if (k <= (n - 1) * (a - 1)) return m * a * (k + n - 1) - n;
  return m * (a * k + k + n - 1) - n;
}

std::int64_t socle_E_formula(std::int64_t n, std::int64_t a, std::int64_t k) {
  require(n >= 2 && a >= 3 && k >= 1, "socle_E_formula needs n>=2, a>=3, k>=1");
  if (k <= (n - 1) * (a - 1)) return a * (k - 1) + (a - 1) * n;
  return (a + 1) * k - 1;
}

BigInt mu_J_formula(std::int64_t a, std::int64_t k) {
  require(a >= 3 && k >= 1, "mu_J_formula needs a>=3, k>=1");
  BigInt K = k;
  if (k <= a - 1) return (K + 1) * (K + 1);
  return BigInt(a + 1) * K + 1;
}

BigInt mu_Iam_formula(std::int64_t a, std::int64_t m, std::int64_t k) {
  require(a >= 3 && m >= 1 && k >= 1, "mu_Iam_formula needs a>=3, m>=1, k>=1");
  BigInt K = k, A = a, M = m;
  if (k <= a - 1) return (1 - M) * K * K + (A * M - M + 2) * K + 1;
  return (A + 1) * K + 1;
}

std::int64_t round_nearest(std::int64_t p, std::int64_t q) {
  require(q > 0, "round_nearest needs a positive denominator");
  // floor(p/q + 1/2) = floor((2p + q) / 2q)
  return floor_div(2 * p + q, 2 * q);
}

ArgmaxPrediction predicted_argmax(std::int64_t a, std::int64_t m) {
  require(a >= 3, "predicted_argmax needs a >= 3");
  require(m >= 2, "predicted_argmax needs m >= 2 (denominator 2m-2)");
  const std::int64_t num = (a - 1) * m + 2;
  const std::int64_t den = 2 * m - 2;
  ArgmaxPrediction out;
  out.t = round_nearest(num, den);
  out.vertex = Rational(num, den);
  // vertex = h + 1/2  <=>  num/(m-1) is an odd integer
  out.tie = (num % (m - 1) == 0) && ((num / (m - 1)) % 2 != 0);
  out.in_range = out.vertex >= 1 && out.vertex <= a - 1;
  return out;
}

PiecewiseMuFormula::PiecewiseMuFormula(std::int64_t a, std::int64_t l) : a_(a), l_(l) {
  require(a >= 3 && l >= 1, "product formula needs a>=3, l>=1");
}

BigInt PiecewiseMuFormula::f(std::int64_t j, std::int64_t k) const {
  BigInt A = a_, K = k;
  return (1 - A) * K * K + (BigInt(j) * A * A - A + 2) * K + 1;
}

BigInt PiecewiseMuFormula::g(std::int64_t j, std::int64_t k) const {
  return BigInt(j) * a_ * k + k + 1;
}

BigInt PiecewiseMuFormula::operator()(std::int64_t k) const {
  require(k >= 1, "product formula needs k >= 1");
  BigInt out = 1;
  for (std::int64_t j = 1; j <= l_; ++j) out *= (k <= j * a_ - 1) ? f(j, k) : g(j, k);
  return out;
}

BigInt PiecewiseMuFormula::by_interval(std::int64_t k) const {
  require(k >= 1, "product formula needs k >= 1");
  // Interval index i with (i-1)a <= k <= ia-1, capped at l+1 for k >= la.
  const std::int64_t i = std::min(k / a_ + 1, l_ + 1);
  BigInt out = 1;
  for (std::int64_t j = 1; j < i; ++j) out *= g(j, k);
  for (std::int64_t j = i; j <= l_; ++j) out *= f(j, k);
  return out;
}

BigInt mu_product_formula(std::int64_t a, std::int64_t l, std::int64_t k) {
  return PiecewiseMuFormula(a, l)(k);
}

Rational harmonic_number(std::int64_t n) {
  Rational h = 0;
  for (std::int64_t r = 1; r <= n; ++r) h += Rational(1, r);
  return h;
}

bool harmonic_condition(std::int64_t l, std::int64_t i) {
  require(i >= 1 && i < l, "harmonic_condition needs 1 <= i < l");
  return Rational(l, i) > harmonic_number(l - i);
}

ParamChoice choose_params_for_q(std::int64_t q) {
  require(q >= 1, "choose_params_for_q needs q >= 1");
  ParamChoice out;
  out.l = (q + 1) * (q + 1);
  for (std::int64_t i = 1; i <= q + 1; ++i)
    if (harmonic_condition(out.l, i)) out.satisfied.push_back(i);
  return out;
}

}  // namespace monideal
