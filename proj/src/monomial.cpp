#include "monideal/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "monideal/errors.hpp"

namespace monideal {

Exponent checked_add(Exponent a, Exponent b) {
  Exponent out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("exponent overflow in addition");
  return out;
}

Exponent checked_mul(Exponent a, Exponent b) {
  Exponent out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("exponent overflow in multiplication");
  return out;
}

namespace {

Exponent checked_sum(std::span<const Exponent> v) {
  Exponent total = 0;
  for (Exponent e : v) {
    if (e < 0) throw ArgumentError("monomial exponents must be non-negative");
    total = checked_add(total, e);
  }
  return total;
}

}  // namespace

Monomial::Monomial(std::vector<Exponent> exponents)
    : exps_(std::move(exponents)), degree_(checked_sum(exps_)) {}

Monomial::Monomial(std::initializer_list<Exponent> exponents)
    : Monomial(std::vector<Exponent>(exponents)) {}

Monomial Monomial::one(std::size_t nvars) { return Monomial(std::vector<Exponent>(nvars, 0)); }

Monomial Monomial::pure_power(std::size_t nvars, std::size_t var, Exponent e) {
  if (var >= nvars) throw DimensionError("variable index out of range");
  std::vector<Exponent> v(nvars, 0);
  v[var] = e;
  return Monomial(std::move(v));
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_ || exps_.size() != other.exps_.size()) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

int Monomial::pure_power_variable() const noexcept {
  int var = -1;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (var >= 0) return -1;
    var = static_cast<int>(i);
  }
  return var;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (exps_.size() != other.exps_.size())
    throw DimensionError("cannot multiply monomials in different numbers of variables");
  Monomial out;
  out.exps_.resize(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] = checked_add(exps_[i], other.exps_[i]);
  out.degree_ = checked_add(degree_, other.degree_);
  return out;
}

Monomial Monomial::pow(Exponent r) const {
  if (r < 0) throw ArgumentError("negative monomial power");
  Monomial out;
  out.exps_.resize(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] = checked_mul(exps_[i], r);
  out.degree_ = checked_mul(degree_, r);
  return out;
}

Monomial Monomial::concat(const Monomial& other) const {
  std::vector<Exponent> v(exps_);
  v.insert(v.end(), other.exps_.begin(), other.exps_.end());
  return Monomial(std::move(v));
}

std::string Monomial::to_string() const {
  if (degree_ == 0) return "1";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << 'x' << (i + 1);
    if (exps_[i] != 1) os << '^' << exps_[i];
  }
  return os.str();
}

bool CanonicalLess::operator()(const Monomial& a, const Monomial& b) const noexcept {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  auto ea = a.exponents();
  auto eb = b.exponents();
  return std::lexicographical_compare(eb.begin(), eb.end(), ea.begin(), ea.end());
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Exponent e : m.exponents()) {
    h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << m.to_string(); }

}  // namespace monideal
