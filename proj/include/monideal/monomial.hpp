#pragma once

#include <cstdint>
#include <compare>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace monideal {

using Exponent = std::int64_t;

/// A monomial x_1^{e_1} ... x_n^{e_n}, stored as its exponent vector.
/// The total degree is cached; all arithmetic is overflow-checked.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Exponent> exponents);
  Monomial(std::initializer_list<Exponent> exponents);

  /// The monomial 1 in `nvars` variables.
  static Monomial one(std::size_t nvars);
  /// x_var^e in `nvars` variables.
  static Monomial pure_power(std::size_t nvars, std::size_t var, Exponent e);

  std::size_t nvars() const noexcept { return exps_.size(); }
  Exponent degree() const noexcept { return degree_; }
  Exponent operator[](std::size_t i) const noexcept { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }

  bool divides(const Monomial& other) const noexcept;
  bool is_one() const noexcept { return degree_ == 0; }
  /// Index of the only variable with positive exponent, or -1.
  int pure_power_variable() const noexcept;

  /// Exponentwise sum. Throws DimensionError / OverflowError.
  Monomial operator*(const Monomial& other) const;
  /// Every exponent scaled by r.
  Monomial pow(Exponent r) const;
  /// This monomial followed by `other`'s exponents (disjoint variable blocks).
  Monomial concat(const Monomial& other) const;

  std::string to_string() const;

  bool operator==(const Monomial& other) const noexcept { return exps_ == other.exps_; }

 private:
  std::vector<Exponent> exps_;
  Exponent degree_ = 0;
};

/// Canonical order of generators: ascending degree, ties broken by
/// lexicographically larger exponent vector first (x_1^d before x_2^d).
struct CanonicalLess {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

Exponent checked_add(Exponent a, Exponent b);
Exponent checked_mul(Exponent a, Exponent b);

std::ostream& operator<<(std::ostream& os, const Monomial& m);

}  // namespace monideal
