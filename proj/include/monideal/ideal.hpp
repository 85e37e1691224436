#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "monideal/monomial.hpp"

namespace monideal {

/// A monomial ideal held as its minimal generating set G(I), sorted by
/// CanonicalLess. Two ideals are equal iff their generator sequences are.
///
/// The zero ideal has no generators; the unit ideal has the single
/// generator 1. Instances are immutable once built.
class MonomialIdeal {
 public:
  /// The zero ideal in `nvars` variables.
  explicit MonomialIdeal(std::size_t nvars);

  static MonomialIdeal unit(std::size_t nvars);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_one(); }

  /// True iff some generator divides `u`.
  bool contains(const Monomial& u) const noexcept;

  std::string to_string() const;

  bool operator==(const MonomialIdeal& other) const noexcept = default;

 private:
  MonomialIdeal(std::size_t nvars, std::vector<Monomial> minimal_sorted);

  friend MonomialIdeal minimalize(std::vector<Monomial> gens, std::size_t nvars);
  friend MonomialIdeal pseudo_frobenius(const MonomialIdeal& a, Exponent r);

  std::size_t nvars_;
  std::vector<Monomial> gens_;
};

/// Divisibility-minimal, deduplicated subset of `gens`.
/// Throws DimensionError if some monomial does not have `nvars` entries.
MonomialIdeal minimalize(std::vector<Monomial> gens, std::size_t nvars);

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);

/// a^k by iterated multiplication, minimalizing after each step.
/// power(a, 0) is the unit ideal; negative k throws ArgumentError.
MonomialIdeal power(const MonomialIdeal& a, std::int64_t k);

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);

/// Product of ideals living in disjoint variable blocks: `a`'s variables
/// come first, then `b`'s. mu of the result is mu(a) * mu(b).
MonomialIdeal external_product(const MonomialIdeal& a, const MonomialIdeal& b);

/// H^{[r]}: the ideal generated by u^r for u in G(H).
MonomialIdeal pseudo_frobenius(const MonomialIdeal& a, Exponent r);

inline std::size_t num_min_gens(const MonomialIdeal& a) noexcept { return a.size(); }

/// Every variable has a pure power among the generators, i.e. dim S/A = 0.
/// The unit ideal counts as Artinian (S/A = 0); the zero ideal does not.
bool is_artinian(const MonomialIdeal& a) noexcept;

/// For each variable, the smallest e with x_i^e in G(A). Requires Artinian.
std::vector<Exponent> pure_power_bounds(const MonomialIdeal& a);

/// Largest degree of a monomial outside A.
/// Throws PreconditionError for non-Artinian ideals and for the unit ideal.
Exponent socle_degree(const MonomialIdeal& a);

/// No generator divides another and none repeats.
bool is_antichain(std::span<const Monomial> gens) noexcept;

// Ideal builders used throughout.

/// (x_1,...,x_n)^c: all monomials of degree c.
MonomialIdeal maximal_ideal_power(std::size_t nvars, Exponent c);
/// (x_1^e, ..., x_n^e).
MonomialIdeal pure_powers_ideal(std::size_t nvars, Exponent e);

}  // namespace monideal
