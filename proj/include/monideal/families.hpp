#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "monideal/ideal.hpp"

namespace monideal {

enum class Family { basic, modified, iam, product };

std::string to_string(Family f);
/// Accepts "basic", "modified", "iam", "product". Throws ArgumentError.
Family parse_family(const std::string& name);

/// Parameter bundle naming one of the constructions. Fields unused by a
/// family are ignored (n for iam/product, c outside modified, l outside
/// product). `q` is a target extrema count carried along for searches.
struct FamilyParams {
  Family family = Family::basic;
  std::int64_t n = 2;
  std::int64_t a = 3;
  std::int64_t m = 1;
  std::optional<std::int64_t> c;
  std::optional<std::int64_t> l;
  std::optional<std::int64_t> q;

  /// Generator degree (a+1)m of the basic ideal.
  std::int64_t d() const { return (a + 1) * m; }
  std::string describe() const;

  static FamilyParams basic(std::int64_t n, std::int64_t a, std::int64_t m);
  static FamilyParams modified(std::int64_t n, std::int64_t a, std::int64_t m, std::int64_t c);
  static FamilyParams iam(std::int64_t a, std::int64_t m);
  static FamilyParams product(std::int64_t a, std::int64_t l);
};

/// (x_1^{am},...,x_n^{am})(x_1^m,...,x_n^m); needs n >= 2, a >= 3, m >= 1.
MonomialIdeal basic_ideal(std::int64_t n, std::int64_t a, std::int64_t m);

/// basic_ideal(n,a,m) + (x_1,...,x_n)^c with c > (a+1)m.
MonomialIdeal modified_ideal(std::int64_t n, std::int64_t a, std::int64_t m, std::int64_t c);

/// The exponent c = (a+2)m - 1 used by ideal_I_am.
std::int64_t iam_exponent(std::int64_t a, std::int64_t m);

/// I_{a,m} = (x^{am},y^{am})(x^m,y^m) + (x,y)^{(a+2)m-1}.
/// For m = 1 the added power has degree d itself and I_{a,1} = (x,y)^{a+1};
/// this case is accepted although it sits outside c > d.
MonomialIdeal ideal_I_am(std::int64_t a, std::int64_t m);

/// I_{a,a} I_{2a,a} ... I_{la,a}, block j in variables (2j-2, 2j-1).
/// Throws ResourceError if the product would have more than
/// `max_generators` generators.
MonomialIdeal product_family(std::int64_t a, std::int64_t l,
                             std::size_t max_generators = 10'000'000);

/// Builds whichever family `p` names.
MonomialIdeal construct(const FamilyParams& p);

}  // namespace monideal
