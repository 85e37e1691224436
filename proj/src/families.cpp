#include "monideal/families.hpp"

#include <sstream>

#include "monideal/errors.hpp"

namespace monideal {

std::string to_string(Family f) {
  switch (f) {
    case Family::basic: return "basic";
    case Family::modified: return "modified";
    case Family::iam: return "iam";
    case Family::product: return "product";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  if (name == "basic") return Family::basic;
  if (name == "modified") return Family::modified;
  if (name == "iam") return Family::iam;
  if (name == "product") return Family::product;
  throw ArgumentError("unknown family '" + name + "' (expected basic, modified, iam or product)");
}

std::string FamilyParams::describe() const {
  std::ostringstream os;
  os << to_string(family);
  switch (family) {
    case Family::basic: os << "(n=" << n << ",a=" << a << ",m=" << m << ")"; break;
    case Family::modified:
      os << "(n=" << n << ",a=" << a << ",m=" << m << ",c=" << c.value_or(-1) << ")";
      break;
    case Family::iam: os << "(a=" << a << ",m=" << m << ")"; break;
    case Family::product: os << "(a=" << a << ",l=" << l.value_or(-1) << ")"; break;
  }
  return os.str();
}

FamilyParams FamilyParams::basic(std::int64_t n, std::int64_t a, std::int64_t m) {
  return {Family::basic, n, a, m, std::nullopt, std::nullopt, std::nullopt};
}

FamilyParams FamilyParams::modified(std::int64_t n, std::int64_t a, std::int64_t m, std::int64_t c) {
  return {Family::modified, n, a, m, c, std::nullopt, std::nullopt};
}

FamilyParams FamilyParams::iam(std::int64_t a, std::int64_t m) {
  return {Family::iam, 2, a, m, std::nullopt, std::nullopt, std::nullopt};
}

FamilyParams FamilyParams::product(std::int64_t a, std::int64_t l) {
  return {Family::product, 2, a, a, std::nullopt, l, std::nullopt};
}

namespace {

void check_basic_params(std::int64_t n, std::int64_t a, std::int64_t m) {
  if (n < 2) throw ArgumentError("basic ideal needs n >= 2");
  if (a < 3) throw ArgumentError("basic ideal needs a >= 3");
  if (m < 1) throw ArgumentError("basic ideal needs m >= 1");
}

}  // namespace

MonomialIdeal basic_ideal(std::int64_t n, std::int64_t a, std::int64_t m) {
  check_basic_params(n, a, m);
  const auto nv = static_cast<std::size_t>(n);
  return product(pure_powers_ideal(nv, checked_mul(a, m)), pure_powers_ideal(nv, m));
}

MonomialIdeal modified_ideal(std::int64_t n, std::int64_t a, std::int64_t m, std::int64_t c) {
  check_basic_params(n, a, m);
  const std::int64_t d = checked_mul(a + 1, m);
  if (c <= d) {
    throw ArgumentError("modified ideal needs c > d = (a+1)m = " + std::to_string(d) +
                        ", got c = " + std::to_string(c));
  }
  return ideal_sum(basic_ideal(n, a, m), maximal_ideal_power(static_cast<std::size_t>(n), c));
}

std::int64_t iam_exponent(std::int64_t a, std::int64_t m) { return checked_mul(a + 2, m) - 1; }

MonomialIdeal ideal_I_am(std::int64_t a, std::int64_t m) {
  check_basic_params(2, a, m);
  return ideal_sum(basic_ideal(2, a, m), maximal_ideal_power(2, iam_exponent(a, m)));
}

MonomialIdeal product_family(std::int64_t a, std::int64_t l, std::size_t max_generators) {
  if (a < 3) throw ArgumentError("product family needs a >= 3");
  if (l < 1) throw ArgumentError("product family needs l >= 1");
  // mu(I_{ja,a}) = ja*a - 2a + 4; refuse before building anything huge.
  double estimate = 1.0;
  for (std::int64_t j = 1; j <= l; ++j) {
    estimate *= static_cast<double>(j * a * a - 2 * a + 4);
    if (estimate > static_cast<double>(max_generators)) {
      throw ResourceError("product family (a=" + std::to_string(a) + ", l=" + std::to_string(l) +
                          ") exceeds the generator cap");
    }
  }
  MonomialIdeal out = ideal_I_am(a, a);
  for (std::int64_t j = 2; j <= l; ++j) out = external_product(out, ideal_I_am(j * a, a));
  return out;
}

MonomialIdeal construct(const FamilyParams& p) {
  switch (p.family) {
    case Family::basic: return basic_ideal(p.n, p.a, p.m);
    case Family::modified:
      if (!p.c) throw ArgumentError("modified family needs c");
      return modified_ideal(p.n, p.a, p.m, *p.c);
    case Family::iam: return ideal_I_am(p.a, p.m);
    case Family::product:
      if (!p.l) throw ArgumentError("product family needs l");
      return product_family(p.a, *p.l);
  }
  throw ArgumentError("unknown family");
}

}  // namespace monideal
