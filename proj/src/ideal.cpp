#include "monideal/ideal.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "monideal/errors.hpp"

namespace monideal {

MonomialIdeal::MonomialIdeal(std::size_t nvars) : nvars_(nvars) {
  if (nvars == 0) throw ArgumentError("an ideal needs at least one variable");
}

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<Monomial> minimal_sorted)
    : nvars_(nvars), gens_(std::move(minimal_sorted)) {}

MonomialIdeal MonomialIdeal::unit(std::size_t nvars) {
  if (nvars == 0) throw ArgumentError("an ideal needs at least one variable");
  return MonomialIdeal(nvars, {Monomial::one(nvars)});
}

bool MonomialIdeal::contains(const Monomial& u) const noexcept {
  // gens_ is sorted by degree, so stop once generators get too large.
  for (const auto& g : gens_) {
    if (g.degree() > u.degree()) break;
    if (g.divides(u)) return true;
  }
  return false;
}

std::string MonomialIdeal::to_string() const {
  if (gens_.empty()) return "(0)";
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) os << ", ";
    os << gens_[i].to_string();
  }
  os << ')';
  return os.str();
}

namespace {

// Two variables: after sorting by x ascending (then y), a monomial is
// minimal iff its y exponent is below every y seen so far.
std::vector<Monomial> staircase_filter(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return a[0] != b[0] ? a[0] < b[0] : a[1] < b[1];
  });
  std::vector<Monomial> out;
  Exponent min_y = std::numeric_limits<Exponent>::max();
  for (auto& g : gens) {
    if (g[1] < min_y) {
      min_y = g[1];
      out.push_back(std::move(g));
    }
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

// General case: input sorted canonically and deduplicated. Equal-degree
// distinct monomials never divide each other, so each candidate is only
// tested against accepted generators of strictly smaller degree.
std::vector<Monomial> degree_filter(std::vector<Monomial> sorted) {
  std::vector<Monomial> out;
  std::size_t lower_block_end = 0;
  Exponent current_degree = -1;
  for (auto& cand : sorted) {
    if (cand.degree() != current_degree) {
      current_degree = cand.degree();
      lower_block_end = out.size();
    }
    bool dominated = false;
    for (std::size_t i = 0; i < lower_block_end; ++i) {
      if (out[i].divides(cand)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(std::move(cand));
  }
  return out;
}

}  // namespace

MonomialIdeal minimalize(std::vector<Monomial> gens, std::size_t nvars) {
  if (nvars == 0) throw ArgumentError("an ideal needs at least one variable");
  for (const auto& g : gens)
    if (g.nvars() != nvars) throw DimensionError("generator has wrong number of variables");

  std::sort(gens.begin(), gens.end(), CanonicalLess{});
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (!gens.empty() && gens.front().is_one()) return MonomialIdeal::unit(nvars);

  if (nvars == 1) {
    if (!gens.empty()) gens.resize(1);
    return MonomialIdeal(nvars, std::move(gens));
  }
  if (nvars == 2) return MonomialIdeal(nvars, staircase_filter(std::move(gens)));
  return MonomialIdeal(nvars, degree_filter(std::move(gens)));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.nvars() != b.nvars()) throw DimensionError("product of ideals in different rings");
  std::vector<Monomial> cands;
  cands.reserve(a.size() * b.size());
  for (const auto& u : a.generators())
    for (const auto& v : b.generators()) cands.push_back(u * v);
  return minimalize(std::move(cands), a.nvars());
}

MonomialIdeal power(const MonomialIdeal& a, std::int64_t k) {
  if (k < 0) throw ArgumentError("negative ideal power");
  if (k == 0) return MonomialIdeal::unit(a.nvars());
  MonomialIdeal out = a;
  for (std::int64_t i = 1; i < k; ++i) out = product(out, a);
  return out;
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.nvars() != b.nvars()) throw DimensionError("sum of ideals in different rings");
  std::vector<Monomial> gens(a.generators());
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return minimalize(std::move(gens), a.nvars());
}

MonomialIdeal external_product(const MonomialIdeal& a, const MonomialIdeal& b) {
  const std::size_t n = a.nvars() + b.nvars();
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& u : a.generators())
    for (const auto& v : b.generators()) gens.push_back(u.concat(v));
  // Already an antichain; minimalize only sorts.
  return minimalize(std::move(gens), n);
}

MonomialIdeal pseudo_frobenius(const MonomialIdeal& a, Exponent r) {
  if (r < 1) throw ArgumentError("pseudo-Frobenius power needs r >= 1");
  std::vector<Monomial> gens;
  gens.reserve(a.size());
  for (const auto& u : a.generators()) gens.push_back(u.pow(r));
  // Scaling preserves both the antichain and the canonical order.
  return MonomialIdeal(a.nvars(), std::move(gens));
}

bool is_artinian(const MonomialIdeal& a) noexcept {
  if (a.is_unit()) return true;
  std::vector<bool> seen(a.nvars(), false);
  std::size_t count = 0;
  for (const auto& g : a.generators()) {
    int v = g.pure_power_variable();
    if (v >= 0 && !seen[v]) {
      seen[v] = true;
      ++count;
    }
  }
  return count == a.nvars();
}

std::vector<Exponent> pure_power_bounds(const MonomialIdeal& a) {
  if (!is_artinian(a)) throw PreconditionError("ideal is not Artinian");
  std::vector<Exponent> bounds(a.nvars(), 0);
  for (const auto& g : a.generators()) {
    int v = g.pure_power_variable();
    if (v >= 0) bounds[v] = g[v];
  }
  return bounds;
}

Exponent socle_degree(const MonomialIdeal& a) {
  if (!is_artinian(a)) throw PreconditionError("socle degree is infinite for a non-Artinian ideal");
  if (a.is_unit()) throw PreconditionError("the unit ideal has no standard monomials");

  const std::size_t n = a.nvars();
  const auto bounds = pure_power_bounds(a);
  if (n == 1) return bounds[0] - 1;

  // Scan columns: for each prefix (e_1..e_{n-1}) inside the box, the
  // standard monomials above it are x_n^j with j below the smallest last
  // exponent of a generator whose prefix divides it.
  const std::size_t last = n - 1;
  Exponent best = -1;
  std::vector<Exponent> prefix(last, 0);
  Exponent prefix_degree = 0;
  while (true) {
    if (prefix_degree + bounds[last] - 1 > best) {
      Exponent top = bounds[last];
      for (const auto& g : a.generators()) {
        if (g[last] >= top) continue;
        bool fits = true;
        for (std::size_t i = 0; i < last; ++i) {
          if (g[i] > prefix[i]) {
            fits = false;
            break;
          }
        }
        if (fits) top = g[last];
      }
      if (top > 0) best = std::max(best, prefix_degree + top - 1);
    }
    std::size_t i = 0;
    while (i < last) {
      if (prefix[i] + 1 < bounds[i]) {
        ++prefix[i];
        ++prefix_degree;
        break;
      }
      prefix_degree -= prefix[i];
      prefix[i] = 0;
      ++i;
    }
    if (i == last) break;
  }
  return best;
}

bool is_antichain(std::span<const Monomial> gens) noexcept {
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (i != j && gens[i].divides(gens[j])) return false;
  return true;
}

MonomialIdeal maximal_ideal_power(std::size_t nvars, Exponent c) {
  if (c < 0) throw ArgumentError("negative power of the maximal ideal");
  if (nvars == 0) throw ArgumentError("an ideal needs at least one variable");
  std::vector<Monomial> gens;
  std::vector<Exponent> e(nvars, 0);
  // Enumerate compositions of c into nvars parts.
  auto rec = [&](auto&& self, std::size_t i, Exponent left) -> void {
    if (i + 1 == nvars) {
      e[i] = left;
      gens.emplace_back(e);
      return;
    }
    for (Exponent v = left; v >= 0; --v) {
      e[i] = v;
      self(self, i + 1, left - v);
    }
  };
  rec(rec, 0, c);
  return minimalize(std::move(gens), nvars);
}

MonomialIdeal pure_powers_ideal(std::size_t nvars, Exponent e) {
  if (e < 0) throw ArgumentError("negative exponent");
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < nvars; ++i) gens.push_back(Monomial::pure_power(nvars, i, e));
  return minimalize(std::move(gens), nvars);
}

}  // namespace monideal
