#include <random>
#include <sstream>

#include "monideal/analysis.hpp"
#include "monideal/errors.hpp"

namespace monideal {

namespace {

std::string point_name(const std::string& what, std::initializer_list<std::pair<const char*, std::int64_t>> kv) {
  std::ostringstream os;
  os << what << '(';
  bool first = true;
  for (const auto& [k, v] : kv) {
    os << (first ? "" : ",") << k << '=' << v;
    first = false;
  }
  os << ')';
  return os.str();
}

VerificationReport suite_power() {
  std::vector<FamilyParams> grid;
  for (std::int64_t a : {3, 4, 5, 7})
    for (std::int64_t m : {1, 2, 3}) grid.push_back(FamilyParams::basic(2, a, m));
  return verify_family("power", grid, [](const FamilyParams& p) { return p.a + 2; });
}

VerificationReport suite_socle() {
  std::vector<FamilyParams> grid;
  for (std::int64_t n : {2, 3})
    for (std::int64_t a : {3, 4})
      for (std::int64_t m : {1, 2}) grid.push_back(FamilyParams::basic(n, a, m));
  auto kmax = [](const FamilyParams& p) { return (p.n - 1) * (p.a - 1) + 2; };
  VerificationReport rep = verify_family("socle", grid, kmax);

  // E = (x_i^a)(x_i) against its own formula.
  for (std::int64_t n : {2, 3}) {
    for (std::int64_t a : {3, 4}) {
      PointResult pr{point_name("E", {{"n", n}, {"a", a}}), 0, std::nullopt};
      const auto e = product(pure_powers_ideal(n, a), maximal_ideal_power(n, 1));
      MonomialIdeal pow = e;
      const std::int64_t kk = (n - 1) * (a - 1) + 2;
      for (std::int64_t k = 1; k <= kk && !pr.mismatch; ++k) {
        if (k > 1) pow = product(pow, e);
        ++pr.checks;
        const auto expected = socle_E_formula(n, a, k);
        const auto actual = socle_degree(pow);
        if (expected != actual)
          pr.mismatch = Mismatch{pr.point, k, "socle", std::to_string(expected), std::to_string(actual)};
      }
      rep.points.push_back(std::move(pr));
    }
  }
  return rep;
}

VerificationReport suite_total() {
  std::vector<FamilyParams> grid;
  for (std::int64_t a : {3, 4, 5, 7})
    for (std::int64_t m : {1, 2, 3, 10}) grid.push_back(FamilyParams::iam(a, m));
  return verify_family("total", grid, [](const FamilyParams& p) { return p.a + 2; });
}

std::vector<MonomialIdeal> powers_upto(const MonomialIdeal& base, std::int64_t kmax) {
  std::vector<MonomialIdeal> out{MonomialIdeal::unit(base.nvars()), base};
  for (std::int64_t k = 2; k <= kmax; ++k) out.push_back(product(out.back(), base));
  return out;
}

VerificationReport suite_equality_window() {
  VerificationReport rep{"equality-window", {}, {}};
  const std::int64_t n = 2;
  for (std::int64_t a : {4, 5}) {
    for (std::int64_t m : {2, 3}) {
      const auto j = basic_ideal(n, a, m);
      const auto jp = powers_upto(j, a - 1);
      const std::int64_t sJ = socle_degree(j);
      const std::int64_t d = (a + 1) * m;
      for (std::int64_t k = 2; k <= (n - 1) * (a - 1); ++k) {
        PointResult pr{point_name("window", {{"a", a}, {"m", m}, {"k", k}}), 0, std::nullopt};
        const std::int64_t lo = sJ - (k - 1) * m + 1;
        const std::int64_t hi = sJ - (k - 2) * m;
        // c = d sits outside the c > d hypothesis; built as a plain sum.
        for (std::int64_t c = std::min(d, lo - 1); c <= std::max(sJ + 1, hi + 1) && !pr.mismatch; ++c) {
          const auto i = ideal_sum(j, maximal_ideal_power(n, c));
          const auto ip = powers_upto(i, k);
          const bool holds = ip[k] == jp[k] && ip[k - 1] != jp[k - 1];
          const bool expected = lo <= c && c <= hi;
          ++pr.checks;
          if (holds != expected) {
            pr.mismatch = Mismatch{pr.point + " c=" + std::to_string(c), k, "I^k=J^k and I^(k-1)!=J^(k-1)",
                                   expected ? "true" : "false", holds ? "true" : "false"};
          }
        }
        rep.points.push_back(std::move(pr));
      }
    }
  }
  return rep;
}

VerificationReport suite_need() {
  VerificationReport rep{"need", {}, {}};
  for (std::int64_t n : {2, 3}) {
    for (std::int64_t a : {3, 4}) {
      for (std::int64_t k : {1, 2}) {
        PointResult pr{point_name("need", {{"n", n}, {"a", a}, {"k", k}}), 0, std::nullopt};
        const std::int64_t t = (n - 1) * (a - 1);
        const auto fk = power(pure_powers_ideal(n, a), k);
        for (std::int64_t c = std::max<std::int64_t>(1, t - 3); c <= t + 3 && !pr.mismatch; ++c) {
          const bool equal = product(fk, maximal_ideal_power(n, c)) == maximal_ideal_power(n, k * a + c);
          const bool expected = c >= t;
          ++pr.checks;
          if (equal != expected) {
            pr.mismatch = Mismatch{pr.point, k, "(x^a)^k m^c = m^(ka+c) at c=" + std::to_string(c),
                                   expected ? "true" : "false", equal ? "true" : "false"};
          }
        }
        rep.points.push_back(std::move(pr));
      }
    }
  }
  return rep;
}

VerificationReport suite_difference() {
  VerificationReport rep{"difference", {}, {}};
  std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> grid;
  for (std::int64_t a : {3, 4, 5})
    for (std::int64_t m : {2, 3}) grid.emplace_back(2, a, m);
  grid.emplace_back(3, 3, 2);
  for (const auto& [n, a, m] : grid) {
    const auto nv = static_cast<std::size_t>(n);
    const auto j = basic_ideal(n, a, m);
    const std::int64_t d = (a + 1) * m;
    const std::int64_t sJ = socle_degree(j);
    const std::int64_t kk = (n - 1) * (a - 1);
    const auto jp = powers_upto(j, kk);
    const auto xm = pure_powers_ideal(nv, m);
    const auto xam = pure_powers_ideal(nv, a * m);
    for (std::int64_t k = 1; k <= kk; ++k) {
      PointResult pr{point_name("difference", {{"n", n}, {"a", a}, {"m", m}, {"k", k}}), 0, std::nullopt};
      const std::int64_t c0 = std::max(d + 1, sJ - (k - 1) * m + 1);
      for (std::int64_t c = c0; c <= c0 + 2 && !pr.mismatch; ++c) {
        const std::string at = " c=" + std::to_string(c);
        const auto mc = maximal_ideal_power(nv, c);
        const auto mcd = maximal_ideal_power(nv, c - d);
        auto fail = [&](const char* part) {
          pr.mismatch = Mismatch{pr.point + at, k, part, "equal", "different"};
        };
        pr.checks += 4;
        if (product(power(xm, k), mcd) != maximal_ideal_power(nv, k * m + c - d)) {
          fail("part a");
        } else if (product(jp[k], mcd) != product(power(xam, k), maximal_ideal_power(nv, k * m + c - d))) {
          fail("part b");
        } else if (product(jp[k - 1], mc) != maximal_ideal_power(nv, (k - 1) * d + c)) {
          fail("part c");
        } else if (power(modified_ideal(n, a, m, c), k) != ideal_sum(jp[k], product(jp[k - 1], mc))) {
          fail("part d");
        }
      }
      rep.points.push_back(std::move(pr));
    }
  }
  return rep;
}

// Random Artinian ideal in two variables: both pure powers plus up to four
// further monomials, exponents at most 8.
MonomialIdeal random_artinian_2var(std::mt19937_64& rng) {
  std::uniform_int_distribution<Exponent> e(1, 8), any(0, 8);
  std::uniform_int_distribution<int> extra(0, 4);
  std::vector<Monomial> gens{{e(rng), 0}, {0, e(rng)}};
  for (int i = extra(rng); i > 0; --i) gens.push_back({any(rng), any(rng)});
  return minimalize(std::move(gens), 2);
}

VerificationReport suite_multiplicativity() {
  VerificationReport rep{"multiplicativity", {}, {}};
  std::mt19937_64 rng(20240601);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_artinian_2var(rng);
    const auto b = random_artinian_2var(rng);
    PointResult pr{"pair " + std::to_string(trial) + " " + a.to_string() + " x " + b.to_string(), 0, std::nullopt};
    const auto ab = external_product(a, b);
    auto pa = a, pb = b, pab = ab;
    for (std::int64_t k = 1; k <= 4 && !pr.mismatch; ++k) {
      if (k > 1) {
        pa = product(pa, a);
        pb = product(pb, b);
        pab = product(pab, ab);
      }
      ++pr.checks;
      if (pab.size() != pa.size() * pb.size())
        pr.mismatch = Mismatch{pr.point, k, "mu", std::to_string(pa.size() * pb.size()), std::to_string(pab.size())};
    }
    rep.points.push_back(std::move(pr));
  }
  auto more = verify_family("multiplicativity", std::vector{FamilyParams::product(3, 2)},
                            [](const FamilyParams&) { return std::int64_t{8}; });
  rep.points.insert(rep.points.end(), more.points.begin(), more.points.end());
  return rep;
}

VerificationReport suite_paper_example() {
  VerificationReport rep{"paper-example", {}, {}};
  const auto p = FamilyParams::product(20, 16);
  const auto seq = mu_sequence_formula(p, default_kmax(p));
  const auto v = seq.values();

  PointResult brackets{"bracketing inequalities", 0, std::nullopt};
  for (std::int64_t r : {38, 56, 73}) {
    ++brackets.checks;
    if (!(v[r - 2] < v[r - 1] && v[r - 1] > v[r])) {
      brackets.mismatch = Mismatch{brackets.point, r, "mu(k-1) < mu(k) > mu(k+1)", "true", "false"};
      break;
    }
  }
  rep.points.push_back(std::move(brackets));

  const auto ext = find_extrema(seq);
  PointResult count{"local maxima count over k=1.." + std::to_string(seq.kmax()), 1, std::nullopt};
  if (ext.maxima.size() != 8)
    count.mismatch = Mismatch{count.point, seq.kmax(), "strict local maxima", "8", std::to_string(ext.maxima.size())};
  rep.points.push_back(std::move(count));

  std::ostringstream os;
  os << "maxima at k =";
  for (auto k : ext.maxima) os << ' ' << k;
  rep.notes.push_back(os.str());
  return rep;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"power", "socle", "total", "equality-window", "need", "difference", "multiplicativity", "paper-example"};
}

VerificationReport run_suite(const std::string& name) {
  if (name == "power") return suite_power();
  if (name == "socle") return suite_socle();
  if (name == "total") return suite_total();
  if (name == "equality-window") return suite_equality_window();
  if (name == "need") return suite_need();
  if (name == "difference") return suite_difference();
  if (name == "multiplicativity") return suite_multiplicativity();
  if (name == "paper-example") return suite_paper_example();
  throw ArgumentError("unknown suite '" + name + "'");
}

}  // namespace monideal
