#include "monideal/analysis.hpp"

#include <algorithm>
#include <sstream>

#include "monideal/errors.hpp"

namespace monideal {

std::string to_string(Source s) { return s == Source::brute ? "brute" : "formula"; }

Source parse_source(const std::string& s) {
  if (s == "brute") return Source::brute;
  if (s == "formula") return Source::formula;
  throw ArgumentError("unknown source '" + s + "'");
}

MuSequence::MuSequence(std::string params, std::vector<MuEntry> entries)
    : params_(std::move(params)), entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(), [](const MuEntry& x, const MuEntry& y) {
    return x.k != y.k ? x.k < y.k : x.source < y.source;
  });
  std::int64_t expected_k = 1;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    if (i > 0 && entries_[i - 1].k == e.k) {
      if (entries_[i - 1].source == e.source)
        throw ArgumentError("duplicate " + to_string(e.source) + " entry for k = " + std::to_string(e.k));
      if (entries_[i - 1].mu != e.mu)
        throw MismatchError("brute and formula disagree at k = " + std::to_string(e.k));
      continue;
    }
    if (e.k != expected_k)
      throw ArgumentError("sequence k values must run consecutively from 1; missing k = " +
                          std::to_string(expected_k));
    ++expected_k;
  }
}

std::vector<BigInt> MuSequence::values() const {
  std::vector<BigInt> out;
  for (const auto& e : entries_)
    if (out.size() < static_cast<std::size_t>(e.k)) out.push_back(e.mu);
  return out;
}

std::optional<std::int64_t> first_mismatch(const MuSequence& a, const MuSequence& b) {
  const auto va = a.values();
  const auto vb = b.values();
  for (std::size_t i = 0; i < std::min(va.size(), vb.size()); ++i)
    if (va[i] != vb[i]) return static_cast<std::int64_t>(i + 1);
  return std::nullopt;
}

MuSequence merge(const MuSequence& a, const MuSequence& b) {
  if (auto k = first_mismatch(a, b)) {
    throw MismatchError("sequences disagree first at k = " + std::to_string(*k));
  }
  std::vector<MuEntry> all(a.entries());
  all.insert(all.end(), b.entries().begin(), b.entries().end());
  std::string params = a.params() == b.params() ? a.params() : a.params() + " | " + b.params();
  return MuSequence(std::move(params), std::move(all));
}

MuSequence mu_sequence_brute(const MonomialIdeal& a, std::int64_t kmax, const BruteOptions& opts) {
  if (kmax < 1) throw ArgumentError("kmax must be at least 1");
  std::vector<MuEntry> entries;
  MonomialIdeal pow = a;
  for (std::int64_t k = 1; k <= kmax; ++k) {
    if (k > 1) {
      if (pow.size() * a.size() > opts.max_candidates) {
        throw ResourceError("computing power " + std::to_string(k) + " needs " +
                            std::to_string(pow.size() * a.size()) + " candidate monomials, cap is " +
                            std::to_string(opts.max_candidates));
      }
      pow = product(pow, a);
    }
    entries.push_back({k, BigInt(pow.size()), Source::brute});
  }
  return MuSequence(a.to_string().size() > 80 ? "ideal with " + std::to_string(a.size()) + " generators"
                                               : a.to_string(),
                    std::move(entries));
}

BigInt mu_formula_value(const FamilyParams& p, std::int64_t k) {
  switch (p.family) {
    case Family::basic:
      if (p.n != 2) throw UnsupportedFamilyError("no mu formula for the basic ideal with n != 2");
      if (p.m < 1) throw ArgumentError("basic family needs m >= 1");
      return mu_J_formula(p.a, k);
    case Family::iam: return mu_Iam_formula(p.a, p.m, k);
    case Family::product:
      if (!p.l) throw ArgumentError("product family needs l");
      return mu_product_formula(p.a, *p.l, k);
    case Family::modified: break;
  }
  throw UnsupportedFamilyError("no mu formula for family " + p.describe());
}

MuSequence mu_sequence_formula(const FamilyParams& p, std::int64_t kmax) {
  if (kmax < 1) throw ArgumentError("kmax must be at least 1");
  std::vector<MuEntry> entries;
  entries.reserve(static_cast<std::size_t>(kmax));
  for (std::int64_t k = 1; k <= kmax; ++k) entries.push_back({k, mu_formula_value(p, k), Source::formula});
  return MuSequence(p.describe(), std::move(entries));
}

std::int64_t default_kmax(const FamilyParams& p) {
  if (p.family == Family::product) return p.l.value_or(1) * p.a + p.a;
  return p.a + 2;
}

namespace {

std::string join(const std::vector<std::int64_t>& v) {
  if (v.empty()) return "none";
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

}  // namespace

std::string ExtremaReport::summary() const {
  std::ostringstream os;
  os << "entries: " << sequence.kmax() << '\n';
  os << "maxima: " << join(maxima) << '\n';
  os << "minima: " << join(minima) << '\n';
  os << "decreasing_runs: ";
  if (decreasing_runs.empty()) os << "none";
  for (std::size_t i = 0; i < decreasing_runs.size(); ++i)
    os << (i ? " " : "") << decreasing_runs[i].start << ':' << decreasing_runs[i].length;
  os << '\n';
  if (maxima.empty() && minima.empty()) os << "no extrema\n";
  return os.str();
}

ExtremaReport find_extrema(std::span<const BigInt> values) {
  if (values.size() < 3) throw ArgumentError("extrema need at least 3 sequence entries");
  ExtremaReport r;
  for (std::size_t i = 1; i + 1 < values.size(); ++i) {
    const auto k = static_cast<std::int64_t>(i + 1);
    if (values[i - 1] < values[i] && values[i] > values[i + 1]) r.maxima.push_back(k);
    if (values[i - 1] > values[i] && values[i] < values[i + 1]) r.minima.push_back(k);
  }
  for (std::size_t i = 0; i + 1 < values.size();) {
    if (values[i] > values[i + 1]) {
      std::size_t j = i;
      while (j + 1 < values.size() && values[j] > values[j + 1]) ++j;
      r.decreasing_runs.push_back({static_cast<std::int64_t>(i + 1), static_cast<std::int64_t>(j - i)});
      i = j;
    } else {
      ++i;
    }
  }
  std::vector<MuEntry> entries;
  for (std::size_t i = 0; i < values.size(); ++i)
    entries.push_back({static_cast<std::int64_t>(i + 1), values[i], Source::formula});
  r.sequence = MuSequence("values", std::move(entries));
  return r;
}

ExtremaReport find_extrema(const MuSequence& seq) {
  const auto v = seq.values();
  ExtremaReport r = find_extrema(std::span<const BigInt>(v));
  r.sequence = seq;
  return r;
}

std::string Mismatch::to_string() const {
  std::ostringstream os;
  os << point << ": " << quantity << " at k=" << k << " expected " << expected << " got " << actual;
  return os.str();
}

bool VerificationReport::passed() const noexcept {
  return std::all_of(points.begin(), points.end(), [](const PointResult& p) { return p.passed(); });
}

std::optional<Mismatch> VerificationReport::first_mismatch() const {
  for (const auto& p : points)
    if (p.mismatch) return p.mismatch;
  return std::nullopt;
}

std::string VerificationReport::summary() const {
  std::ostringstream os;
  std::size_t checks = 0, failed = 0;
  for (const auto& p : points) {
    checks += p.checks;
    if (p.passed()) {
      os << "PASS " << p.point << " (" << p.checks << " checks)\n";
    } else {
      ++failed;
      os << "FAIL " << p.mismatch->to_string() << '\n';
    }
  }
  for (const auto& n : notes) os << "note: " << n << '\n';
  os << "suite " << suite << ": " << (failed == 0 ? "PASS" : "FAIL") << " (" << points.size()
     << " points, " << checks << " checks, " << failed << " failed)\n";
  return os.str();
}

VerificationReport verify_family(const std::string& suite, std::span<const FamilyParams> grid,
                                 const KmaxRule& kmax, const MuFormula& formula) {
  VerificationReport report{suite, {}, {}};
  for (const auto& p : grid) {
    PointResult pr{p.describe(), 0, std::nullopt};
    const bool has_mu_formula = !(p.family == Family::basic && p.n != 2) && p.family != Family::modified;
    const bool check_socle = p.family == Family::basic;
    const MonomialIdeal base = construct(p);
    MonomialIdeal pow = base;
    const std::int64_t kk = kmax(p);
    for (std::int64_t k = 1; k <= kk && !pr.mismatch; ++k) {
      if (k > 1) pow = product(pow, base);
      if (has_mu_formula) {
        ++pr.checks;
        BigInt expected = formula(p, k);
        if (expected != pow.size())
          pr.mismatch = Mismatch{pr.point, k, "mu", expected.str(), std::to_string(pow.size())};
      }
      if (check_socle && !pr.mismatch) {
        ++pr.checks;
        const auto expected = socle_J_formula(p.n, p.a, p.m, k);
        const auto actual = socle_degree(pow);
        if (expected != actual)
          pr.mismatch = Mismatch{pr.point, k, "socle", std::to_string(expected), std::to_string(actual)};
      }
    }
    report.points.push_back(std::move(pr));
  }
  return report;
}

std::optional<EffectiveA> search_effective_a(std::int64_t l, std::int64_t q,
                                             std::span<const std::int64_t> a_range) {
  for (std::int64_t a : a_range) {
    if (q <= 0) return EffectiveA{a, {}};
    const auto p = FamilyParams::product(a, l);
    auto rep = find_extrema(mu_sequence_formula(p, default_kmax(p)));
    if (static_cast<std::int64_t>(rep.maxima.size()) >= q) return EffectiveA{a, rep.maxima};
  }
  return std::nullopt;
}

std::optional<IamChoice> search_iam_extremum(std::int64_t k0, ExtremumKind kind,
                                             std::span<const std::int64_t> a_range,
                                             std::span<const std::int64_t> m_range) {
  for (std::int64_t a : a_range) {
    for (std::int64_t m : m_range) {
      if (k0 + 1 > a + 2) continue;
      auto rep = find_extrema(mu_sequence_formula(FamilyParams::iam(a, m), a + 2));
      const auto& hits = kind == ExtremumKind::maximum ? rep.maxima : rep.minima;
      if (std::find(hits.begin(), hits.end(), k0) != hits.end()) return IamChoice{a, m, 0};
    }
  }
  return std::nullopt;
}

std::optional<IamChoice> search_decreasing_run(std::int64_t b, std::span<const std::int64_t> a_range,
                                               std::span<const std::int64_t> m_range) {
  if (b < 1) throw ArgumentError("decreasing run length must be positive");
  for (std::int64_t a : a_range) {
    for (std::int64_t m : m_range) {
      const std::int64_t kmax = a + 2;
      const auto v = mu_sequence_formula(FamilyParams::iam(a, m), kmax).values();
      auto rep = find_extrema(std::span<const BigInt>(v));
      for (const auto& run : rep.decreasing_runs) {
        if (run.length != b) continue;
        bool rises = true;
        for (auto k = run.start + run.length; k < kmax; ++k)
          if (!(v[k - 1] < v[k])) rises = false;
        if (rises) return IamChoice{a, m, run.start};
      }
    }
  }
  return std::nullopt;
}

}  // namespace monideal
