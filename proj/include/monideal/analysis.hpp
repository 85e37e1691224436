#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "monideal/families.hpp"
#include "monideal/formulas.hpp"
#include "monideal/ideal.hpp"

namespace monideal {

enum class Source { brute, formula };

std::string to_string(Source s);
Source parse_source(const std::string& s);

struct MuEntry {
  std::int64_t k = 0;
  BigInt mu;
  Source source = Source::brute;

  bool operator==(const MuEntry&) const = default;
};

/// The table k -> mu(I^k). Distinct k values run 1, 2, ..., kmax; each k
/// has at most one entry per source and entries for the same k agree.
/// Entries are kept sorted by (k, source).
class MuSequence {
 public:
  MuSequence() = default;
  /// Validates the invariants; throws ArgumentError or MismatchError.
  MuSequence(std::string params, std::vector<MuEntry> entries);

  const std::string& params() const noexcept { return params_; }
  const std::vector<MuEntry>& entries() const noexcept { return entries_; }
  std::int64_t kmax() const noexcept { return entries_.empty() ? 0 : entries_.back().k; }
  /// One value per k, index 0 holding k = 1.
  std::vector<BigInt> values() const;

  bool operator==(const MuSequence&) const = default;

 private:
  std::string params_;
  std::vector<MuEntry> entries_;
};

/// First k where both sequences have a value and the values differ.
std::optional<std::int64_t> first_mismatch(const MuSequence& a, const MuSequence& b);

/// Union of the entries of both sequences. Throws MismatchError naming
/// the first divergent k.
MuSequence merge(const MuSequence& a, const MuSequence& b);

struct BruteOptions {
  /// Refuse a multiplication step producing more candidate monomials.
  std::size_t max_candidates = 10'000'000;
};

/// mu(A^k) for k = 1..kmax, computing A^k = A^{k-1} A incrementally.
MuSequence mu_sequence_brute(const MonomialIdeal& a, std::int64_t kmax,
                             const BruteOptions& opts = {});

/// Closed-form mu for the families that have one: basic with n = 2, iam,
/// product. Anything else throws UnsupportedFamilyError.
BigInt mu_formula_value(const FamilyParams& p, std::int64_t k);

MuSequence mu_sequence_formula(const FamilyParams& p, std::int64_t kmax);

/// Default kmax used by the CLI: la + a for the product family (no maxima
/// past la), a + 2 otherwise.
std::int64_t default_kmax(const FamilyParams& p);

struct DecreasingRun {
  std::int64_t start = 0;   ///< first k with f(k) > f(k+1)
  std::int64_t length = 0;  ///< number of consecutive descending steps

  bool operator==(const DecreasingRun&) const = default;
};

/// Strict interior extrema of a sequence. Endpoints are never extrema;
/// plateaus never are either.
struct ExtremaReport {
  std::vector<std::int64_t> maxima;
  std::vector<std::int64_t> minima;
  std::vector<DecreasingRun> decreasing_runs;
  MuSequence sequence;

  /// key: value lines, "no extrema" when there are neither maxima nor minima.
  std::string summary() const;
};

/// `values[0]` is f(1). Needs at least 3 values.
ExtremaReport find_extrema(std::span<const BigInt> values);
ExtremaReport find_extrema(const MuSequence& seq);

// Verification campaigns.

struct Mismatch {
  std::string point;
  std::int64_t k = 0;
  std::string quantity;
  std::string expected;
  std::string actual;

  std::string to_string() const;
};

struct PointResult {
  std::string point;
  std::size_t checks = 0;
  std::optional<Mismatch> mismatch;

  bool passed() const noexcept { return !mismatch.has_value(); }
};

struct VerificationReport {
  std::string suite;
  std::vector<PointResult> points;
  /// Extra lines describing what was observed (e.g. located maxima).
  std::vector<std::string> notes;

  bool passed() const noexcept;
  std::optional<Mismatch> first_mismatch() const;
  std::string summary() const;
};

using MuFormula = std::function<BigInt(const FamilyParams&, std::int64_t)>;
using KmaxRule = std::function<std::int64_t(const FamilyParams&)>;

/// For each grid point, compares brute-force mu(I^k) with `formula` and,
/// for the basic family, socle_degree(J^k) with socle_J_formula. Points
/// without a mu formula (basic with n >= 3) get the socle check only.
/// Stops at the first mismatch of each point.
VerificationReport verify_family(const std::string& suite, std::span<const FamilyParams> grid,
                                 const KmaxRule& kmax, const MuFormula& formula = mu_formula_value);

/// Named campaigns: power, socle, total, equality-window, need,
/// difference, multiplicativity, paper-example.
VerificationReport run_suite(const std::string& name);
std::vector<std::string> suite_names();

// Searches that make the "large parameter" hypotheses concrete.

struct EffectiveA {
  std::int64_t a = 0;
  std::vector<std::int64_t> maxima;
};

/// Smallest a in `a_range` for which the product family (a, l) has at
/// least q strict local maxima over k = 1..la+a.
std::optional<EffectiveA> search_effective_a(std::int64_t l, std::int64_t q,
                                             std::span<const std::int64_t> a_range);

enum class ExtremumKind { maximum, minimum };

struct IamChoice {
  std::int64_t a = 0;
  std::int64_t m = 0;
  std::int64_t start = 0;  ///< for decreasing runs: the first descending k
};

/// First (a, m), scanning a then m, for which k -> mu(I_{a,m}^k) over
/// k = 1..a+2 has a strict local extremum of the given kind at k0.
std::optional<IamChoice> search_iam_extremum(std::int64_t k0, ExtremumKind kind,
                                             std::span<const std::int64_t> a_range,
                                             std::span<const std::int64_t> m_range);

/// First (a, m) whose sequence over k = 1..a+2 has a maximal decreasing
/// run of exactly b steps after which it strictly increases.
std::optional<IamChoice> search_decreasing_run(std::int64_t b,
                                               std::span<const std::int64_t> a_range,
                                               std::span<const std::int64_t> m_range);

}  // namespace monideal
