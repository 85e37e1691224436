// monideal: construct monomial ideal families, tabulate mu(I^k), locate
// local extrema and run verification campaigns.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parameter error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "monideal/analysis.hpp"
#include "monideal/errors.hpp"
#include "monideal/families.hpp"
#include "monideal/formulas.hpp"
#include "monideal/io.hpp"

using namespace monideal;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct FamilyArgs {
  std::string family;
  std::int64_t n = 2, a = 3, m = 1;
  std::optional<std::int64_t> c, l;

  void add_to(CLI::App& app, bool with_family_flag = true) {
    if (with_family_flag) app.add_option("--family", family, "basic | modified | iam | product");
    app.add_option("--n", n, "number of variables (basic, modified)");
    app.add_option("--a", a, "parameter a >= 3");
    app.add_option("--m", m, "parameter m >= 1");
    app.add_option("--c", c, "added maximal-ideal power (modified)");
    app.add_option("--l", l, "block count (product)");
  }

  FamilyParams params() const {
    FamilyParams p;
    p.family = parse_family(family);
    p.n = n;
    p.a = a;
    p.m = p.family == Family::product ? a : m;
    p.c = c;
    p.l = l;
    if (p.family == Family::iam || p.family == Family::product) p.n = 2;
    if (p.family == Family::modified && !c) throw ArgumentError("modified family needs --c");
    if (p.family == Family::product && !l) throw ArgumentError("product family needs --l");
    return p;
  }
};

std::string read_input(const std::string& path) {
  std::ostringstream os;
  if (path == "-") {
    os << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw ArgumentError("cannot open '" + path + "'");
    os << in.rdbuf();
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monomial ideal powers: generator counts, socle degrees, local extrema"};
  app.require_subcommand(1);

  // construct
  auto* construct_cmd = app.add_subcommand("construct", "print an ideal document for a family");
  std::string construct_family;
  FamilyArgs construct_args;
  construct_cmd->add_option("family", construct_family, "basic | modified | iam | product")->required();
  construct_args.add_to(*construct_cmd, false);

  // mu
  auto* mu_cmd = app.add_subcommand("mu", "tabulate mu(I^k) as CSV");
  FamilyArgs mu_args;
  std::string mu_ideal, mu_mode = "brute";
  std::optional<std::int64_t> mu_kmax;
  std::size_t mu_cap = BruteOptions{}.max_candidates;
  mu_args.add_to(*mu_cmd);
  mu_cmd->add_option("--ideal", mu_ideal, "ideal document file ('-' for stdin), brute mode only");
  mu_cmd->add_option("--kmax", mu_kmax, "largest power");
  mu_cmd->add_option("--mode", mu_mode, "brute | formula | both")
      ->check(CLI::IsMember({"brute", "formula", "both"}));
  mu_cmd->add_option("--cap", mu_cap, "candidate-monomial cap per brute-force step");

  // extrema
  auto* ext_cmd = app.add_subcommand("extrema", "strict local extrema of a mu-sequence");
  FamilyArgs ext_args;
  std::string ext_csv;
  std::optional<std::int64_t> ext_kmax;
  ext_args.add_to(*ext_cmd);
  ext_cmd->add_option("--csv", ext_csv, "sequence CSV file ('-' for stdin)");
  ext_cmd->add_option("--kmax", ext_kmax, "largest power when evaluating a family formula");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run a verification campaign");
  std::string suite;
  verify_cmd->add_option("suite", suite, "one of: power socle total equality-window need difference "
                                         "multiplicativity paper-example")
      ->required();

  // formula
  auto* formula_cmd = app.add_subcommand("formula", "evaluate a closed formula");
  std::string formula_name;
  std::int64_t fn = 2, fa = 3, fm = 1, fk = 1, fl = 1, fp = 0, fq = 1, fi = 1;
  formula_cmd->add_option("name", formula_name,
                          "socle-j | socle-e | mu-j | mu-iam | mu-product | round | argmax | harmonic | choose-l")
      ->required();
  formula_cmd->add_option("--n", fn);
  formula_cmd->add_option("--a", fa);
  formula_cmd->add_option("--m", fm);
  formula_cmd->add_option("--k", fk);
  formula_cmd->add_option("--l", fl);
  formula_cmd->add_option("--p", fp, "numerator for round");
  formula_cmd->add_option("--q", fq, "denominator for round; target count for choose-l");
  formula_cmd->add_option("--i", fi, "index for harmonic");

  // search
  auto* search_cmd = app.add_subcommand("search", "smallest a giving the product family q local maxima");
  std::int64_t sl = 4, sq = 1, a_min = 3, a_max = 40;
  search_cmd->add_option("--l", sl, "block count")->required();
  search_cmd->add_option("--q", sq, "required number of local maxima")->required();
  search_cmd->add_option("--a-min", a_min, "smallest a to try (default 3)");
  search_cmd->add_option("--a-max", a_max, "largest a to try (default 40)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*construct_cmd) {
      construct_args.family = construct_family;
      std::cout << to_document(construct(construct_args.params()));
      return kOk;
    }

    if (*mu_cmd) {
      if (!mu_ideal.empty() && !mu_args.family.empty())
        throw ArgumentError("give either --ideal or --family, not both");
      if (mu_ideal.empty() && mu_args.family.empty()) throw ArgumentError("mu needs --ideal or --family");
      std::optional<FamilyParams> fam;
      if (!mu_args.family.empty()) fam = mu_args.params();
      if (!mu_kmax) {
        if (!fam) throw ArgumentError("--kmax is required with --ideal");
        mu_kmax = default_kmax(*fam);
      }
      if (mu_ideal.size() && mu_mode != "brute") throw ArgumentError("--ideal supports only --mode brute");
      BruteOptions opts{mu_cap};
      if (mu_mode == "brute") {
        const auto ideal = fam ? construct(*fam) : parse_document(read_input(mu_ideal));
        write_csv(std::cout, mu_sequence_brute(ideal, *mu_kmax, opts));
      } else if (mu_mode == "formula") {
        write_csv(std::cout, mu_sequence_formula(*fam, *mu_kmax));
      } else {
        const auto formula = mu_sequence_formula(*fam, *mu_kmax);
        const auto brute = mu_sequence_brute(construct(*fam), *mu_kmax, opts);
        if (auto k = first_mismatch(brute, formula)) {
          std::cerr << "mismatch: brute and formula disagree first at k = " << *k << '\n';
          return kVerifyFailed;
        }
        write_csv(std::cout, merge(brute, formula));
      }
      return kOk;
    }

    if (*ext_cmd) {
      MuSequence seq;
      if (!ext_csv.empty()) {
        seq = parse_csv(read_input(ext_csv), ext_csv);
      } else if (!ext_args.family.empty()) {
        const auto p = ext_args.params();
        seq = mu_sequence_formula(p, ext_kmax.value_or(default_kmax(p)));
      } else {
        throw ArgumentError("extrema needs --csv or --family");
      }
      std::cout << find_extrema(seq).summary();
      return kOk;
    }

    if (*verify_cmd) {
      const auto report = run_suite(suite);
      std::cout << report.summary();
      if (!report.passed()) {
        std::cerr << "first counterexample: " << report.first_mismatch()->to_string() << '\n';
        return kVerifyFailed;
      }
      return kOk;
    }

    if (*formula_cmd) {
      const auto& f = formula_name;
      if (f == "socle-j") std::cout << socle_J_formula(fn, fa, fm, fk) << '\n';
      else if (f == "socle-e") std::cout << socle_E_formula(fn, fa, fk) << '\n';
      else if (f == "mu-j") std::cout << mu_J_formula(fa, fk).str() << '\n';
      else if (f == "mu-iam") std::cout << mu_Iam_formula(fa, fm, fk).str() << '\n';
      else if (f == "mu-product") std::cout << mu_product_formula(fa, fl, fk).str() << '\n';
      else if (f == "round") std::cout << round_nearest(fp, fq) << '\n';
      else if (f == "argmax") {
        const auto pr = predicted_argmax(fa, fm);
        std::cout << pr.t << '\n' << "valid: " << (pr.valid() ? "yes" : "no") << '\n';
      } else if (f == "harmonic") std::cout << (harmonic_condition(fl, fi) ? "true" : "false") << '\n';
      else if (f == "choose-l") {
        const auto pc = choose_params_for_q(fq);
        std::cout << pc.l << '\n' << "satisfied:";
        for (auto i : pc.satisfied) std::cout << ' ' << i;
        std::cout << '\n';
      } else {
        throw ArgumentError("unknown formula '" + f + "'");
      }
      return kOk;
    }

    if (*search_cmd) {
      if (a_min < 3 || a_max < a_min) throw ArgumentError("need 3 <= a-min <= a-max");
      std::vector<std::int64_t> range;
      for (auto a = a_min; a <= a_max; ++a) range.push_back(a);
      if (auto hit = search_effective_a(sl, sq, range)) {
        std::cout << "a: " << hit->a << "\nmaxima:";
        for (auto k : hit->maxima) std::cout << ' ' << k;
        std::cout << '\n';
      } else {
        std::cout << "a: none\n";
      }
      return kOk;
    }
  } catch (const MismatchError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerifyFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
