// secantlab: secant dimensions and defects of classical varieties.
//
//   secantlab analyze SPEC [--kmax N] [--seed S] [--trials T] [--exact]
//                          [--gamma|--no-gamma] [--json|--table] [--out PATH]
//   secantlab reproduce SUITE
//   secantlab catalog
//
// Exit codes: 0 ok, 1 suite mismatch, 2 parse error, 3 analysis error.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "secantlab/secantlab.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitParse = 2;
constexpr int kExitAnalysis = 3;

struct AnalyzeArgs {
  std::string spec;
  std::size_t kmax = 0;
  std::uint64_t seed = 0;
  std::size_t trials = secantlab::kDefaultTrials;
  bool exact = false;
  bool no_gamma = false;
  bool table = false;
  std::string out;
};

int write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open " << path << " for writing\n";
    return kExitAnalysis;
  }
  file << text;
  return kExitOk;
}

int run_analyze(const AnalyzeArgs& args) {
  secantlab::VarietySpec spec;
  try {
    spec = secantlab::parse_spec(args.spec);
  } catch (const secantlab::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n  " << args.spec << "\n  " << std::string(e.position(), ' ') << "^\n";
    return kExitParse;
  }
  secantlab::AnalyzeOptions opts;
  if (args.kmax > 0) opts.kmax = args.kmax;
  opts.seed = args.seed;
  opts.trials = args.trials;
  opts.exact = args.exact;
  opts.gamma = !args.no_gamma;
  try {
    const auto rep = secantlab::analyze(spec, opts);
    return write_output(args.table ? secantlab::render_table(rep) : secantlab::render_json(rep), args.out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAnalysis;
  }
}

int run_reproduce(const std::string& suite, bool exact) {
  std::vector<secantlab::SuiteRow> rows;
  try {
    secantlab::SuiteOptions opts;
    opts.exact = exact;
    rows = secantlab::run_suite(suite, opts);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAnalysis;
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.key < b.key; });
  std::size_t wk = 3, we = 8;
  for (const auto& r : rows) {
    wk = std::max(wk, r.key.size());
    we = std::max(we, r.expected.size());
  }
  std::size_t bad = 0;
  std::cout << std::left << std::setw(static_cast<int>(wk)) << "row" << "  " << std::setw(static_cast<int>(we))
            << "expected" << "  computed\n";
  for (const auto& r : rows) {
    std::cout << std::setw(static_cast<int>(wk)) << r.key << "  " << std::setw(static_cast<int>(we)) << r.expected
              << "  " << r.computed << (r.ok() ? "" : "   MISMATCH") << "\n";
    if (!r.ok()) ++bad;
  }
  std::cout << "\n" << suite << ": " << rows.size() - bad << "/" << rows.size() << " rows match\n";
  return bad == 0 ? kExitOk : kExitMismatch;
}

int run_catalog() {
  std::cout <<
      R"(families (n = dim X, r = ambient dimension):
  veronese:n,d          n >= 1, d >= 1          dim n, ambient C(n+d,d) - 1
  segre:m1,...,mh       h >= 2, 0 < m1 <= ... <= mh
                                                dim m1+...+mh, ambient (m1+1)...(mh+1) - 1
  grassmann:m,n         0 <= m < n              dim (m+1)(n-m), ambient C(n+1,m+1) - 1
  scroll:a1,...,an      0 <= a1 <= ... <= an, an > 0
                                                dim n, ambient a1+...+an + n - 1, degree a1+...+an = r-n+1
  spinor:k              k >= 1                  dim C(k+1,2), ambient 2^k - 1
  hermitian:A,s         A in {R, splitC, splitH, splitO}, s >= 3, s = 3 for splitO
                                                dim (s-1) dim A, ambient s + C(s,2) dim A - 1
modifiers:
  |cone:c               c >= 1                  dim n + c, ambient r + c
  |project:c            1 <= c <= r - n         dim n, ambient r - c (seeded general projection)
)";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Secant dimensions and defects of classical projective varieties"};
  app.require_subcommand(1);

  AnalyzeArgs a;
  auto* analyze = app.add_subcommand("analyze", "Compute the defect ledger and bound checks for a variety");
  analyze->add_option("spec", a.spec, "Variety spec, e.g. segre:3,4 or scroll:1,1,20|project:2")->required();
  analyze->add_option("--kmax", a.kmax, "Largest k in the ledger (default min(k0, 6))")->check(CLI::PositiveNumber);
  analyze->add_option("--seed", a.seed, "Random seed");
  analyze->add_option("--trials", a.trials, "Random trials per measurement")->check(CLI::PositiveNumber);
  analyze->add_flag("--exact", a.exact, "Rational arithmetic instead of a prime field");
  analyze->add_flag("--gamma,!--no-gamma", [&a](std::int64_t count) { a.no_gamma = count < 0; },
                    "Compute contact-locus dimensions (default on)");
  auto* json = analyze->add_flag("--json", "JSON report (default)");
  auto* table = analyze->add_flag("--table", a.table, "Aligned text table");
  json->excludes(table);
  analyze->add_option("--out", a.out, "Write to PATH instead of stdout");

  std::string suite;
  bool suite_exact = false;
  auto* reproduce = app.add_subcommand("reproduce", "Run a golden suite and compare with expected values");
  reproduce->add_option("suite", suite, "ksevi | scrolls | seg34 | severi | speculations")->required();
  reproduce->add_flag("--exact", suite_exact, "Rational arithmetic instead of a prime field");

  auto* catalog = app.add_subcommand("catalog", "List variety families and their dimension formulas");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitParse;
  }

  if (*analyze) return run_analyze(a);
  if (*reproduce) return run_reproduce(suite, suite_exact);
  if (*catalog) return run_catalog();
  return kExitParse;
}
