#pragma once

// Golden suites: fixed expected numbers against freshly computed ones.

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "secantlab/bounds.hpp"
#include "secantlab/report.hpp"

namespace secantlab {

struct SuiteRow {
  std::string key;
  std::string expected;
  std::string computed;
  [[nodiscard]] bool ok() const { return expected == computed; }
};

struct SuiteOptions {
  std::uint64_t seed = 0;
  std::size_t trials = kDefaultTrials;
  bool exact = false;
};

namespace detail {

inline std::string list(const std::vector<std::size_t>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "]";
}

class SuiteBuilder {
 public:
  explicit SuiteBuilder(SuiteOptions opts) : opts_(opts) {}

  const AnalysisReport& report(const std::string& spec, std::size_t kmax) {
    const std::string key = spec + "#" + std::to_string(kmax);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      AnalyzeOptions a;
      a.kmax = kmax;
      a.seed = opts_.seed;
      a.trials = opts_.trials;
      a.exact = opts_.exact;
      it = cache_.emplace(key, analyze(parse_spec(spec), a)).first;
    }
    return it->second;
  }

  template <class T>
  void row(std::string key, const T& expected, const T& computed) {
    rows_.push_back({std::move(key), str(expected), str(computed)});
  }

  void row(std::string key, const std::string& expected, const std::string& computed) {
    rows_.push_back({std::move(key), expected, computed});
  }

  [[nodiscard]] const SuiteOptions& options() const { return opts_; }
  std::vector<SuiteRow> take() { return std::move(rows_); }

 private:
  template <class T>
  static std::string str(const T& v) {
    if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
    else return std::to_string(v);
  }

  SuiteOptions opts_;
  std::map<std::string, AnalysisReport> cache_;
  std::vector<SuiteRow> rows_;
};

template <ExactField F>
std::size_t projection_image_dim(const std::string& spec, std::size_t k, const SuiteOptions& opts) {
  const FieldChart<F> chart(build(spec));
  return image_dim(tangential_projection(chart, k, opts.seed, opts.trials), opts.trials, opts.seed);
}

inline void suite_seg34(SuiteBuilder& b) {
  const auto& rep = b.report("segre:3,4", 2);
  const auto& l = rep.ledger;
  b.row("segre:3,4 s^(1)", std::int64_t{13}, l.row(1).s);
  b.row("segre:3,4 f_1", std::int64_t{2}, l.row(1).f);
  b.row("segre:3,4 psi_1", std::int64_t{2}, l.row(1).psi);
  b.row("segre:3,4 gamma_1", std::int64_t{2}, l.row(1).gamma.value_or(-1));
  b.row("segre:3,4 s^(2)", std::int64_t{17}, l.row(2).s);
  b.row("segre:3,4 f_2", std::int64_t{6}, l.row(2).f);
  b.row("segre:3,4 psi_2", std::int64_t{4}, l.row(2).psi);
  b.row("segre:3,4 gamma_2", std::int64_t{4}, l.row(2).gamma.value_or(-1));
  const auto& opts = b.options();
  for (std::size_t k : {1U, 2U}) {
    const std::size_t dim = opts.exact ? projection_image_dim<Rational>("segre:3,4", k, opts)
                                       : projection_image_dim<Fp0>("segre:3,4", k, opts);
    b.row("segre:3,4 dim tau_" + std::to_string(k) + "(X)", std::size_t{k == 1 ? 5U : 3U}, dim);
  }
  const Check* step2 = rep.bounds.find("fiber_defect_bound", 2);
  b.row("segre:3,4 2f_2 vs 2n", std::string("holds: 2 f_2 = 12 < 14 = k n"),
        step2 ? to_string(step2->verdict) + ": " + step2->witness : std::string("missing"));
  const Check* rk = rep.bounds.find("rk_criterion", 2);
  b.row("segre:3,4 R_2 criterion", std::string("holds"), rk ? to_string(rk->verdict) : std::string("missing"));
}

inline void suite_severi(SuiteBuilder& b) {
  struct Row {
    const char* spec;
    std::size_t n, r;
  };
  for (const Row& row : {Row{"veronese:2,2", 2, 5}, Row{"segre:2,2", 4, 8}, Row{"grassmann:1,5", 8, 14},
                         Row{"hermitian:splitO,3", 16, 26}}) {
    const auto& rep = b.report(row.spec, 2);
    const std::string key = row.spec;
    b.row(key + " n", row.n, rep.ledger.n);
    b.row(key + " r", row.r, rep.ledger.r);
    b.row(key + " s^(1)", static_cast<std::int64_t>(3 * row.n / 2 + 1), rep.ledger.row(1).s);
    b.row(key + " severi", std::string("[1]"), list(rep.bounds.severi));
  }
}

inline void suite_ksevi(SuiteBuilder& b) {
  struct Row {
    std::string spec;
    std::size_t k;
    std::int64_t f;
  };
  std::vector<Row> rows;
  for (std::size_t k : {2U, 3U}) {
    rows.push_back({"veronese:" + std::to_string(k + 1) + ",2", k, 1});
    rows.push_back({"segre:" + std::to_string(k + 1) + "," + std::to_string(k + 1), k, 2});
    rows.push_back({"grassmann:1," + std::to_string(2 * k + 3), k, 4});
  }
  for (const Row& row : rows) {
    const auto& rep = b.report(row.spec, row.k);
    const auto& l = rep.ledger;
    const std::string key = row.spec + " k=" + std::to_string(row.k);
    const auto kk = static_cast<std::int64_t>(row.k), n = static_cast<std::int64_t>(l.n);
    b.row(key + " r - s^(k)", std::int64_t{1}, static_cast<std::int64_t>(l.r) - l.row(row.k).s);
    b.row(key + " 2s^(k) - (k+2)n - 2k", std::int64_t{0}, 2 * l.row(row.k).s - (kk + 2) * n - 2 * kk);
    const auto d = step2_diagnostics(l, row.k);
    b.row(key + " f", row.f, d.f);
    b.row(key + " equality diagnostics", true, d.all());
    b.row(key + " severi contains k", true,
          std::find(rep.bounds.severi.begin(), rep.bounds.severi.end(), row.k) != rep.bounds.severi.end());
  }
}

inline void suite_scrolls(SuiteBuilder& b) {
  const auto& s1 = b.report("scroll:1,10", 4).ledger;
  for (std::size_t k = 1; k <= 4; ++k)
    b.row("scroll:1,10 s^(" + std::to_string(k) + ")", static_cast<std::int64_t>(2 * k + 3), s1.row(k).s);
  const auto& rep = b.report("scroll:1,1,20", 5);
  for (std::size_t k = 1; k <= 5; ++k)
    b.row("scroll:1,1,20 s^(" + std::to_string(k) + ")", static_cast<std::int64_t>(2 * k + 5), rep.ledger.row(k).s);
  std::vector<std::size_t> violated;
  for (std::size_t k = 1; k <= 5; ++k)
    if (const Check* c = rep.bounds.find("extended_linear_normality", k); c && c->verdict == Verdict::violated)
      violated.push_back(k);
  b.row("scroll:1,1,20 extended bound violated at", std::string("[5]"), list(violated));
  const Check* rk = rep.bounds.find("rk_criterion", 5);
  b.row("scroll:1,1,20 R_5", std::string("violated"), rk ? to_string(rk->verdict) : std::string("missing"));
}

inline void suite_speculations(SuiteBuilder& b) {
  struct Row {
    const char* spec;
    std::size_t n, r;
    std::int64_t f1;
  };
  for (const Row& row : {Row{"grassmann:1,4", 6, 9, 4}, Row{"spinor:4", 10, 15, 6}}) {
    const auto& l = b.report(row.spec, 1).ledger;
    const std::string key = row.spec;
    b.row(key + " n", row.n, l.n);
    b.row(key + " r", row.r, l.r);
    b.row(key + " 4n > 2r", true, 4 * l.n > 2 * l.r);
    b.row(key + " s^(1)", static_cast<std::int64_t>(row.r), l.row(1).s);
    b.row(key + " delta_1", std::int64_t{0}, l.row(1).delta);
    b.row(key + " f_1", row.f1, l.row(1).f);
    b.row(key + " k0", std::size_t{1}, l.k0);
  }
}

}  // namespace detail

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"ksevi", "scrolls", "seg34", "severi", "speculations"};
  return names;
}

inline std::vector<SuiteRow> run_suite(const std::string& name, const SuiteOptions& opts = {}) {
  static const std::map<std::string, std::function<void(detail::SuiteBuilder&)>> suites{
      {"ksevi", detail::suite_ksevi},
      {"scrolls", detail::suite_scrolls},
      {"seg34", detail::suite_seg34},
      {"severi", detail::suite_severi},
      {"speculations", detail::suite_speculations},
  };
  const auto it = suites.find(name);
  if (it == suites.end()) throw std::invalid_argument("unknown suite '" + name + "'");
  detail::SuiteBuilder b(opts);
  it->second(b);
  return b.take();
}

}  // namespace secantlab
