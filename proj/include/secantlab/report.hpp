#pragma once

// Full analysis of one variety spec and its two renderings: canonical JSON
// (stable key order, byte-identical for identical inputs) and a text table.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "secantlab/bounds.hpp"
#include "secantlab/spec_parser.hpp"
#include "secantlab/terracini.hpp"

namespace secantlab {

struct AnalyzeOptions {
  std::optional<std::size_t> kmax;
  std::uint64_t seed = 0;
  std::size_t trials = kDefaultTrials;
  bool exact = false;
  bool gamma = true;
};

struct AnalysisReport {
  std::string spec;
  std::string mode;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  bool smooth = true;
  DefectLedger ledger;
  BoundReport bounds;
  std::vector<std::string> notes;
  double seconds = 0;  // wall time; kept out of the JSON
};

namespace detail {

// The quadratic Veronese of P^{k+1} is a k-Severi candidate; its ambient
// dimension is C(k+3,2) - 1, which differs from k(k+3)/2.
inline std::vector<std::string> veronese_notes(const VarietySpec& spec, const std::vector<std::size_t>& severi) {
  std::vector<std::string> out;
  const auto* v = std::get_if<Veronese>(&spec.family);
  if (!v || v->d != 2 || !spec.modifiers.empty()) return out;
  for (std::size_t k : severi)
    if (v->n == k + 1)
      out.push_back("k = " + std::to_string(k) + ": quadratic Veronese of P^" + std::to_string(k + 1) +
                    " sits in P^" + std::to_string(binomial(k + 3, 2) - 1) + ", not P^" +
                    std::to_string(k * (k + 3) / 2));
  return out;
}

template <ExactField F>
AnalysisReport analyze_in(const VarietySpec& spec, const AnalyzeOptions& opts) {
  AnalysisReport out;
  out.spec = to_string(spec);
  out.mode = mode_name<F>();
  out.seed = opts.seed;
  out.trials = opts.trials;
  out.smooth = assumed_smooth(spec);
  out.ledger = defect_ledger<F>(build_labeled(spec), LedgerOptions{opts.kmax, opts.trials, opts.seed, opts.gamma});
  out.bounds = evaluate_bounds(out.ledger, out.smooth);
  out.notes = veronese_notes(spec, out.bounds.severi);
  return out;
}

}  // namespace detail

inline AnalysisReport analyze(const VarietySpec& spec, const AnalyzeOptions& opts = {}) {
  if (opts.kmax && *opts.kmax < 1) throw std::invalid_argument("kmax must be at least 1");
  const auto start = std::chrono::steady_clock::now();
  AnalysisReport out = opts.exact ? detail::analyze_in<Rational>(spec, opts) : detail::analyze_in<Fp0>(spec, opts);
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

inline nlohmann::ordered_json to_json(const AnalysisReport& rep) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["spec"] = rep.spec;
  j["n"] = rep.ledger.n;
  j["r"] = rep.ledger.r;
  j["mode"] = rep.mode;
  j["seed"] = rep.seed;
  j["trials"] = rep.trials;
  j["kmax"] = rep.ledger.kmax();
  j["smooth_assumed"] = rep.smooth;
  ordered_json rows = ordered_json::array();
  for (const auto& row : rep.ledger.rows) {
    ordered_json o;
    o["k"] = row.k;
    o["s"] = row.s;
    o["e"] = row.e;
    o["delta"] = row.delta;
    o["f"] = row.f;
    o["psi"] = row.psi;
    if (row.gamma) o["gamma"] = *row.gamma;
    if (row.t) o["t"] = *row.t;
    rows.push_back(std::move(o));
  }
  j["ledger"] = std::move(rows);
  j["k0"] = rep.ledger.k0;
  ordered_json checks = ordered_json::array();
  for (const auto& c : rep.bounds.checks) {
    ordered_json o;
    o["name"] = c.name;
    o["k"] = c.k ? ordered_json(*c.k) : ordered_json(nullptr);
    o["verdict"] = to_string(c.verdict);
    o["witness"] = c.witness;
    o["note"] = c.note;
    checks.push_back(std::move(o));
  }
  j["checks"] = std::move(checks);
  j["severi"] = rep.bounds.severi;
  j["notes"] = rep.notes;
  return j;
}

inline std::string render_json(const AnalysisReport& rep) { return to_json(rep).dump(2) + "\n"; }

inline std::string render_table(const AnalysisReport& rep) {
  std::ostringstream os;
  const auto& l = rep.ledger;
  os << rep.spec << "  n=" << l.n << " r=" << l.r << " k0=" << l.k0 << "  mode=" << rep.mode << " seed=" << rep.seed
     << " trials=" << rep.trials << (rep.smooth ? "" : "  (not assumed smooth)") << "\n\n";
  auto opt = [](const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string("-"); };
  os << std::setw(3) << "k" << std::setw(6) << "s" << std::setw(6) << "e" << std::setw(7) << "delta" << std::setw(6)
     << "f" << std::setw(6) << "psi" << std::setw(7) << "gamma" << std::setw(6) << "t" << "\n";
  for (const auto& row : l.rows)
    os << std::setw(3) << row.k << std::setw(6) << row.s << std::setw(6) << row.e << std::setw(7) << row.delta
       << std::setw(6) << row.f << std::setw(6) << row.psi << std::setw(7) << opt(row.gamma) << std::setw(6)
       << opt(row.t) << "\n";
  os << "\n";
  std::size_t width = 0;
  for (const auto& c : rep.bounds.checks) width = std::max(width, c.name.size());
  for (const auto& c : rep.bounds.checks) {
    os << std::left << std::setw(static_cast<int>(width)) << c.name << std::right << "  k="
       << (c.k ? std::to_string(*c.k) : std::string("-")) << "  " << std::left << std::setw(13) << to_string(c.verdict)
       << std::right << c.witness;
    if (!c.note.empty()) os << "  [" << c.note << "]";
    os << "\n";
  }
  os << "\nk-Severi candidates:";
  if (rep.bounds.severi.empty()) os << " none";
  for (auto k : rep.bounds.severi) os << " " << k;
  os << "\n";
  for (const auto& note : rep.notes) os << "note: " << note << "\n";
  os << std::fixed << std::setprecision(3) << "time: " << rep.seconds << " s\n";
  return os.str();
}

}  // namespace secantlab
