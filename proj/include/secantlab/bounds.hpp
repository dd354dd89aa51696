#pragma once

// Verdicts for the inequalities, equality conditions and classification
// predicates that constrain a defect ledger. All comparisons are done in
// integers, doubling where a half would otherwise appear.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "secantlab/terracini.hpp"

namespace secantlab {

enum class Verdict { holds, violated, vacuous, inconclusive };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::violated: return "violated";
    case Verdict::vacuous: return "vacuous";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

struct Check {
  std::string name;
  std::optional<std::size_t> k;
  Verdict verdict = Verdict::vacuous;
  std::string witness;
  std::string note;
};

namespace detail {

inline std::string rel(std::int64_t lhs, std::int64_t rhs) {
  return lhs < rhs ? "<" : lhs == rhs ? "=" : ">";
}

inline std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

inline bool fills(const DefectLedger& l, std::size_t k) { return l.row(k).s == as_int(l.r); }

// Violations of a theorem that assumes smoothness are only meaningful on smooth charts.
inline Check smooth_only(Check c, bool smooth) {
  if (c.verdict == Verdict::violated && !smooth) {
    c.verdict = Verdict::inconclusive;
    c.note = "outside theorem hypotheses (chart not known to be smooth)";
  } else if (c.verdict == Verdict::holds && smooth) {
    c.note = "smoothness assumed";
  }
  return c;
}

}  // namespace detail

/// psi_1 <= psi_2 <= ... <= n, psi_k >= psi_{k-1} + psi_1 and psi_k >= k psi_1.
inline std::vector<Check> check_subadditivity(const DefectLedger& l, bool smooth = true) {
  std::vector<Check> out;
  const std::size_t top = l.kmax();
  if (top < 2) {
    out.push_back({"psi_monotone", std::nullopt, Verdict::vacuous, "", "ledger stops before k = 2"});
    out.push_back({"psi_superadditive", std::nullopt, Verdict::vacuous, "", "ledger stops before k = 2"});
    out.push_back({"psi_linear_bound", std::nullopt, Verdict::vacuous, "", "ledger stops before k = 2"});
    return out;
  }
  {
    Check c{"psi_monotone", std::nullopt, Verdict::holds, "psi =", ""};
    for (std::size_t k = 1; k <= top; ++k) {
      c.witness += " " + std::to_string(l.row(k).psi);
      if (k > 1 && l.row(k).psi < l.row(k - 1).psi) c.verdict = Verdict::violated;
    }
    c.witness += " <= n = " + std::to_string(l.n);
    if (l.row(top).psi > detail::as_int(l.n)) c.verdict = Verdict::violated;
    out.push_back(detail::smooth_only(std::move(c), smooth));
  }
  const std::int64_t psi1 = l.row(1).psi;
  for (std::size_t k = 2; k <= top; ++k) {
    const std::int64_t pk = l.row(k).psi, prev = l.row(k - 1).psi;
    Check c{"psi_superadditive", k, pk >= prev + psi1 ? Verdict::holds : Verdict::violated,
            "psi_" + std::to_string(k) + " = " + std::to_string(pk) + " " + detail::rel(pk, prev + psi1) + " " +
                std::to_string(prev + psi1) + " = psi_" + std::to_string(k - 1) + " + psi_1",
            ""};
    out.push_back(detail::smooth_only(std::move(c), smooth));
  }
  for (std::size_t k = 2; k <= top; ++k) {
    const std::int64_t pk = l.row(k).psi, rhs = detail::as_int(k) * psi1;
    Check c{"psi_linear_bound", k, pk >= rhs ? Verdict::holds : Verdict::violated,
            "psi_" + std::to_string(k) + " = " + std::to_string(pk) + " " + detail::rel(pk, rhs) + " " +
                std::to_string(rhs) + " = " + std::to_string(k) + " psi_1",
            ""};
    out.push_back(detail::smooth_only(std::move(c), smooth));
  }
  return out;
}

/// Scorza: smooth, psi_1 > 0, psi_k = k psi_1 for all k <= k0, k0 = floor(n / psi_1).
inline Check check_scorza(const DefectLedger& l, bool smooth = true) {
  Check c{"scorza", std::nullopt, Verdict::holds, "", ""};
  if (l.kmax() < 1) return {"scorza", std::nullopt, Verdict::vacuous, "", "ledger stops at k = 0"};
  const std::int64_t psi1 = l.row(1).psi;
  c.witness = "psi_1 = " + std::to_string(psi1);
  if (psi1 <= 0) {
    c.verdict = Verdict::violated;
    c.note = "psi_1 = 0";
    return c;
  }
  for (std::size_t k = 2; k <= l.kmax(); ++k) {
    const std::int64_t want = detail::as_int(k) * psi1;
    c.witness += ", psi_" + std::to_string(k) + " = " + std::to_string(l.row(k).psi);
    if (l.row(k).psi != want) c.verdict = Verdict::violated;
  }
  const std::int64_t floor_n = detail::as_int(l.n) / psi1;
  c.witness += "; k0 = " + std::to_string(l.k0) + " " + detail::rel(detail::as_int(l.k0), floor_n) + " " +
               std::to_string(floor_n) + " = floor(n/psi_1)";
  if (detail::as_int(l.k0) != floor_n) c.verdict = Verdict::violated;
  if (c.verdict == Verdict::holds && l.kmax() < l.k0) {
    c.verdict = Verdict::inconclusive;
    c.note = "ledger truncated below k0";
  }
  if (c.verdict == Verdict::holds && !smooth) {
    c.verdict = Verdict::violated;
    c.note = "numerical pattern matches but the chart is singular";
  }
  return c;
}

/// Which of the equality conditions accompanying 2 f_k = k n hold.
struct Step2Diagnostics {
  bool equality = false;
  std::int64_t f = 0;                    // f_1
  std::optional<bool> gamma_psi_linear;  // gamma_i = psi_i = i f for i <= k; empty without gamma
  bool psi_linear = false;               // psi_i = i f
  bool fiber_triangular = false;         // f_i = i(i+1) f / 2
  bool n_multiple = false;               // n = (k+1) f

  [[nodiscard]] bool all() const {
    return equality && psi_linear && fiber_triangular && n_multiple && gamma_psi_linear.value_or(false);
  }
};

inline Step2Diagnostics step2_diagnostics(const DefectLedger& l, std::size_t k) {
  Step2Diagnostics d;
  const auto kk = detail::as_int(k), n = detail::as_int(l.n);
  d.equality = 2 * l.row(k).f == kk * n;
  d.f = l.kmax() >= 1 ? l.row(1).f : 0;
  d.psi_linear = d.fiber_triangular = true;
  bool gamma_known = true, gamma_ok = true;
  for (std::size_t i = 1; i <= k; ++i) {
    const auto ii = detail::as_int(i);
    const LedgerRow& row = l.row(i);
    if (row.psi != ii * d.f) d.psi_linear = false;
    if (2 * row.f != ii * (ii + 1) * d.f) d.fiber_triangular = false;
    if (!row.gamma) gamma_known = false;
    else if (*row.gamma != row.psi || *row.gamma != ii * d.f) gamma_ok = false;
  }
  if (gamma_known) d.gamma_psi_linear = gamma_ok && d.psi_linear;
  d.n_multiple = n == (kk + 1) * d.f;
  return d;
}

/// 2 f_k <= k n for R_k-varieties with S^k(X) a proper subvariety; equality
/// conditions in the note. A violation rules out R_k.
inline Check check_step2(const DefectLedger& l, std::size_t k) {
  Check c{"fiber_defect_bound", k, Verdict::vacuous, "", ""};
  if (k == 0 || k > l.kmax()) return c;
  const std::int64_t lhs = 2 * l.row(k).f, rhs = detail::as_int(k) * detail::as_int(l.n);
  c.witness = "2 f_" + std::to_string(k) + " = " + std::to_string(lhs) + " " + detail::rel(lhs, rhs) + " " +
              std::to_string(rhs) + " = k n";
  if (detail::fills(l, k)) {
    c.note = "S^k(X) fills the ambient space";
    return c;
  }
  c.verdict = lhs <= rhs ? Verdict::holds : Verdict::violated;
  if (lhs < rhs) c.note = "strict";
  if (lhs > rhs) c.note = "X is not an R_" + std::to_string(k) + "-variety";
  if (lhs == rhs) {
    const auto d = step2_diagnostics(l, k);
    auto yn = [](bool b) { return b ? std::string("yes") : std::string("no"); };
    c.note = "equality with f = " + std::to_string(d.f) + "; gamma_i = psi_i = i f: " +
             (d.gamma_psi_linear ? yn(*d.gamma_psi_linear) : std::string("unknown")) +
             "; f_i = i(i+1)f/2: " + yn(d.fiber_triangular) + "; n = (k+1)f: " + yn(d.n_multiple);
  }
  return c;
}

/// 2 s^(k) >= (k+2) n + 2k unless S^k(X) fills; a violation rules out R_k.
inline Check check_extended_ln(const DefectLedger& l, std::size_t k) {
  Check c{"extended_linear_normality", k, Verdict::vacuous, "", ""};
  if (k == 0 || k > l.kmax()) return c;
  const auto kk = detail::as_int(k);
  const std::int64_t lhs = 2 * l.row(k).s, rhs = (kk + 2) * detail::as_int(l.n) + 2 * kk;
  c.witness = "2 s^(" + std::to_string(k) + ") = " + std::to_string(lhs) + " " + detail::rel(lhs, rhs) + " " +
              std::to_string(rhs) + " = (k+2) n + 2k";
  if (detail::fills(l, k)) {
    c.note = "S^k(X) fills the ambient space";
    return c;
  }
  c.verdict = lhs >= rhs ? Verdict::holds : Verdict::violated;
  if (c.verdict == Verdict::violated) c.note = "X is not an R_" + std::to_string(k) + "-variety";
  return c;
}

/// Numerical k-Severi candidates: r > s^(k) and 2 s^(k) = (k+2) n + 2k.
inline std::vector<std::size_t> detect_k_severi(const DefectLedger& l) {
  std::vector<std::size_t> out;
  for (std::size_t k = 1; k <= l.kmax(); ++k) {
    const auto kk = detail::as_int(k);
    if (!detail::fills(l, k) && 2 * l.row(k).s == (kk + 2) * detail::as_int(l.n) + 2 * kk) out.push_back(k);
  }
  return out;
}

/// Sufficient criterion for R_k: gamma_i = psi_i for i = 1..k. Holds means the
/// criterion is met, violated means R_k is refuted because a bound that every
/// R_k-variety satisfies fails, and anything else is inconclusive.
inline Check check_rk_surrogate(const DefectLedger& l, std::size_t k) {
  Check c{"rk_criterion", k, Verdict::vacuous, "", ""};
  if (k == 0 || k > l.kmax()) return c;
  if (detail::fills(l, k)) {
    c.note = "S^k(X) fills the ambient space";
    return c;
  }
  bool met = true, known = true;
  for (std::size_t i = 1; i <= k; ++i) {
    const LedgerRow& row = l.row(i);
    if (i > 1) c.witness += ", ";
    c.witness += "gamma_" + std::to_string(i) + " = ";
    if (row.gamma) {
      c.witness += std::to_string(*row.gamma) + " " + detail::rel(*row.gamma, row.psi) + " " +
                   std::to_string(row.psi);
      if (*row.gamma != row.psi) met = false;
    } else {
      c.witness += "? vs " + std::to_string(row.psi);
      known = false;
    }
    c.witness += " = psi_" + std::to_string(i);
  }
  if (met && known) {
    c.verdict = Verdict::holds;
    c.note = "criterion satisfied; indeterminacy-locus hypothesis not checked";
  } else if (check_extended_ln(l, k).verdict == Verdict::violated) {
    c.verdict = Verdict::violated;
    c.note = "not R_" + std::to_string(k) + ": extended linear-normality bound fails";
  } else if (check_step2(l, k).verdict == Verdict::violated) {
    c.verdict = Verdict::violated;
    c.note = "not R_" + std::to_string(k) + ": fiber defect bound fails";
  } else {
    c.verdict = Verdict::inconclusive;
    c.note = known ? "gamma_i > psi_i for some i; the criterion is only sufficient" : "contact loci not computed";
  }
  return c;
}

struct BoundReport {
  std::vector<Check> checks;
  std::vector<std::size_t> severi;

  [[nodiscard]] const Check* find(const std::string& name, std::optional<std::size_t> k = std::nullopt) const {
    for (const auto& c : checks)
      if (c.name == name && c.k == k) return &c;
    return nullptr;
  }
};

inline BoundReport evaluate_bounds(const DefectLedger& l, bool smooth = true) {
  BoundReport out;
  out.checks = check_subadditivity(l, smooth);
  out.checks.push_back(check_scorza(l, smooth));
  for (std::size_t k = 1; k <= l.kmax(); ++k) out.checks.push_back(check_step2(l, k));
  for (std::size_t k = 1; k <= l.kmax(); ++k) out.checks.push_back(check_extended_ln(l, k));
  for (std::size_t k = 1; k <= l.kmax(); ++k) out.checks.push_back(check_rk_surrogate(l, k));
  out.severi = detect_k_severi(l);
  return out;
}

}  // namespace secantlab
