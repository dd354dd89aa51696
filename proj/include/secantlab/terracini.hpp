#pragma once

// Secant dimensions by Terracini's lemma, the defect ledger, tangential
// projections, Gauss defects and tangential contact-locus dimensions.
//
// Every quantity is measured at random points. Ranks are lower semicontinuous,
// so the secant dimension is the maximum over trials; dimensions read off from
// Jacobian ranks at a point (Gauss fibres, contact loci) are upper
// semicontinuous and take the minimum over trials that attain the generic
// stack rank.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "secantlab/field.hpp"
#include "secantlab/matrix.hpp"
#include "secantlab/param_map.hpp"

namespace secantlab {

class AnalysisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A quantity requested outside the regime where it is defined, e.g. a contact
/// locus when S^k(X) already fills the ambient space.
class UndefinedError : public AnalysisError {
 public:
  using AnalysisError::AnalysisError;
};

inline constexpr std::size_t kDefaultTrials = 3;
inline constexpr int kMaxResamples = 10;

namespace detail {

enum class Purpose : std::uint64_t { secant = 1, immersion, projection, gauss, contact };

inline std::mt19937_64 make_rng(std::uint64_t seed, Purpose purpose, std::uint64_t k, std::uint64_t trial) {
  std::seed_seq seq{seed & 0xffffffffU, seed >> 32U, static_cast<std::uint64_t>(purpose), k, trial};
  return std::mt19937_64(seq);
}

/// Parameters whose image is not the zero vector; nullopt after kMaxResamples failures.
template <ExactField F>
std::optional<std::vector<F>> sample_params(const FieldChart<F>& chart, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < kMaxResamples; ++attempt) {
    std::vector<F> t(chart.n());
    for (auto& v : t) v = random_scalar<F>(rng);
    const auto p = chart.point(t);
    if (std::any_of(p.begin(), p.end(), [](const F& x) { return !is_zero(x); })) return t;
  }
  return std::nullopt;
}

template <ExactField F>
struct StackSample {
  std::vector<std::vector<F>> params;
  Matrix<F> stack;
  std::size_t rank = 0;
};

// Tangent frames at `count` independent points stacked on top of each other.
template <ExactField F>
std::optional<StackSample<F>> sample_stack(const FieldChart<F>& chart, std::size_t count, std::mt19937_64& rng) {
  StackSample<F> out;
  std::vector<Matrix<F>> frames;
  for (std::size_t i = 0; i < count; ++i) {
    auto t = sample_params(chart, rng);
    if (!t) return std::nullopt;
    frames.push_back(chart.frame(*t));
    out.params.push_back(std::move(*t));
  }
  out.stack = vstack<F>(std::span<const Matrix<F>>(frames));
  out.rank = rank(out.stack);
  return out;
}

/// Linearization at t0 of the containment system N phi(t) = 0, N d phi/dt_j(t) = 0,
/// one row per (form, equation) and one column per parameter.
template <ExactField F>
Matrix<F> containment_jacobian(const FieldChart<F>& chart, std::span<const F> t0, const Matrix<F>& forms) {
  const std::size_t n = chart.n();
  const std::size_t width = chart.r() + 1;
  const Matrix<F> fr = chart.frame(t0);
  const auto hess = chart.hessians(t0);
  Matrix<F> jac(forms.rows() * (n + 1), n);
  for (std::size_t a = 0; a < forms.rows(); ++a) {
    const auto form = forms.row(a);
    for (std::size_t c = 0; c < width; ++c) {
      if (is_zero(form[c])) continue;
      for (std::size_t i = 0; i < n; ++i) {
        jac(a * (n + 1), i) += form[c] * fr(i + 1, c);
        for (std::size_t j = 0; j < n; ++j) jac(a * (n + 1) + 1 + j, i) += form[c] * hess[c * n * n + i * n + j];
      }
    }
  }
  return jac;
}

// Tangent-space dimension at t0 of the locus of points whose tangent space lies
// in the span annihilated by `forms`, measured in the image: frame rank - 1
// minus the rank of the containment Jacobian. The subtraction accounts for
// charts that are not immersions (join charts), whose fibres add to the
// parameter-space locus.
template <ExactField F>
std::size_t contact_dimension(const FieldChart<F>& chart, std::span<const F> t0, const Matrix<F>& forms) {
  const std::size_t image_dim = rank(chart.frame(t0)) - 1;
  const std::size_t jr = rank(containment_jacobian(chart, t0, forms));
  if (jr > image_dim) throw AnalysisError("containment system has larger rank than the image dimension");
  return image_dim - jr;
}

// Among samples of maximal rank, the smallest measured value: ranks are lower
// and fibre dimensions upper semicontinuous.
struct GenericMin {
  std::size_t rank = 0;
  std::optional<std::size_t> value;

  template <class Measure>
  void offer(std::size_t sample_rank, Measure&& measure) {
    if (value && sample_rank < rank) return;
    const std::size_t v = measure();
    if (!value || sample_rank > rank || v < *value) value = v;
    rank = sample_rank;
  }
};

}  // namespace detail

/// s^(k)(X): one less than the largest rank, over `trials` draws, of the
/// stacked tangent frames at k+1 random points.
template <ExactField F>
std::size_t secant_dim(const FieldChart<F>& chart, std::size_t k, std::size_t trials = kDefaultTrials,
                       std::uint64_t seed = 0) {
  std::size_t best = 0;
  bool any = false;
  for (std::size_t trial = 0; trial < std::max<std::size_t>(trials, 1); ++trial) {
    auto rng = detail::make_rng(seed, detail::Purpose::secant, k, trial);
    const auto sample = detail::sample_stack(chart, k + 1, rng);
    if (!sample) continue;
    any = true;
    best = std::max(best, sample->rank);
  }
  if (!any) throw AnalysisError("every sample of chart '" + chart.label() + "' was degenerate");
  return best - 1;
}

template <ExactField F>
std::size_t secant_dim(const ParamMap& x, std::size_t k, std::size_t trials = kDefaultTrials, std::uint64_t seed = 0) {
  return secant_dim(FieldChart<F>(x), k, trials, seed);
}

/// Throws AnalysisError unless the frame has full rank n+1 at some random sample.
template <ExactField F>
void check_immersion(const FieldChart<F>& chart, std::uint64_t seed = 0) {
  auto rng = detail::make_rng(seed, detail::Purpose::immersion, 0, 0);
  for (int attempt = 0; attempt < kMaxResamples; ++attempt) {
    const auto t = detail::sample_params(chart, rng);
    if (t && rank(chart.frame(*t)) == chart.n() + 1) return;
  }
  throw AnalysisError("chart '" + chart.label() + "' is not an immersion at general points");
}

/// Image of X under projection from the span of the tangent spaces at k random
/// points. The image may be a point or empty-dimensional when tau_k contracts X.
template <ExactField F>
FieldChart<F> tangential_projection(const FieldChart<F>& chart, std::size_t k, std::uint64_t seed = 0,
                                    std::size_t trials = kDefaultTrials) {
  if (k == 0) return chart;
  std::optional<detail::StackSample<F>> best;
  for (std::size_t trial = 0; trial < std::max<std::size_t>(trials, 1); ++trial) {
    auto rng = detail::make_rng(seed, detail::Purpose::projection, k, trial);
    auto sample = detail::sample_stack(chart, k, rng);
    if (sample && (!best || sample->rank > best->rank)) best = std::move(sample);
  }
  if (!best) throw AnalysisError("every sample of chart '" + chart.label() + "' was degenerate");
  const Matrix<F> forms = annihilator(best->stack);
  if (forms.rows() == 0) throw UndefinedError("projection centre fills the ambient space");
  return chart.compose(forms);
}

/// Dimension of the image of a chart: max frame rank - 1 over trials.
template <ExactField F>
std::size_t image_dim(const FieldChart<F>& chart, std::size_t trials = kDefaultTrials, std::uint64_t seed = 0) {
  return secant_dim(chart, 0, trials, seed);
}

/// t(X): dimension of the general Gauss fibre, from the tangent space at a
/// random point of the locus where the tangent space stays fixed.
template <ExactField F>
std::size_t gauss_defect(const FieldChart<F>& chart, std::uint64_t seed = 0, std::size_t trials = kDefaultTrials) {
  detail::GenericMin pick;
  for (std::size_t trial = 0; trial < std::max<std::size_t>(trials, 1); ++trial) {
    auto rng = detail::make_rng(seed, detail::Purpose::gauss, 0, trial);
    const auto t = detail::sample_params(chart, rng);
    if (!t) continue;
    const Matrix<F> fr = chart.frame(*t);
    pick.offer(rank(fr), [&] { return detail::contact_dimension<F>(chart, *t, annihilator(fr)); });
  }
  if (!pick.value) throw AnalysisError("every sample of chart '" + chart.label() + "' was degenerate");
  return *pick.value;
}

/// gamma_k(X): dimension of the tangential k-contact locus at the first of k+1
/// random points. Computed from the tangent space of the contact scheme, so
/// it is an upper bound that is exact when that scheme is reduced there.
template <ExactField F>
std::size_t contact_gamma(const FieldChart<F>& chart, std::size_t k, std::uint64_t seed = 0,
                          std::size_t trials = kDefaultTrials) {
  detail::GenericMin pick;
  bool filled = false;
  for (std::size_t trial = 0; trial < std::max<std::size_t>(trials, 1); ++trial) {
    auto rng = detail::make_rng(seed, detail::Purpose::contact, k, trial);
    const auto sample = detail::sample_stack(chart, k + 1, rng);
    if (!sample) continue;
    if (sample->rank == chart.r() + 1) {
      filled = true;
      break;
    }
    pick.offer(sample->rank, [&] {
      return detail::contact_dimension<F>(chart, sample->params.front(), annihilator(sample->stack));
    });
  }
  if (filled) throw UndefinedError("contact locus undefined: S^k(X) fills the ambient space");
  if (!pick.value) throw AnalysisError("every sample of chart '" + chart.label() + "' was degenerate");
  return *pick.value;
}

/// t_k(X) = t(S^k(X)), measured directly on the join chart of k+1 copies of X.
template <ExactField F>
std::size_t secant_gauss_defect(const ParamMap& x, std::size_t k, std::uint64_t seed = 0,
                                std::size_t trials = kDefaultTrials) {
  if (secant_dim<F>(x, k, trials, seed) == x.r())
    throw UndefinedError("secant Gauss defect undefined: S^k(X) fills the ambient space");
  const FieldChart<F> join(join_map(x, k + 1));
  return gauss_defect(join, seed ^ 0x6a6f696eULL, trials);
}

struct LedgerRow {
  std::size_t k = 0;
  std::int64_t s = 0;      // s^(k)
  std::int64_t e = 0;      // expected dimension min{r, (k+1)n + k}
  std::int64_t delta = 0;  // secant defect e - s
  std::int64_t f = 0;      // fibre defect (k+1)n + k - s
  std::int64_t psi = 0;    // projection defect f_k - f_{k-1}
  std::optional<std::int64_t> gamma;
  std::optional<std::int64_t> t;  // k gamma + k + gamma - f

  friend bool operator==(const LedgerRow&, const LedgerRow&) = default;
};

struct DefectLedger {
  std::string label;
  std::size_t n = 0;
  std::size_t r = 0;
  std::size_t k0 = 0;
  std::vector<LedgerRow> rows;               // k = 0..min(kmax, k0)
  std::vector<std::size_t> secant_dims;      // s^(k) for k = 0..k0

  [[nodiscard]] const LedgerRow& row(std::size_t k) const { return rows.at(k); }
  [[nodiscard]] std::size_t kmax() const { return rows.empty() ? 0 : rows.back().k; }

  friend bool operator==(const DefectLedger& a, const DefectLedger& b) {
    return a.n == b.n && a.r == b.r && a.k0 == b.k0 && a.rows == b.rows && a.secant_dims == b.secant_dims;
  }
};

struct LedgerOptions {
  std::optional<std::size_t> kmax;  // default: min(k0, 6)
  std::size_t trials = kDefaultTrials;
  std::uint64_t seed = 0;
  bool gamma = true;
};

inline constexpr std::size_t kDefaultKmaxCap = 6;

inline LedgerRow ledger_row(std::size_t n, std::size_t r, std::size_t k, std::size_t s, std::int64_t prev_f) {
  LedgerRow row;
  const auto nn = static_cast<std::int64_t>(n), kk = static_cast<std::int64_t>(k);
  row.k = k;
  row.s = static_cast<std::int64_t>(s);
  row.e = std::min<std::int64_t>(static_cast<std::int64_t>(r), (kk + 1) * nn + kk);
  row.delta = row.e - row.s;
  row.f = (kk + 1) * nn + kk - row.s;
  row.psi = k == 0 ? 0 : row.f - prev_f;
  return row;
}

/// Full defect ledger through min(kmax, k0). k0 is always found by extending k
/// until the secant variety fills the ambient space.
template <ExactField F>
DefectLedger defect_ledger(const ParamMap& x, const LedgerOptions& opts = {}) {
  const FieldChart<F> chart(x);
  check_immersion(chart, opts.seed);

  DefectLedger ledger;
  ledger.label = x.label();
  ledger.n = x.n();
  ledger.r = x.r();
  for (std::size_t k = 0;; ++k) {
    const std::size_t s = secant_dim(chart, k, opts.trials, opts.seed);
    if (!ledger.secant_dims.empty() && s <= ledger.secant_dims.back())
      throw AnalysisError("secant dimension stalled at " + std::to_string(s) + " below the ambient P^" +
                          std::to_string(x.r()) + "; the chart is degenerate");
    ledger.secant_dims.push_back(s);
    if (s == x.r()) {
      ledger.k0 = k;
      break;
    }
  }

  const std::size_t kmax = std::min(opts.kmax.value_or(std::min(ledger.k0, kDefaultKmaxCap)), ledger.k0);
  std::int64_t prev_f = 0;
  for (std::size_t k = 0; k <= kmax; ++k) {
    LedgerRow row = ledger_row(ledger.n, ledger.r, k, ledger.secant_dims[k], prev_f);
    prev_f = row.f;
    if (opts.gamma && ledger.secant_dims[k] < ledger.r) {
      const auto g = static_cast<std::int64_t>(contact_gamma(chart, k, opts.seed, opts.trials));
      const auto kk = static_cast<std::int64_t>(k);
      row.gamma = g;
      row.t = kk * g + kk + g - row.f;
    }
    ledger.rows.push_back(row);
  }
  return ledger;
}

}  // namespace secantlab
