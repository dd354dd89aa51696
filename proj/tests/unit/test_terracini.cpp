#include <gtest/gtest.h>

#include <random>

#include "secantlab/spec_parser.hpp"
#include "secantlab/terracini.hpp"

using namespace secantlab;

namespace {

// Rank-locus oracles, independent of the chart constructions.

// symmetric (m+1) x (m+1) matrices of rank <= k+1
std::size_t symmetric_oracle(std::size_t m, std::size_t k) {
  const std::size_t r = binomial(m + 2, 2) - 1;
  if (k >= m) return r;
  return std::min(r, (k + 1) * (m + 1) - binomial(k + 1, 2) - 1);
}

// (a+1) x (b+1) matrices of rank <= k+1
std::size_t generic_oracle(std::size_t a, std::size_t b, std::size_t k) {
  const std::size_t r = (a + 1) * (b + 1) - 1;
  if (k + 1 >= std::min(a, b) + 1) return r;
  return std::min(r, (k + 1) * (a + b + 1 - k) - 1);
}

// skew forms x_0^y_0 + ... + x_k^y_k on F^{n+1}: Jacobian rank of the affine map, minus 1
std::size_t skew_oracle(std::size_t n, std::size_t k, std::uint64_t seed) {
  const std::size_t dim = n + 1;
  const auto pairs = combinations(dim, 2);
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Fp0>> x(k + 1), y(k + 1);
  for (std::size_t i = 0; i <= k; ++i)
    for (std::size_t c = 0; c < dim; ++c) {
      x[i].push_back(random_scalar<Fp0>(rng));
      y[i].push_back(random_scalar<Fp0>(rng));
    }
  // columns: Plucker pairs (a, b); rows: d/dx_i[c], then d/dy_i[c]
  Matrix<Fp0> jac(2 * (k + 1) * dim, pairs.size());
  for (std::size_t i = 0; i <= k; ++i)
    for (std::size_t c = 0; c < dim; ++c)
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        const std::size_t a = pairs[p][0], b = pairs[p][1];
        Fp0 dx, dy;
        if (a == c) dx += y[i][b], dy -= x[i][b];
        if (b == c) dx -= y[i][a], dy += x[i][a];
        jac((2 * i) * dim + c, p) = dx;
        jac((2 * i + 1) * dim + c, p) = dy;
      }
  return rank(jac) - 1;
}

// points on the moment curve in P^d span min(d, 2k+1) after taking tangents
std::size_t hankel_oracle(std::size_t d, std::size_t k) { return std::min(d, 2 * k + 1); }

ParamMap non_immersion() {
  // (1, a+b, (a+b)^2): a curve written with two parameters
  const auto a = MultiPoly::variable(2, 0), b = MultiPoly::variable(2, 1);
  return ParamMap(2, {MultiPoly::constant(2, Rational(1)), a + b, (a + b) * (a + b)}, "squashed");
}

}  // namespace

TEST(SecantDim, Examples) {
  EXPECT_EQ(secant_dim<Fp0>(build("segre:3,4"), 1), 13U);
  EXPECT_EQ(secant_dim<Fp0>(build("segre:3,4"), 2), 17U);
  EXPECT_EQ(secant_dim<Fp0>(build("veronese:2,2"), 1), 4U);
  EXPECT_EQ(secant_dim<Fp0>(build("grassmann:1,5"), 1), 13U);
  EXPECT_EQ(secant_dim<Fp0>(build("segre:1,1"), 1), 3U);
  EXPECT_EQ(secant_dim<Rational>(build("veronese:2,2"), 1), 4U);
}

TEST(SecantDim, SymmetricOracle) {
  for (std::size_t m = 1; m <= 4; ++m) {
    const auto x = build("veronese:" + std::to_string(m) + ",2");
    for (std::size_t k = 0; k <= 3; ++k) EXPECT_EQ(secant_dim<Fp0>(x, k), symmetric_oracle(m, k)) << m << " " << k;
  }
}

TEST(SecantDim, GenericMatrixOracle) {
  for (auto [a, b] : {std::pair<std::size_t, std::size_t>{1, 2}, {2, 2}, {2, 3}, {3, 3}, {3, 4}, {2, 5}}) {
    const auto x = build("segre:" + std::to_string(a) + "," + std::to_string(b));
    for (std::size_t k = 0; k <= 3; ++k)
      EXPECT_EQ(secant_dim<Fp0>(x, k), generic_oracle(a, b, k)) << a << "," << b << " k=" << k;
  }
}

TEST(SecantDim, SkewMatrixOracle) {
  for (std::size_t n = 3; n <= 7; ++n) {
    const auto x = build("grassmann:1," + std::to_string(n));
    for (std::size_t k = 0; k <= 2; ++k) {
      const std::size_t oracle = std::min(x.r(), skew_oracle(n, k, 31 + n + k));
      EXPECT_EQ(secant_dim<Fp0>(x, k), oracle) << "G(1," << n << ") k=" << k;
    }
  }
  // G(1,7): S^2 is a hypersurface in P^27
  EXPECT_EQ(skew_oracle(7, 2, 5), 26U);
}

TEST(SecantDim, HankelOracle) {
  for (std::size_t d = 2; d <= 9; ++d) {
    const auto x = build("veronese:1," + std::to_string(d));
    for (std::size_t k = 0; k <= 4; ++k) EXPECT_EQ(secant_dim<Fp0>(x, k), hankel_oracle(d, k)) << d << " " << k;
  }
}

TEST(SecantDim, TerraciniAgreesWithJoinRank) {
  for (const char* spec : {"veronese:2,2", "veronese:3,2", "segre:1,2", "segre:2,2", "scroll:1,3", "scroll:1,1,2",
                           "grassmann:1,4", "spinor:3", "veronese:1,3|cone:1"}) {
    const auto x = build(spec);
    for (std::size_t k = 0; k <= 3; ++k)
      EXPECT_EQ(secant_dim<Fp0>(x, k), secant_dim<Fp0>(join_map(x, k + 1), 0)) << spec << " k=" << k;
  }
}

TEST(SecantDim, IsDeterministicForAFixedSeed) {
  const auto x = build("scroll:1,1,3");
  for (std::uint64_t seed : {0ULL, 7ULL, 123456789ULL})
    EXPECT_EQ(secant_dim<Fp0>(x, 2, 3, seed), secant_dim<Fp0>(x, 2, 3, seed));
}

TEST(CheckImmersion, RejectsDegenerateCharts) {
  EXPECT_THROW(check_immersion(FieldChart<Fp0>(non_immersion())), AnalysisError);
  EXPECT_THROW(defect_ledger<Fp0>(non_immersion()), AnalysisError);
  EXPECT_NO_THROW(check_immersion(FieldChart<Fp0>(build("veronese:2,2"))));
}

TEST(TangentialProjection, ImageDimensionIsNMinusPsi) {
  // Seg(3,4): psi = 0, 2, 4, 6 while s < r
  const FieldChart<Fp0> x(build("segre:3,4"));
  EXPECT_EQ(image_dim(tangential_projection(x, 0)), 7U);
  EXPECT_EQ(image_dim(tangential_projection(x, 1)), 5U);
  EXPECT_EQ(image_dim(tangential_projection(x, 2)), 3U);
  EXPECT_EQ(image_dim(tangential_projection(x, 3)), 1U);
}

TEST(TangentialProjection, UndefinedWhenTheCentreFills) {
  const FieldChart<Fp0> x(build("veronese:1,3"));
  EXPECT_THROW(tangential_projection(x, 2), UndefinedError);
}

TEST(GaussDefect, SmoothChartsAndCones) {
  for (const char* spec : {"veronese:2,2", "segre:2,3", "grassmann:1,4", "scroll:1,2", "spinor:4"})
    EXPECT_EQ(gauss_defect(FieldChart<Fp0>(build(spec))), 0U) << spec;
  EXPECT_EQ(gauss_defect(FieldChart<Fp0>(build("veronese:1,3|cone:1"))), 1U);
  EXPECT_EQ(gauss_defect(FieldChart<Fp0>(build("veronese:1,3|cone:2"))), 2U);
  EXPECT_EQ(gauss_defect(FieldChart<Rational>(build("veronese:1,3|cone:1"))), 1U);
}

TEST(ContactGamma, Examples) {
  const FieldChart<Fp0> seg(build("segre:3,4"));
  EXPECT_EQ(contact_gamma(seg, 1), 2U);
  EXPECT_EQ(contact_gamma(seg, 2), 4U);
  const FieldChart<Fp0> ver(build("veronese:3,2"));
  EXPECT_EQ(contact_gamma(ver, 1), 1U);
  EXPECT_EQ(contact_gamma(ver, 2), 2U);
  EXPECT_EQ(contact_gamma(FieldChart<Fp0>(build("grassmann:1,5")), 1), 4U);
}

TEST(ContactGamma, UndefinedWhenTheSecantFills) {
  EXPECT_THROW(contact_gamma(FieldChart<Fp0>(build("veronese:2,2")), 2), UndefinedError);
  EXPECT_THROW(secant_gauss_defect<Fp0>(build("segre:1,1"), 1), UndefinedError);
}

TEST(SecantGaussDefect, MatchesTheContactFormula) {
  // k gamma + k + gamma - f
  EXPECT_EQ(secant_gauss_defect<Fp0>(build("segre:3,4"), 1), 1U * 2 + 1 + 2 - 2);
  EXPECT_EQ(secant_gauss_defect<Fp0>(build("segre:3,4"), 2), 2U * 4 + 2 + 4 - 6);
  EXPECT_EQ(secant_gauss_defect<Fp0>(build("veronese:2,2"), 1), 2U);
}

TEST(DefectLedger, SegreThreeFour) {
  const auto l = defect_ledger<Fp0>(build("segre:3,4"));
  EXPECT_EQ(l.n, 7U);
  EXPECT_EQ(l.r, 19U);
  EXPECT_EQ(l.k0, 3U);
  EXPECT_EQ(l.secant_dims, (std::vector<std::size_t>{7, 13, 17, 19}));
  ASSERT_EQ(l.kmax(), 3U);
  EXPECT_EQ(l.row(1).f, 2);
  EXPECT_EQ(l.row(1).psi, 2);
  EXPECT_EQ(l.row(1).gamma, 2);
  EXPECT_EQ(l.row(1).t, 3);
  EXPECT_EQ(l.row(2).f, 6);
  EXPECT_EQ(l.row(2).psi, 4);
  EXPECT_EQ(l.row(2).gamma, 4);
  EXPECT_EQ(l.row(2).delta, 2);
  EXPECT_FALSE(l.row(3).gamma.has_value());
}

TEST(DefectLedger, ScrollOneTen) {
  const auto l = defect_ledger<Fp0>(build("scroll:1,10"));
  EXPECT_EQ(l.k0, 5U);
  for (std::size_t k = 1; k <= 4; ++k) EXPECT_EQ(l.row(k).s, static_cast<std::int64_t>(2 * k + 3)) << k;
  EXPECT_EQ(l.row(5).s, 12);
  EXPECT_EQ(l.row(2).delta, 1);
  EXPECT_EQ(l.row(3).delta, 2);
  // e_4 = min(12, 14) caps the expected dimension
  EXPECT_EQ(l.row(4).e, 12);
  EXPECT_EQ(l.row(4).delta, 1);
  EXPECT_EQ(l.row(4).f, 3);
}

TEST(DefectLedger, KmaxTruncatesRowsButNotK0) {
  LedgerOptions opts;
  opts.kmax = 1;
  const auto l = defect_ledger<Fp0>(build("segre:3,4"), opts);
  EXPECT_EQ(l.kmax(), 1U);
  EXPECT_EQ(l.k0, 3U);
  opts.gamma = false;
  EXPECT_FALSE(defect_ledger<Fp0>(build("segre:3,4"), opts).row(1).gamma.has_value());
}

TEST(DefectLedger, DefaultCapIsSix) {
  const auto l = defect_ledger<Fp0>(build("scroll:1,1,20"));
  EXPECT_EQ(l.k0, 10U);
  EXPECT_EQ(l.kmax(), kDefaultKmaxCap);
}

TEST(DefectLedger, RationalAndPrimeAgree) {
  for (const char* spec : {"segre:2,3", "veronese:3,2", "scroll:1,4", "veronese:1,3|cone:1"})
    EXPECT_EQ(defect_ledger<Rational>(build(spec)), defect_ledger<Fp0>(build(spec))) << spec;
}

TEST(DefectLedger, IdenticalSeedsGiveIdenticalLedgers) {
  LedgerOptions opts;
  opts.seed = 99;
  const auto x = build("grassmann:1,5");
  EXPECT_EQ(defect_ledger<Fp0>(x, opts), defect_ledger<Fp0>(x, opts));
  EXPECT_EQ(defect_ledger<Fp1>(x, opts), defect_ledger<Fp0>(x, opts));
}

// Properties over a small battery.

class LedgerProperties : public ::testing::TestWithParam<const char*> {};

TEST_P(LedgerProperties, Hold) {
  const auto x = build(GetParam());
  LedgerOptions opts;
  opts.kmax = 3;
  const auto l = defect_ledger<Fp0>(x, opts);
  const FieldChart<Fp0> chart(x);

  std::int64_t sum = 0;
  for (std::size_t k = 1; k <= l.kmax(); ++k) {
    const auto& row = l.row(k);
    sum += row.psi;
    EXPECT_EQ(row.f, sum) << "f_k = sum psi_i at k=" << k;
    EXPECT_EQ(row.delta, row.e - row.s);
    if (row.s < static_cast<std::int64_t>(l.r)) {
      EXPECT_EQ(image_dim(tangential_projection(chart, k)), l.n - static_cast<std::size_t>(row.psi)) << "k=" << k;
      ASSERT_TRUE(row.gamma.has_value());
      EXPECT_GE(*row.gamma, row.psi) << "k=" << k;
      EXPECT_EQ(static_cast<std::int64_t>(secant_gauss_defect<Fp0>(x, k)), *row.t) << "k=" << k;
    }
  }
  // strictly increasing to r, then constant
  for (std::size_t k = 1; k < l.secant_dims.size(); ++k) EXPECT_GT(l.secant_dims[k], l.secant_dims[k - 1]);
  EXPECT_EQ(l.secant_dims.back(), l.r);
}

INSTANTIATE_TEST_SUITE_P(Battery, LedgerProperties,
                         ::testing::Values("veronese:1,3", "veronese:2,2", "veronese:2,3", "veronese:3,2",
                                           "segre:1,2", "segre:2,2", "segre:2,3", "segre:1,1,1", "grassmann:1,4",
                                           "grassmann:1,5", "scroll:1,10", "scroll:2,3", "scroll:1,2,2", "spinor:4",
                                           "hermitian:splitC,3", "veronese:1,3|cone:1"));

TEST(Projection, GenericProjectionKeepsFiberDefects) {
  for (const char* spec : {"segre:3,4", "veronese:3,2", "scroll:1,10", "grassmann:1,5"}) {
    const auto base = defect_ledger<Fp0>(build(spec));
    const auto proj = defect_ledger<Fp0>(build(std::string(spec) + "|project:1"));
    for (std::size_t k = 1; k <= std::min(base.kmax(), proj.kmax()); ++k)
      if (proj.row(k).s < static_cast<std::int64_t>(proj.r)) {
        EXPECT_EQ(proj.row(k).f, base.row(k).f) << spec << k;
      }
  }
}
