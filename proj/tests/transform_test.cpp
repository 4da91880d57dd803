#include "ccpt/transform.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <thread>

#include "ccpt/error.hpp"
#include "ccpt/numtheory.hpp"
#include "ccpt/signalgen.hpp"
#include "oracles.hpp"

namespace ccpt {
namespace {

// T_5 written out entry by entry from the cosine definition.
Eigen::MatrixXd golden_t5() {
  Eigen::MatrixXd t(5, 5);
  for (int n = 0; n < 5; ++n) {
    t(n, 0) = 1.0;
    t(n, 1) = oracle::ccps(5, 1, n);
    t(n, 2) = oracle::ccps(5, 1, (n + 4) % 5);
    t(n, 3) = oracle::ccps(5, 2, n);
    t(n, 4) = oracle::ccps(5, 2, (n + 4) % 5);
  }
  return t;
}

TEST(BasisBlock, Examples) {
  const BasisBlock ones = basis_block(5, 1);
  EXPECT_EQ(ones.matrix, Eigen::MatrixXd::Ones(5, 1));

  const BasisBlock nine = basis_block(72, 9);
  EXPECT_EQ(nine.matrix.rows(), 72);
  EXPECT_EQ(nine.matrix.cols(), 6);
  const std::vector<ColumnLabel> order{{9, 1, 0}, {9, 1, 1}, {9, 2, 0}, {9, 2, 1}, {9, 4, 0}, {9, 4, 1}};
  EXPECT_EQ(nine.labels, order);

  const BasisBlock alt = basis_block(6, 2);
  EXPECT_EQ(alt.matrix, (Eigen::MatrixXd(6, 1) << 1, -1, 1, -1, 1, -1).finished());
}

TEST(BasisBlock, RejectsNonDivisor) { EXPECT_THROW(basis_block(10, 3), InvalidArgument); }

TEST(BuildT, MatchesHandWrittenT5) {
  EXPECT_LT((build_t(5).matrix() - golden_t5()).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_EQ(build_t(1).matrix(), Eigen::MatrixXd::Ones(1, 1));
}

TEST(BuildT, BlockBoundariesFor72) {
  const NestedPeriodicMatrix t = build_t(72);
  std::vector<Eigen::Index> ends;
  for (const BlockSpan& s : t.blocks()) ends.push_back(s.offset + s.width);
  EXPECT_EQ(ends, (std::vector<Eigen::Index>{1, 2, 4, 6, 8, 12, 18, 22, 28, 36, 48, 72}));
  EXPECT_EQ(t.block(9).offset + 1, 13);
  EXPECT_EQ(t.block(36).offset + 1, 37);
  EXPECT_EQ(t.column_of({36, 5, 1}), 39);
  EXPECT_FALSE(t.column_of({36, 2, 0}).has_value());
}

TEST(BuildT, NestedPeriodicStructure) {
  for (std::int64_t n = 1; n <= 100; ++n) {
    const NestedPeriodicMatrix t = build_t(n);
    for (const BlockSpan& a : t.blocks()) {
      const Eigen::MatrixXd ra = t.matrix().middleCols(a.offset, a.width);
      ASSERT_EQ(a.width, totient(a.period));
      ASSERT_EQ(numerical_rank(ra), a.width);
      for (const BlockSpan& b : t.blocks()) {
        if (a.period == b.period) continue;
        const Eigen::MatrixXd rb = t.matrix().middleCols(b.offset, b.width);
        ASSERT_LT((ra.transpose() * rb).cwiseAbs().maxCoeff(), 1e-9) << n << ": " << a.period << "," << b.period;
      }
    }
  }
}

TEST(BuildT, InvertibleButNotOrthogonal) {
  for (std::int64_t n = 1; n <= 256; n += (n < 40 ? 1 : 17)) {
    const NestedPeriodicMatrix t = build_t(n);
    ASSERT_LT(t.condition_estimate(), NestedPeriodicMatrix::kMaxCondition) << n;
    const Eigen::MatrixXd gram = t.matrix().transpose() * t.matrix();
    const Eigen::MatrixXd off = gram - Eigen::MatrixXd(gram.diagonal().asDiagonal());
    if (n == 4) {
      // cos(2 pi / 4) = 0: c_{4,1} is orthogonal to its own downshift.
      ASSERT_LT(off.cwiseAbs().maxCoeff(), 1e-12);
    } else if (n >= 3) {
      ASSERT_GT(off.cwiseAbs().maxCoeff(), 1e-6) << n;
    }
  }
}

TEST(Forward, BasisColumnsMapToUnitVectors) {
  const NestedPeriodicMatrix t5 = build_t(5);
  const CoefficientVector beta = ccpt_forward(gen_tiled_ccps(5, 1, 5), t5);
  const Eigen::Index hit = *t5.column_of({5, 1, 0});
  for (Eigen::Index i = 0; i < 5; ++i) EXPECT_NEAR(std::abs(beta.values[i]), i == hit ? 1.0 : 0.0, 1e-12);

  const NestedPeriodicMatrix t6 = build_t(6);
  const CoefficientVector dc = ccpt_forward(ComplexSignal(6, 1.0), t6);
  for (Eigen::Index i = 0; i < 6; ++i) EXPECT_NEAR(std::abs(dc.values[i]), i == 0 ? 1.0 : 0.0, 1e-12);
}

TEST(Forward, LengthMismatchIsAnError) {
  EXPECT_THROW(ccpt_forward(ComplexSignal(4, 1.0), build_t(5)), InvalidArgument);
}

TEST(Forward, Y1OccupiesOnlyS9AndTwoConjugateSubspacesOfS36) {
  const NestedPeriodicMatrix t = build_t(72);
  const CoefficientVector beta = ccpt_forward(gen_y1(), t);
  const double total = beta.norm_squared();
  for (const BlockSpan& s : t.blocks()) {
    if (s.period == 9 || s.period == 36) continue;
    for (Eigen::Index i = s.offset; i < s.offset + s.width; ++i) {
      ASSERT_LT(std::norm(beta.values[i]), 1e-18 * total) << "period " << s.period;
    }
  }
  const auto s36 = beta.block(36);
  for (std::size_t i = 4; i < s36.size(); ++i) EXPECT_LT(std::norm(s36[i]), 1e-18 * total);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_GT(std::abs(s36[i]), 1e-3);
}

TEST(Inverse, Examples) {
  const NestedPeriodicMatrix t = build_t(5);
  CoefficientVector zero{BasisKind::ccpt, ComplexSignal(5, 0.0), {}};
  for (const Complex& v : ccpt_inverse(zero, t)) EXPECT_EQ(v, Complex(0.0));
  CoefficientVector dc{BasisKind::ccpt, ComplexSignal(5, 0.0), {}};
  dc.values[0] = 1.0;
  for (const Complex& v : ccpt_inverse(dc, t)) EXPECT_NEAR(std::abs(v - 1.0), 0.0, 1e-15);
  EXPECT_THROW(ccpt_inverse(CoefficientVector{BasisKind::ccpt, ComplexSignal(3), {}}, t), InvalidArgument);
}

TEST(RoundTrip, RandomSignals) {
  std::mt19937_64 rng(7);
  for (std::int64_t n : {1, 2, 3, 5, 12, 36, 64, 97, 100}) {
    const NestedPeriodicMatrix t = build_t(n);
    for (bool cplx : {false, true}) {
      const ComplexSignal x = oracle::random_signal(rng, n, cplx);
      const ComplexSignal back = ccpt_inverse(ccpt_forward(x, t), t);
      ASSERT_LT(oracle::max_abs_diff(x, back), 1e-9 * oracle::norm(x)) << n;
    }
  }
}

TEST(Forward, Linearity) {
  std::mt19937_64 rng(8);
  const NestedPeriodicMatrix t = build_t(60);
  const ComplexSignal x = oracle::random_signal(rng, 60, true), y = oracle::random_signal(rng, 60, true);
  const Complex a(0.3, -1.2), b(2.0, 0.5);
  ComplexSignal mix(60);
  for (int i = 0; i < 60; ++i) mix[i] = a * x[i] + b * y[i];
  const auto bx = ccpt_forward(x, t).values, by = ccpt_forward(y, t).values, bm = ccpt_forward(mix, t).values;
  for (int i = 0; i < 60; ++i) ASSERT_LT(std::abs(bm[i] - (a * bx[i] + b * by[i])), 1e-9);
}

TEST(Forward, RealInputGivesRealCoefficients) {
  std::mt19937_64 rng(9);
  const NestedPeriodicMatrix t = build_t(48);
  for (const Complex& v : ccpt_forward(oracle::random_signal(rng, 48, false), t).values) {
    ASSERT_LT(std::abs(v.imag()), 1e-9);
  }
}

TEST(DivisorStrengths, SumsToCoefficientEnergy) {
  std::mt19937_64 rng(10);
  for (std::int64_t n : {6, 30, 72}) {
    const NestedPeriodicMatrix t = build_t(n);
    const CoefficientVector beta = ccpt_forward(oracle::random_signal(rng, n, true), t);
    const PeriodStrengthProfile p = divisor_strengths(beta, t);
    EXPECT_EQ(p.periods, divisor_set(n).divisors);
    EXPECT_NEAR(p.total(), beta.norm_squared(), 1e-12 * beta.norm_squared());
  }
}

TEST(DivisorStrengths, BasisMemberConcentratesInItsBlock) {
  const NestedPeriodicMatrix t = build_t(72);
  const PeriodStrengthProfile p = divisor_strengths(ccpt_forward(gen_tiled_ccps(9, 2, 72), t), t);
  EXPECT_NEAR(p.strength(9), p.total(), 1e-12);
  EXPECT_EQ(p.significant(), (std::vector<std::int64_t>{9}));
}

TEST(DivisorStrengths, Y1HasPeriods9And36) {
  const NestedPeriodicMatrix t = build_t(72);
  const PeriodStrengthProfile p = divisor_strengths(ccpt_forward(gen_y1(), t), t);
  EXPECT_EQ(p.significant(), (std::vector<std::int64_t>{9, 36}));
  EXPECT_EQ(estimate_period(p), 36);
}

TEST(FrequencyLabels, ScaledByFrame) {
  const NestedPeriodicMatrix t = build_t(72);
  const std::vector<double> hz = frequency_labels(t, 360.0);
  EXPECT_DOUBLE_EQ(hz[*t.column_of({36, 1, 0})], 10.0);
  EXPECT_DOUBLE_EQ(hz[*t.column_of({36, 5, 1})], 50.0);
  EXPECT_DOUBLE_EQ(hz[*t.column_of({9, 2, 0})], 80.0);
  EXPECT_DOUBLE_EQ(hz[*t.column_of({1, 1, 0})], 0.0);
  const std::vector<double> cycles = frequency_labels(t);
  EXPECT_DOUBLE_EQ(cycles[*t.column_of({36, 1, 0})], 2.0);
}

TEST(EstimatePeriod, Examples) {
  PeriodStrengthProfile single{{1, 7, 14}, {0.0, 3.0, 0.0}};
  EXPECT_EQ(estimate_period(single), 7);
  PeriodStrengthProfile zero{{1, 2}, {0.0, 0.0}};
  EXPECT_THROW(estimate_period(zero), NoPeriodicContent);
  PeriodStrengthProfile spread{{1, 5, 7}, {0.01, 1.0, 0.5}};
  EXPECT_EQ(estimate_period(spread), 35);
  EXPECT_EQ(estimate_period(spread, {0.6}), 5);
}

TEST(Cache, SharedAcrossThreads) {
  TransformCache cache;
  std::vector<std::shared_ptr<const NestedPeriodicMatrix>> got(8);
  {
    std::vector<std::jthread> pool;
    for (int i = 0; i < 8; ++i) pool.emplace_back([&, i] { got[i] = cache.get(36); });
  }
  for (const auto& p : got) EXPECT_EQ(p, got[0]);
  EXPECT_EQ(got[0]->size(), 36);
}

}  // namespace
}  // namespace ccpt
