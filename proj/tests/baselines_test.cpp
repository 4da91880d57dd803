#include "ccpt/baselines.hpp"

#include <gtest/gtest.h>

#include <numbers>

#include "ccpt/error.hpp"
#include "ccpt/numtheory.hpp"
#include "ccpt/signalgen.hpp"
#include "oracles.hpp"

namespace ccpt {
namespace {

TEST(RamanujanSum, Examples) {
  EXPECT_EQ(ramanujan_sum(1).samples, (std::vector<std::int64_t>{1}));
  EXPECT_EQ(ramanujan_sum(2).samples, (std::vector<std::int64_t>{1, -1}));
  EXPECT_EQ(ramanujan_sum(5).samples, (std::vector<std::int64_t>{4, -1, -1, -1, -1}));
}

TEST(RamanujanSum, AgreesWithMoebiusClosedForm) {
  for (std::int64_t q = 1; q <= 120; ++q) {
    const RamanujanSum rs = ramanujan_sum(q);
    ASSERT_EQ(rs.samples[0], totient(q));
    for (std::int64_t n = 0; n < q; ++n) ASSERT_EQ(rs.samples[n], oracle::ramanujan_closed_form(q, n)) << q << "," << n;
  }
}

TEST(BuildRpt, SmallExamples) {
  EXPECT_EQ(build_rpt(2).matrix(), (Eigen::MatrixXd(2, 2) << 1, 1, 1, -1).finished());
  const NestedPeriodicMatrix t = build_rpt(5);
  EXPECT_EQ(t.block(1).width, 1);
  EXPECT_EQ(t.block(5).width, 4);
  for (int l = 0; l < 4; ++l) {
    for (int n = 0; n < 5; ++n) {
      EXPECT_EQ(t.matrix()(n, 1 + l), oracle::ramanujan_closed_form(5, ((n - l) % 5 + 5) % 5));
    }
  }
}

TEST(BuildRpt, CrossBlockOrthogonalAndInvertible) {
  for (std::int64_t n = 1; n <= 128; n += (n < 20 ? 1 : 9)) {
    const NestedPeriodicMatrix t = build_rpt(n);
    ASSERT_LT(t.condition_estimate(), NestedPeriodicMatrix::kMaxCondition) << n;
    for (const BlockSpan& a : t.blocks()) {
      for (const BlockSpan& b : t.blocks()) {
        if (a.period == b.period) continue;
        const Eigen::MatrixXd cross = t.matrix().middleCols(a.offset, a.width).transpose() *
                                      t.matrix().middleCols(b.offset, b.width);
        ASSERT_LT(cross.cwiseAbs().maxCoeff(), 1e-9);
      }
    }
  }
  const NestedPeriodicMatrix t72 = build_rpt(72);
  EXPECT_EQ(t72.blocks().size(), 12u);
}

TEST(RptForward, Examples) {
  const NestedPeriodicMatrix t6 = build_rpt(6);
  const CoefficientVector dc = rpt_forward(ComplexSignal(6, 1.0), t6);
  for (int i = 0; i < 6; ++i) EXPECT_NEAR(std::abs(dc.values[i]), i == 0 ? 1.0 : 0.0, 1e-12);

  const NestedPeriodicMatrix t10 = build_rpt(10);
  ComplexSignal c5(10);
  for (int n = 0; n < 10; ++n) c5[n] = static_cast<double>(oracle::ramanujan_closed_form(5, n % 5));
  const CoefficientVector beta = rpt_forward(c5, t10);
  const Eigen::Index hit = *t10.column_of({5, 0, 0});
  for (int i = 0; i < 10; ++i) EXPECT_NEAR(std::abs(beta.values[i]), i == hit ? 1.0 : 0.0, 1e-12);

  EXPECT_THROW(rpt_forward(c5, build_t(10)), InvalidArgument);
}

TEST(RptForward, Y1SpreadsOverAllOfS36) {
  const NestedPeriodicMatrix t = build_rpt(72);
  const CoefficientVector beta = rpt_forward(gen_y1(), t);
  double peak = 0.0;
  for (const Complex& v : beta.values) peak = std::max(peak, std::abs(v));
  for (const Complex& v : beta.block(36)) EXPECT_GT(std::abs(v), 1e-6 * peak);
}

TEST(Dft, Examples) {
  ComplexSignal tone(8);
  for (int n = 0; n < 8; ++n) tone[n] = std::polar(1.0, 2.0 * std::numbers::pi * n / 8.0);
  const ComplexSignal spectrum = dft(tone);
  for (int k = 0; k < 8; ++k) EXPECT_NEAR(std::abs(spectrum[k] - Complex(k == 1 ? 8.0 : 0.0)), 0.0, 1e-12);

  const ComplexSignal ones = dft(ComplexSignal(4, 1.0));
  EXPECT_NEAR(std::abs(ones[0] - 4.0), 0.0, 1e-12);
  for (int k = 1; k < 4; ++k) EXPECT_NEAR(std::abs(ones[k]), 0.0, 1e-12);

  const PeriodStrengthProfile p = dft_divisor_strengths(spectrum);
  EXPECT_EQ(p.significant(), (std::vector<std::int64_t>{8}));
  EXPECT_EQ(dft_divisor_strengths(ones).significant(), (std::vector<std::int64_t>{1}));
}

TEST(Dft, ParsevalAndInverse) {
  std::mt19937_64 rng(3);
  const ComplexSignal x = oracle::random_signal(rng, 64, true);
  const ComplexSignal spectrum = dft(x);
  EXPECT_NEAR(energy(x), energy(spectrum) / 64.0, 1e-9);
  EXPECT_LT(oracle::max_abs_diff(idft(spectrum), x), 1e-9);
  EXPECT_NEAR(dft_divisor_strengths(spectrum).total(), energy(spectrum), 1e-9 * energy(spectrum));
}

TEST(Dft, Y1DivisorStrengths) {
  EXPECT_EQ(dft_divisor_strengths(dft(gen_y1())).significant(), (std::vector<std::int64_t>{9, 36}));
}

TEST(Dft, RealSignalComparisonPremise) {
  std::mt19937_64 rng(4);
  const ComplexSignal x = oracle::random_signal(rng, 30, false);
  const ComplexSignal spectrum = dft(x);
  for (int k = 1; k < 30; ++k) EXPECT_LT(std::abs(spectrum[k] - std::conj(spectrum[30 - k])), 1e-9);
  for (const Complex& v : ccpt_forward(x, build_t(30)).values) EXPECT_LT(std::abs(v.imag()), 1e-9);
}

TEST(Complexity, SingleTransformCounts) {
  EXPECT_EQ(complexity_estimate("ccpt", 100).multiplications, 20000);
  EXPECT_EQ(complexity_estimate("rpt", 100).multiplications, 20000);
  EXPECT_EQ(complexity_estimate("dft", 100).multiplications, 40000);
  for (std::int64_t n : {1, 7, 64, 1000}) {
    EXPECT_EQ(complexity_estimate("ccpt", n).multiplications, 2 * n * n);
    EXPECT_EQ(complexity_estimate("dft", n).multiplications, 4 * n * n);
  }
}

TEST(Complexity, ScanMatchesClosedForm) {
  EXPECT_EQ(complexity_estimate("scan-ccpt", 100, 70).multiplications, 452910);
  EXPECT_EQ(complexity_estimate("scan-dft", 100, 70).unit, CountUnit::complex);
  EXPECT_EQ(complexity_estimate("scan-rpt", 100, 70).unit, CountUnit::real);
  for (std::int64_t n1 = 1; n1 <= 60; n1 += 7) {
    for (std::int64_t n = n1; n <= 90; n += 11) {
      const double closed = 2.0 * ((std::pow(n, 3) - std::pow(n1, 3)) / 3.0 +
                                   (static_cast<double>(n * n + n1 * n1)) / 2.0 + (n - n1) / 6.0);
      ASSERT_NEAR(static_cast<double>(complexity_estimate("scan-ccpt", n, n1).multiplications), closed, 1e-6);
    }
  }
  EXPECT_THROW(complexity_estimate("scan-ccpt", 100), InvalidArgument);
  EXPECT_THROW(complexity_estimate("scan-ccpt", 100, 101), InvalidArgument);
}

TEST(Complexity, DictionaryRatios) {
  const auto l = complexity_estimate("dict-ccpt", 100, 80);
  EXPECT_EQ(l.formula, "L");
  EXPECT_GT(l.multiplications, 0);
  EXPECT_EQ(complexity_estimate("dict-rpt", 100, 80).multiplications, l.multiplications);
  EXPECT_EQ(complexity_estimate("dict-farey", 100, 80).multiplications, 2 * l.multiplications);
}

TEST(Complexity, UnknownMethod) { EXPECT_THROW(complexity_estimate("fft", 8), InvalidArgument); }

}  // namespace
}  // namespace ccpt
