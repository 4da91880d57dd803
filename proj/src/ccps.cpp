#include "ccpt/ccps.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ccpt/error.hpp"
#include "ccpt/numtheory.hpp"

namespace ccpt {

namespace {

// cos(2 pi k n / N) with k n reduced mod N and folded onto [0, N/2], so
// that samples n and N - n are bitwise identical.
double folded_cos(std::int64_t k, std::int64_t n, std::int64_t period) {
  std::int64_t r = (k * n) % period;
  if (r < 0) r += period;
  r = std::min(r, period - r);
  return std::cos(2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(period));
}

void require_index(std::int64_t n, std::int64_t k) {
  require_length(n, "CCPS period");
  if (!coprime_half_set(n).contains(k)) {
    throw InvalidArgument("invalid subspace index k=" + std::to_string(k) +
                          " for period N=" + std::to_string(n));
  }
}

std::int64_t wrap(std::int64_t n, std::int64_t period) {
  const std::int64_t r = n % period;
  return r < 0 ? r + period : r;
}

}  // namespace

double CcpsSequence::at(std::int64_t n) const {
  return samples[static_cast<std::size_t>(wrap(n, period))];
}

CcpsSequence ccps(std::int64_t n, std::int64_t k) {
  require_index(n, k);
  CcpsSequence seq;
  seq.period = n;
  seq.k = k;
  seq.scale = n <= 2 ? 0.5 : 1.0;
  seq.samples.resize(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    seq.samples[static_cast<std::size_t>(i)] = 2.0 * seq.scale * folded_cos(k, i, n);
  }
  return seq;
}

CirculantMatrix circulant(std::int64_t n, std::int64_t k) {
  CirculantMatrix out{ccps(n, k), Eigen::MatrixXd(n, n)};
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = 0; j < n; ++j) out.matrix(i, j) = out.generator.at(i - j);
  }
  return out;
}

Eigen::MatrixXcd factorize(std::int64_t n, std::int64_t k) {
  require_index(n, k);
  if (n < 3) throw InvalidArgument("factorization needs N >= 3 (single exponential case)");
  Eigen::MatrixXcd b(n, 2);
  for (std::int64_t i = 0; i < n; ++i) {
    const double phase = 2.0 * std::numbers::pi * static_cast<double>((k * i) % n) /
                         static_cast<double>(n);
    b(i, 0) = std::polar(1.0, phase);
    b(i, 1) = std::polar(1.0, -phase);
  }
  return b;
}

CcsBasis ccs_basis(std::int64_t n, std::int64_t k) {
  const CcpsSequence seq = ccps(n, k);
  const Eigen::Index width = n <= 2 ? 1 : 2;
  CcsBasis basis{n, k, Eigen::MatrixXd(n, width)};
  for (Eigen::Index l = 0; l < width; ++l) {
    for (std::int64_t i = 0; i < n; ++i) basis.columns(i, l) = seq.at(i - l);
  }
  return basis;
}

double ccps_inner_product(std::int64_t n1, std::int64_t k1, std::int64_t l1,
                          std::int64_t n2, std::int64_t k2, std::int64_t l2) {
  const CcpsSequence a = ccps(n1, k1);
  const CcpsSequence b = ccps(n2, k2);
  const std::int64_t periods[] = {n1, n2};
  const std::int64_t span = lcm(periods);
  double sum = 0.0;
  for (std::int64_t i = 0; i < span; ++i) sum += a.at(i - l1) * b.at(i - l2);
  return sum;
}

double ccps_inner_product_closed_form(std::int64_t n1, std::int64_t k1, std::int64_t l1,
                                      std::int64_t n2, std::int64_t k2, std::int64_t l2) {
  require_index(n1, k1);
  require_index(n2, k2);
  if (n1 != n2 || k1 != k2) return 0.0;
  const double n = static_cast<double>(n1);
  const double energy = n1 <= 2 ? n : 2.0 * n;  // 2 N M^2 with M = 1 for N >= 3
  return energy * folded_cos(k1, wrap(l1 - l2, n1), n1);
}

}  // namespace ccpt
