#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

namespace ccpt {

// Complex conjugate pair sum c_{N,k}(n) = 2 M cos(2 pi k n / N), with
// M = 1/2 for N in {1, 2} and M = 1 otherwise.
struct CcpsSequence {
  std::int64_t period = 1;
  std::int64_t k = 1;
  double scale = 0.5;  // M
  std::vector<double> samples;

  // Periodic evaluation, any integer n (negative shifts included).
  double at(std::int64_t n) const;
};

// Requires k in A_N; throws InvalidArgument otherwise.
CcpsSequence ccps(std::int64_t n, std::int64_t k);

// N x N circulant D_{N,k}: entry (i, j) = c_{N,k}((i - j) mod N).
struct CirculantMatrix {
  CcpsSequence generator;
  Eigen::MatrixXd matrix;
};

CirculantMatrix circulant(std::int64_t n, std::int64_t k);

// Columns e^{+j 2 pi k n / N} and e^{-j 2 pi k n / N}; B B^H == D_{N,k}.
// Only defined for N >= 3.
Eigen::MatrixXcd factorize(std::int64_t n, std::int64_t k);

// Real basis of the conjugate subspace v_{N,k}: c_{N,k} and its one-sample
// circular downshift (a single column when N <= 2).
struct CcsBasis {
  std::int64_t period = 1;
  std::int64_t k = 1;
  Eigen::MatrixXd columns;
};

CcsBasis ccs_basis(std::int64_t n, std::int64_t k);

// sum_{n < lcm(N1, N2)} c_{N1,k1}(n - l1) c_{N2,k2}(n - l2), summed directly.
double ccps_inner_product(std::int64_t n1, std::int64_t k1, std::int64_t l1,
                          std::int64_t n2, std::int64_t k2, std::int64_t l2);

// Closed form of the same inner product. For N >= 3 this is
// 2 N M^2 cos(2 pi k1 (l1 - l2) / N1) when (N1, k1) == (N2, k2), else 0.
// For N <= 2 the pair collapses to one exponential and the energy factor
// is N instead of 2 N M^2.
double ccps_inner_product_closed_form(std::int64_t n1, std::int64_t k1, std::int64_t l1,
                                      std::int64_t n2, std::int64_t k2, std::int64_t l2);

}  // namespace ccpt
