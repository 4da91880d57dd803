#pragma once

#include <complex>
#include <vector>

#include <Eigen/Core>

namespace ccpt {

using Complex = std::complex<double>;
using ComplexSignal = std::vector<Complex>;

// Count of singular values above max(rows, cols) * eps * sigma_max.
Eigen::Index numerical_rank(const Eigen::MatrixXd& m);
Eigen::Index numerical_rank(const Eigen::MatrixXcd& m);

// 2-norm condition number from the singular values; infinity when singular.
double condition_number(const Eigen::MatrixXd& m);

// Splits a complex signal into an N x 2 real matrix [re | im].
Eigen::MatrixXd split_parts(const ComplexSignal& x);
ComplexSignal join_parts(const Eigen::MatrixXd& parts);

double energy(const ComplexSignal& x);

}  // namespace ccpt
