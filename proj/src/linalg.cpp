#include "ccpt/linalg.hpp"

#include <algorithm>
#include <limits>

#include <Eigen/SVD>

namespace ccpt {

namespace {

template <typename Matrix>
Eigen::Index rank_from_svd(const Matrix& m) {
  if (m.size() == 0) return 0;
  Eigen::BDCSVD<Matrix> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  const double tol = static_cast<double>(std::max(m.rows(), m.cols())) *
                     std::numeric_limits<double>::epsilon() * sv(0);
  return (sv.array() > tol).count();
}

}  // namespace

Eigen::Index numerical_rank(const Eigen::MatrixXd& m) { return rank_from_svd(m); }
Eigen::Index numerical_rank(const Eigen::MatrixXcd& m) { return rank_from_svd(m); }

double condition_number(const Eigen::MatrixXd& m) {
  Eigen::BDCSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  const double smallest = sv(sv.size() - 1);
  if (smallest == 0.0) return std::numeric_limits<double>::infinity();
  return sv(0) / smallest;
}

Eigen::MatrixXd split_parts(const ComplexSignal& x) {
  Eigen::MatrixXd parts(static_cast<Eigen::Index>(x.size()), 2);
  for (std::size_t i = 0; i < x.size(); ++i) {
    parts(i, 0) = x[i].real();
    parts(i, 1) = x[i].imag();
  }
  return parts;
}

ComplexSignal join_parts(const Eigen::MatrixXd& parts) {
  ComplexSignal x(static_cast<std::size_t>(parts.rows()));
  for (Eigen::Index i = 0; i < parts.rows(); ++i) x[i] = {parts(i, 0), parts(i, 1)};
  return x;
}

double energy(const ComplexSignal& x) {
  double e = 0.0;
  for (const Complex& v : x) e += std::norm(v);
  return e;
}

}  // namespace ccpt
