#include "ccpt/estimation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>
#include <thread>

#include <Eigen/Cholesky>

#include "ccpt/baselines.hpp"
#include "ccpt/error.hpp"
#include "ccpt/numtheory.hpp"

namespace ccpt {

ScanResult range_scan(const ComplexSignal& x, std::int64_t n1, ThresholdPolicy policy,
                      unsigned jobs, TransformCache* cache) {
  const auto n = static_cast<std::int64_t>(x.size());
  if (n1 < 3 || n1 > n) {
    throw InvalidArgument("scan range needs 3 <= N1 <= N, got N1=" + std::to_string(n1) +
                          " N=" + std::to_string(n));
  }
  TransformCache local;
  TransformCache& matrices = cache ? *cache : local;

  ScanResult result;
  result.first_length = n1;
  result.last_length = n;
  result.records.resize(static_cast<std::size_t>(n - n1 + 1));

  std::atomic<std::int64_t> next{n1};
  auto worker = [&] {
    for (std::int64_t ni = next++; ni <= n; ni = next++) {
      auto t = matrices.get(ni);
      const ComplexSignal prefix(x.begin(), x.begin() + ni);
      ScanRecord& rec = result.records[static_cast<std::size_t>(ni - n1)];
      rec.length = ni;
      rec.profile = divisor_strengths(ccpt_forward(prefix, *t), *t);
      rec.detected = rec.profile.significant(policy);
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n - n1 + 1)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  for (const ScanRecord& rec : result.records) {
    for (std::int64_t p : rec.profile.periods) ++result.subspace_visits[p];
  }
  for (const auto& [p, visits] : result.subspace_visits) result.duplicated_projections += visits - 1;
  return result;
}

const char* to_string(DictionaryBasis basis) {
  switch (basis) {
    case DictionaryBasis::ccpt:
      return "ccpt";
    case DictionaryBasis::farey:
      return "farey";
    case DictionaryBasis::rpt:
      return "rpt";
  }
  return "?";
}

PenaltyFunction power_penalty(double exponent) {
  return [exponent](std::int64_t p) { return std::pow(static_cast<double>(p), exponent); };
}

std::int64_t default_pmax(std::int64_t n) {
  return std::max<std::int64_t>(1, std::min(n * 8 / 10, n - 1));
}

namespace {

void append_farey_block(DictionaryModel& model, std::int64_t p) {
  const Eigen::Index offset = model.complex_atoms.cols();
  std::vector<std::int64_t> residues;
  for (std::int64_t k = 0; k < p; ++k) {
    if (std::gcd(k, p) == 1) residues.push_back(k);
  }
  model.complex_atoms.conservativeResize(model.length, offset + static_cast<Eigen::Index>(residues.size()));
  for (std::size_t i = 0; i < residues.size(); ++i) {
    const std::int64_t k = residues[i];
    for (std::int64_t n = 0; n < model.length; ++n) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>((k * n) % p) / static_cast<double>(p);
      model.complex_atoms(n, offset + static_cast<Eigen::Index>(i)) = std::polar(1.0, angle);
    }
    model.labels.push_back({p, k, 0});
  }
  model.blocks.push_back({p, offset, static_cast<Eigen::Index>(residues.size())});
}

void append_real_block(DictionaryModel& model, const BasisBlock& block) {
  const Eigen::Index offset = model.atoms.cols();
  model.atoms.conservativeResize(model.length, offset + block.matrix.cols());
  model.atoms.middleCols(offset, block.matrix.cols()) = block.matrix;
  model.labels.insert(model.labels.end(), block.labels.begin(), block.labels.end());
  model.blocks.push_back({block.period, offset, block.matrix.cols()});
}

struct GramSolve {
  Eigen::VectorXcd y;
  double condition;
  double ridge;
};

// Solves (A W A^H) Y = X for the N x N Gram system with LDL^T.
template <typename Matrix>
GramSolve solve_gram(const Matrix& a, const Eigen::VectorXd& weights, const ComplexSignal& x) {
  using Scalar = typename Matrix::Scalar;
  using Square = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Eigen::Index n = a.rows();
  Square gram = (a * weights.asDiagonal()) * a.adjoint();

  auto condition_of = [](const Eigen::LDLT<Square>& f) {
    const double rc = f.rcond();
    return rc > 0.0 && f.info() == Eigen::Success ? 1.0 / rc : std::numeric_limits<double>::infinity();
  };

  Eigen::LDLT<Square> ldlt(gram);
  GramSolve out{{}, condition_of(ldlt), 0.0};
  if (!(out.condition <= kMaxGramCondition)) {
    out.ridge = kRidgeLambda * std::real(gram.trace()) / static_cast<double>(n);
    gram.diagonal().array() += Scalar(out.ridge);
    ldlt.compute(gram);
    const double after = condition_of(ldlt);
    if (!(out.ridge > 0.0) || !(after <= 1.0 / std::numeric_limits<double>::epsilon())) {
      throw NumericalError("dictionary Gram matrix is singular beyond ridge recovery", out.condition);
    }
  }

  if constexpr (std::is_same_v<Scalar, double>) {
    // Real system: one solve for the real part, one for the imaginary part.
    const Eigen::MatrixXd parts = ldlt.solve(split_parts(x));
    out.y = parts.col(0).cast<Complex>() + Complex(0.0, 1.0) * parts.col(1).cast<Complex>();
  } else {
    Eigen::VectorXcd rhs(n);
    for (Eigen::Index i = 0; i < n; ++i) rhs(i) = x[static_cast<std::size_t>(i)];
    out.y = ldlt.solve(rhs);
  }
  return out;
}

}  // namespace

DictionaryModel build_dictionary(std::int64_t n, std::int64_t p_max, DictionaryBasis basis,
                                 const PenaltyFunction& penalty) {
  require_length(n, "signal length");
  require_length(p_max, "p_max");
  DictionaryModel model;
  model.length = n;
  model.p_max = p_max;
  model.basis = basis;
  if (basis == DictionaryBasis::farey) {
    model.complex_atoms.resize(n, 0);
  } else {
    model.atoms.resize(n, 0);
  }
  for (std::int64_t p = 1; p <= p_max; ++p) {
    switch (basis) {
      case DictionaryBasis::ccpt:
        append_real_block(model, tiled_ccps_block(n, p));
        break;
      case DictionaryBasis::rpt:
        append_real_block(model, ramanujan_block(n, p));
        break;
      case DictionaryBasis::farey:
        append_farey_block(model, p);
        break;
    }
  }
  model.penalty.resize(model.columns());
  for (Eigen::Index i = 0; i < model.columns(); ++i) {
    const double f = penalty(model.labels[static_cast<std::size_t>(i)].period);
    if (!(f > 0.0) || !std::isfinite(f)) throw InvalidArgument("penalty must be positive and finite");
    model.penalty(i) = f;
  }
  return model;
}

DictionarySolution dictionary_solve(const DictionaryModel& model, const ComplexSignal& x) {
  if (static_cast<std::int64_t>(x.size()) != model.length) {
    throw InvalidArgument("dictionary built for length " + std::to_string(model.length) +
                          ", signal has " + std::to_string(x.size()));
  }
  const Eigen::VectorXd weights = model.penalty.array().square().inverse();  // D^-2

  DictionarySolution sol;
  Eigen::VectorXcd b;
  Eigen::VectorXcd fit;
  if (model.is_complex()) {
    auto g = solve_gram(model.complex_atoms, weights, x);
    b = weights.cast<Complex>().asDiagonal() * (model.complex_atoms.adjoint() * g.y);
    fit = model.complex_atoms * b;
    sol.condition = g.condition;
    sol.ridge = g.ridge;
  } else {
    auto g = solve_gram(model.atoms, weights, x);
    b = weights.cast<Complex>().asDiagonal() * (model.atoms.transpose().cast<Complex>() * g.y);
    fit = model.atoms.cast<Complex>() * b;
    sol.condition = g.condition;
    sol.ridge = g.ridge;
  }

  sol.coefficients.assign(b.data(), b.data() + b.size());
  double err = 0.0;
  for (Eigen::Index i = 0; i < fit.size(); ++i) err += std::norm(fit(i) - x[static_cast<std::size_t>(i)]);
  const double scale = energy(x);
  sol.residual = scale > 0.0 ? std::sqrt(err / scale) : 0.0;
  sol.strengths = dictionary_strength_profile(sol, model);
  return sol;
}

PeriodStrengthProfile dictionary_strength_profile(const DictionarySolution& solution,
                                                  const DictionaryModel& model) {
  if (static_cast<Eigen::Index>(solution.coefficients.size()) != model.columns()) {
    throw InvalidArgument("solution does not belong to this dictionary");
  }
  PeriodStrengthProfile profile;
  for (const BlockSpan& s : model.blocks) {
    double sum = 0.0;
    for (Eigen::Index i = s.offset; i < s.offset + s.width; ++i) {
      sum += std::norm(solution.coefficients[static_cast<std::size_t>(i)]);
    }
    profile.periods.push_back(s.period);
    profile.strengths.push_back(sum);
  }
  return profile;
}

}  // namespace ccpt
