#include "ccpt/transform.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "ccpt/ccps.hpp"
#include "ccpt/error.hpp"
#include "ccpt/numtheory.hpp"

namespace ccpt {

const char* to_string(BasisKind kind) {
  switch (kind) {
    case BasisKind::ccpt:
      return "ccpt";
    case BasisKind::rpt:
      return "rpt";
  }
  return "?";
}

BasisBlock tiled_ccps_block(std::int64_t length, std::int64_t p) {
  require_length(length, "signal length");
  require_length(p, "period");
  const std::int64_t shifts = p <= 2 ? 1 : 2;
  BasisBlock block{length, p, Eigen::MatrixXd(length, totient(p)), {}};
  Eigen::Index col = 0;
  for (std::int64_t k : coprime_half_set(p).residues) {
    const CcpsSequence seq = ccps(p, k);
    for (std::int64_t l = 0; l < shifts; ++l, ++col) {
      for (std::int64_t n = 0; n < length; ++n) block.matrix(n, col) = seq.at(n - l);
      block.labels.push_back({p, k, l});
    }
  }
  return block;
}

BasisBlock basis_block(std::int64_t n, std::int64_t p) {
  require_length(n, "signal length");
  if (p < 1 || n % p != 0) {
    throw InvalidArgument("period " + std::to_string(p) + " does not divide N=" +
                          std::to_string(n));
  }
  return tiled_ccps_block(n, p);
}

std::span<const Complex> CoefficientVector::block(std::int64_t period) const {
  for (const BlockSpan& s : blocks) {
    if (s.period == period) {
      return std::span<const Complex>(values).subspan(static_cast<std::size_t>(s.offset),
                                                      static_cast<std::size_t>(s.width));
    }
  }
  throw InvalidArgument("no block for period " + std::to_string(period));
}

double CoefficientVector::norm_squared() const { return energy(values); }

NestedPeriodicMatrix::NestedPeriodicMatrix(std::int64_t n, BasisKind kind,
                                           std::vector<BasisBlock> blocks)
    : n_(n), kind_(kind), matrix_(n, n) {
  require_length(n, "transform size");
  Eigen::Index offset = 0;
  for (BasisBlock& b : blocks) {
    const Eigen::Index width = b.matrix.cols();
    if (b.matrix.rows() != n || offset + width > n) {
      throw InvalidArgument("basis blocks do not tile an N x N matrix");
    }
    matrix_.middleCols(offset, width) = b.matrix;
    spans_.push_back({b.period, offset, width});
    for (Eigen::Index i = 0; i < width; ++i) {
      labels_.push_back(b.labels[static_cast<std::size_t>(i)]);
      index_.emplace(b.labels[static_cast<std::size_t>(i)], offset + i);
    }
    offset += width;
  }
  if (offset != n) throw InvalidArgument("basis blocks do not tile an N x N matrix");
  lu_.compute(matrix_);
  const double rcond = lu_.rcond();
  condition_ = rcond > 0.0 ? 1.0 / rcond : std::numeric_limits<double>::infinity();
}

const BlockSpan& NestedPeriodicMatrix::block(std::int64_t period) const {
  for (const BlockSpan& s : spans_) {
    if (s.period == period) return s;
  }
  throw InvalidArgument("no block for period " + std::to_string(period));
}

std::optional<Eigen::Index> NestedPeriodicMatrix::column_of(const ColumnLabel& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

CoefficientVector NestedPeriodicMatrix::solve(const ComplexSignal& x) const {
  if (static_cast<std::int64_t>(x.size()) != n_) {
    throw InvalidArgument("signal length " + std::to_string(x.size()) +
                          " does not match transform size " + std::to_string(n_));
  }
  if (!(condition_ <= kMaxCondition)) {
    throw NumericalError("transform matrix is ill-conditioned", condition_);
  }
  const Eigen::MatrixXd beta = lu_.solve(split_parts(x));
  return {kind_, join_parts(beta), spans_};
}

ComplexSignal NestedPeriodicMatrix::synthesize(const CoefficientVector& beta) const {
  if (static_cast<std::int64_t>(beta.values.size()) != n_) {
    throw InvalidArgument("coefficient length does not match transform size");
  }
  return join_parts(matrix_ * split_parts(beta.values));
}

NestedPeriodicMatrix build_t(std::int64_t n) {
  require_length(n, "transform size");
  std::vector<BasisBlock> blocks;
  for (std::int64_t p : divisor_set(n).divisors) blocks.push_back(basis_block(n, p));
  return NestedPeriodicMatrix(n, BasisKind::ccpt, std::move(blocks));
}

CoefficientVector ccpt_forward(const ComplexSignal& x, const NestedPeriodicMatrix& t) {
  if (t.kind() != BasisKind::ccpt) throw InvalidArgument("ccpt_forward needs a CCPT matrix");
  return t.solve(x);
}

ComplexSignal ccpt_inverse(const CoefficientVector& beta, const NestedPeriodicMatrix& t) {
  return t.synthesize(beta);
}

PeriodStrengthProfile divisor_strengths(const CoefficientVector& beta,
                                        const NestedPeriodicMatrix& t) {
  if (static_cast<std::int64_t>(beta.values.size()) != t.size()) {
    throw InvalidArgument("coefficients were not produced for this matrix");
  }
  PeriodStrengthProfile profile;
  for (const BlockSpan& s : t.blocks()) {
    double sum = 0.0;
    for (Eigen::Index i = s.offset; i < s.offset + s.width; ++i) {
      sum += std::norm(beta.values[static_cast<std::size_t>(i)]);
    }
    profile.periods.push_back(s.period);
    profile.strengths.push_back(sum);
  }
  return profile;
}

std::vector<double> frequency_labels(const NestedPeriodicMatrix& t, std::optional<double> frame) {
  if (t.kind() != BasisKind::ccpt) {
    throw InvalidArgument("Ramanujan blocks mix frequencies; no per-column labels");
  }
  const double scale = frame.value_or(static_cast<double>(t.size()));
  std::vector<double> out;
  out.reserve(t.labels().size());
  for (const ColumnLabel& c : t.labels()) {
    out.push_back(static_cast<double>(c.k % c.period) / static_cast<double>(c.period) * scale);
  }
  return out;
}

std::shared_ptr<const NestedPeriodicMatrix> TransformCache::get(std::int64_t n) {
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(n); it != cache_.end()) return it->second;
  }
  auto built = std::make_shared<const NestedPeriodicMatrix>(build_t(n));
  std::lock_guard lock(mutex_);
  return cache_.try_emplace(n, std::move(built)).first->second;
}

}  // namespace ccpt
