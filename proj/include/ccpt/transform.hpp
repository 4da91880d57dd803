#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>
#include <Eigen/LU>

#include "ccpt/linalg.hpp"
#include "ccpt/profile.hpp"

namespace ccpt {

enum class BasisKind { ccpt, rpt };

const char* to_string(BasisKind kind);

// Identifies one synthesis column. For CCPT blocks `k` is the member of
// A_p and `shift` is 0 or 1; RPT columns use k = 0 and shifts 0..phi(p)-1.
struct ColumnLabel {
  std::int64_t period = 1;
  std::int64_t k = 1;
  std::int64_t shift = 0;

  auto operator<=>(const ColumnLabel&) const = default;
};

struct BlockSpan {
  std::int64_t period = 1;
  Eigen::Index offset = 0;
  Eigen::Index width = 0;
};

// N x phi(p) basis of the period-p subspace s_p, each column a length-N
// periodic tiling of a period-p generator, circularly shifted.
struct BasisBlock {
  std::int64_t length = 1;
  std::int64_t period = 1;
  Eigen::MatrixXd matrix;
  std::vector<ColumnLabel> labels;
};

// Columns ordered by k ascending, shift 0 before shift 1. Also used for
// dictionary blocks, where p need not divide `length` and the final
// repetition is truncated.
BasisBlock tiled_ccps_block(std::int64_t length, std::int64_t p);

// R_p for a divisor p of N; throws InvalidArgument when p does not divide N.
BasisBlock basis_block(std::int64_t n, std::int64_t p);

// Transform coefficients with block boundaries mirroring the matrix they
// were computed for.
struct CoefficientVector {
  BasisKind kind = BasisKind::ccpt;
  ComplexSignal values;
  std::vector<BlockSpan> blocks;

  std::span<const Complex> block(std::int64_t period) const;
  double norm_squared() const;
};

// Square matrix [R_p1 | R_p2 | ... ] over the divisors of N in ascending
// order, LU-factorized once at construction. Immutable afterwards, so a
// shared instance may be used from several threads.
class NestedPeriodicMatrix {
 public:
  // Blocks must be ordered by ascending divisor and total N columns.
  NestedPeriodicMatrix(std::int64_t n, BasisKind kind, std::vector<BasisBlock> blocks);

  std::int64_t size() const { return n_; }
  BasisKind kind() const { return kind_; }
  const Eigen::MatrixXd& matrix() const { return matrix_; }
  std::span<const BlockSpan> blocks() const { return spans_; }
  std::span<const ColumnLabel> labels() const { return labels_; }
  const BlockSpan& block(std::int64_t period) const;
  std::optional<Eigen::Index> column_of(const ColumnLabel& label) const;

  // 1-norm condition estimate from the LU factors.
  double condition_estimate() const { return condition_; }

  // beta = T^{-1} x; the real system is solved once for the real and once
  // for the imaginary part. Throws NumericalError when the condition
  // estimate exceeds kMaxCondition, InvalidArgument on length mismatch.
  CoefficientVector solve(const ComplexSignal& x) const;
  ComplexSignal synthesize(const CoefficientVector& beta) const;

  static constexpr double kMaxCondition = 1e12;

 private:
  std::int64_t n_;
  BasisKind kind_;
  Eigen::MatrixXd matrix_;
  std::vector<BlockSpan> spans_;
  std::vector<ColumnLabel> labels_;
  std::map<ColumnLabel, Eigen::Index> index_;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
  double condition_ = 0.0;
};

NestedPeriodicMatrix build_t(std::int64_t n);

CoefficientVector ccpt_forward(const ComplexSignal& x, const NestedPeriodicMatrix& t);
ComplexSignal ccpt_inverse(const CoefficientVector& beta, const NestedPeriodicMatrix& t);

// One entry per divisor of N: sum of |beta_i|^2 over that divisor's block.
PeriodStrengthProfile divisor_strengths(const CoefficientVector& beta,
                                        const NestedPeriodicMatrix& t);

// Frequency of every column, (k mod p) / p scaled by `frame` (samples per
// unit time). Without a frame the unit is cycles per N samples. CCPT only.
std::vector<double> frequency_labels(const NestedPeriodicMatrix& t,
                                     std::optional<double> frame = std::nullopt);

// Lazily built, shared CCPT matrices keyed by N. Safe for concurrent use.
class TransformCache {
 public:
  std::shared_ptr<const NestedPeriodicMatrix> get(std::int64_t n);

 private:
  std::mutex mutex_;
  std::map<std::int64_t, std::shared_ptr<const NestedPeriodicMatrix>> cache_;
};

}  // namespace ccpt
