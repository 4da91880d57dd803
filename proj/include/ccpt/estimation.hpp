#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "ccpt/linalg.hpp"
#include "ccpt/profile.hpp"
#include "ccpt/transform.hpp"

namespace ccpt {

// ---------------------------------------------------------------------------
// Range-of-lengths scan
// ---------------------------------------------------------------------------

struct ScanRecord {
  std::int64_t length = 0;          // N_i
  PeriodStrengthProfile profile;    // one entry per divisor of N_i
  std::vector<std::int64_t> detected;
};

struct ScanResult {
  std::int64_t first_length = 0;  // N1
  std::int64_t last_length = 0;   // N
  std::vector<ScanRecord> records;  // ordered by N_i
  // Number of scanned lengths whose divisor set contains p, i.e. how many
  // times the subspace s_p was projected onto.
  std::map<std::int64_t, std::int64_t> subspace_visits;
  // sum over p of (visits - 1): projections spent on already-seen subspaces.
  std::int64_t duplicated_projections = 0;
};

// Full CCPT of every prefix x[0 .. N_i) for N_i in [N1, length(x)].
// Lengths are processed by up to `jobs` threads; output order is by N_i.
// Requires 3 <= N1 <= length(x).
ScanResult range_scan(const ComplexSignal& x, std::int64_t n1, ThresholdPolicy policy = {},
                      unsigned jobs = 1, TransformCache* cache = nullptr);

// ---------------------------------------------------------------------------
// Penalized dictionary
// ---------------------------------------------------------------------------

enum class DictionaryBasis { ccpt, farey, rpt };

const char* to_string(DictionaryBasis basis);

// f(p): penalty weight of a column of period p.
using PenaltyFunction = std::function<double(std::int64_t)>;

PenaltyFunction power_penalty(double exponent);

// min(floor(0.8 N), N - 1), at least 1.
std::int64_t default_pmax(std::int64_t n);

// Fat matrix A = [R_1 | R_2 | ... | R_pmax] truncated to N rows, with the
// diagonal penalty D_ii = f(p_i). Farey atoms are complex exponentials
// e^{j 2 pi k n / p}, k coprime to p; the other bases are real.
struct DictionaryModel {
  std::int64_t length = 0;
  std::int64_t p_max = 0;
  DictionaryBasis basis = DictionaryBasis::ccpt;
  Eigen::MatrixXd atoms;           // ccpt, rpt
  Eigen::MatrixXcd complex_atoms;  // farey
  std::vector<ColumnLabel> labels;
  std::vector<BlockSpan> blocks;   // p = 1 .. p_max
  Eigen::VectorXd penalty;         // diagonal of D

  Eigen::Index columns() const { return static_cast<Eigen::Index>(labels.size()); }
  bool is_complex() const { return basis == DictionaryBasis::farey; }
  // N_hat >= N; otherwise an exact fit is generally impossible.
  bool exact_fit_feasible() const { return columns() >= length; }
};

DictionaryModel build_dictionary(std::int64_t n, std::int64_t p_max,
                                 DictionaryBasis basis = DictionaryBasis::ccpt,
                                 const PenaltyFunction& penalty = power_penalty(2.0));

struct DictionarySolution {
  ComplexSignal coefficients;  // b_hat, length N_hat
  PeriodStrengthProfile strengths;
  double residual = 0.0;       // ||A b - x|| / ||x||, 0 for x = 0
  double condition = 0.0;      // estimate for G = A D^-2 A^H before any ridge
  double ridge = 0.0;          // lambda * trace(G) / N added to G, 0 if none
};

// b_hat = D^-2 A^H (A D^-2 A^H)^{-1} x through an LDL^T solve of the N x N
// Gram system. If its condition estimate exceeds kMaxCondition a ridge of
// 1e-10 * trace(G) / N is added; NumericalError if that does not help.
DictionarySolution dictionary_solve(const DictionaryModel& model, const ComplexSignal& x);

PeriodStrengthProfile dictionary_strength_profile(const DictionarySolution& solution,
                                                  const DictionaryModel& model);

inline constexpr double kMaxGramCondition = 1e12;
inline constexpr double kRidgeLambda = 1e-10;

}  // namespace ccpt
