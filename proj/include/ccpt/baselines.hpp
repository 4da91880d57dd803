#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ccpt/linalg.hpp"
#include "ccpt/profile.hpp"
#include "ccpt/transform.hpp"

namespace ccpt {

// c_q(n) = sum over 1 <= k <= q, gcd(k, q) = 1 of e^{j 2 pi k n / q}.
struct RamanujanSum {
  std::int64_t period = 1;
  std::vector<std::int64_t> samples;
};

// Built by direct exponential summation and rounded; throws NumericalError
// if the imaginary residue or distance to the nearest integer exceeds 1e-9.
RamanujanSum ramanujan_sum(std::int64_t q);

// Columns of block p: tilings of c_p(n - l) for l = 0 .. phi(p)-1.
BasisBlock ramanujan_block(std::int64_t length, std::int64_t p);

// Ramanujan periodic transform matrix, same block layout as build_t.
NestedPeriodicMatrix build_rpt(std::int64_t n);

CoefficientVector rpt_forward(const ComplexSignal& x, const NestedPeriodicMatrix& t_rpt);

// Direct O(N^2) transforms. X[k] = sum_n x[n] e^{-j 2 pi k n / N}.
ComplexSignal dft(const ComplexSignal& x);
ComplexSignal idft(const ComplexSignal& spectrum);

// strength[d] = sum over k in H_d of |X[k]|^2.
PeriodStrengthProfile dft_divisor_strengths(const ComplexSignal& spectrum);

enum class CountUnit { real, complex };

struct ComplexityReport {
  std::string method;
  std::int64_t multiplications = 0;
  CountUnit unit = CountUnit::real;
  std::string formula;
};

// Methods: dft, rpt, ccpt (single transform of length N); scan-ccpt,
// scan-dft, scan-rpt (every length in [N1, N], N1 required); dict-ccpt,
// dict-farey, dict-rpt (dictionary solve, second argument is p_max).
ComplexityReport complexity_estimate(std::string_view method, std::int64_t n,
                                     std::optional<std::int64_t> second = std::nullopt);

}  // namespace ccpt
