#include "ccpt/baselines.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "ccpt/error.hpp"
#include "ccpt/numtheory.hpp"

namespace ccpt {

namespace {

Complex unit_root(std::int64_t num, std::int64_t den) {
  const std::int64_t r = ((num % den) + den) % den;
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(den));
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw InvalidArgument("operation count overflows");
  return out;
}

std::int64_t dictionary_columns(std::int64_t p_max) {
  std::int64_t sum = 0;
  for (std::int64_t p = 1; p <= p_max; ++p) sum += totient(p);
  return sum;
}

// Real multiplications of the staged minimum-norm solve for one real
// right-hand side: scaling by D^-2, symmetric Gram formation, LDL^T,
// two triangular solves, A^T y, final D^-2 scaling.
std::int64_t dictionary_solve_count(std::int64_t n, std::int64_t cols) {
  const std::int64_t gram = checked_mul(cols, n * (n + 1) / 2);
  const std::int64_t factor = (n - 1) * n * (n + 1) / 6;
  return 2 * checked_mul(n, cols) + gram + factor + n * (n - 1) + cols;
}

}  // namespace

RamanujanSum ramanujan_sum(std::int64_t q) {
  require_length(q, "Ramanujan period");
  RamanujanSum out{q, std::vector<std::int64_t>(static_cast<std::size_t>(q))};
  for (std::int64_t n = 0; n < q; ++n) {
    Complex sum = 0.0;
    for (std::int64_t k = 1; k <= q; ++k) {
      if (std::gcd(k, q) == 1) sum += unit_root(k * n, q);
    }
    const double rounded = std::round(sum.real());
    if (std::abs(sum.imag()) > 1e-9 || std::abs(sum.real() - rounded) > 1e-9 * static_cast<double>(q)) {
      throw NumericalError("Ramanujan sum did not round to an integer", std::abs(sum.imag()));
    }
    out.samples[static_cast<std::size_t>(n)] = static_cast<std::int64_t>(rounded);
  }
  return out;
}

BasisBlock ramanujan_block(std::int64_t length, std::int64_t p) {
  require_length(length, "signal length");
  const RamanujanSum rs = ramanujan_sum(p);
  const std::int64_t width = totient(p);
  BasisBlock block{length, p, Eigen::MatrixXd(length, width), {}};
  for (std::int64_t l = 0; l < width; ++l) {
    for (std::int64_t n = 0; n < length; ++n) {
      const std::int64_t idx = (((n - l) % p) + p) % p;
      block.matrix(n, l) = static_cast<double>(rs.samples[static_cast<std::size_t>(idx)]);
    }
    block.labels.push_back({p, 0, l});
  }
  return block;
}

NestedPeriodicMatrix build_rpt(std::int64_t n) {
  require_length(n, "transform size");
  std::vector<BasisBlock> blocks;
  for (std::int64_t p : divisor_set(n).divisors) blocks.push_back(ramanujan_block(n, p));
  return NestedPeriodicMatrix(n, BasisKind::rpt, std::move(blocks));
}

CoefficientVector rpt_forward(const ComplexSignal& x, const NestedPeriodicMatrix& t_rpt) {
  if (t_rpt.kind() != BasisKind::rpt) throw InvalidArgument("rpt_forward needs an RPT matrix");
  return t_rpt.solve(x);
}

ComplexSignal dft(const ComplexSignal& x) {
  const auto n = static_cast<std::int64_t>(x.size());
  require_length(n, "DFT length");
  ComplexSignal out(x.size());
  for (std::int64_t k = 0; k < n; ++k) {
    Complex acc = 0.0;
    for (std::int64_t i = 0; i < n; ++i) acc += x[static_cast<std::size_t>(i)] * unit_root(-k * i, n);
    out[static_cast<std::size_t>(k)] = acc;
  }
  return out;
}

ComplexSignal idft(const ComplexSignal& spectrum) {
  const auto n = static_cast<std::int64_t>(spectrum.size());
  require_length(n, "DFT length");
  ComplexSignal out(spectrum.size());
  for (std::int64_t i = 0; i < n; ++i) {
    Complex acc = 0.0;
    for (std::int64_t k = 0; k < n; ++k) acc += spectrum[static_cast<std::size_t>(k)] * unit_root(k * i, n);
    out[static_cast<std::size_t>(i)] = acc / static_cast<double>(n);
  }
  return out;
}

PeriodStrengthProfile dft_divisor_strengths(const ComplexSignal& spectrum) {
  const auto n = static_cast<std::int64_t>(spectrum.size());
  PeriodStrengthProfile profile;
  for (const auto& [d, bins] : period_partition(n)) {
    double sum = 0.0;
    for (std::int64_t k : bins) sum += std::norm(spectrum[static_cast<std::size_t>(k)]);
    profile.periods.push_back(d);
    profile.strengths.push_back(sum);
  }
  return profile;
}

ComplexityReport complexity_estimate(std::string_view method, std::int64_t n,
                                     std::optional<std::int64_t> second) {
  require_length(n, "signal length");
  const std::int64_t square = n * n;
  if (method == "dft") return {"dft", 4 * square, CountUnit::real, "4N^2"};
  if (method == "rpt") return {"rpt", 2 * square, CountUnit::real, "2N^2"};
  if (method == "ccpt") return {"ccpt", 2 * square, CountUnit::real, "2N^2"};

  if (method.starts_with("scan-")) {
    if (!second || *second < 1 || *second > n) {
      throw InvalidArgument("scan complexity needs 1 <= N1 <= N");
    }
    // 2 * sum_{Ni = N1}^{N} Ni^2 == 2((N^3 - N1^3)/3 + (N^2 + N1^2)/2 + (N - N1)/6)
    std::int64_t sum = 0;
    for (std::int64_t ni = *second; ni <= n; ++ni) sum += ni * ni;
    const std::string formula = "2((N^3-N1^3)/3+(N^2+N1^2)/2+(N-N1)/6)";
    if (method == "scan-ccpt") return {"scan-ccpt", 2 * sum, CountUnit::real, formula};
    if (method == "scan-rpt") return {"scan-rpt", 2 * sum, CountUnit::real, formula};
    if (method == "scan-dft") return {"scan-dft", 2 * sum, CountUnit::complex, formula};
  }

  if (method.starts_with("dict-")) {
    if (!second || *second < 1 || *second > kMaxLength) {
      throw InvalidArgument("dictionary complexity needs p_max >= 1");
    }
    const std::int64_t l = dictionary_solve_count(n, dictionary_columns(*second));
    if (method == "dict-ccpt") return {"dict-ccpt", l, CountUnit::real, "L"};
    if (method == "dict-rpt") return {"dict-rpt", l, CountUnit::real, "L"};
    if (method == "dict-farey") return {"dict-farey", 2 * l, CountUnit::real, "2L"};
  }
  throw InvalidArgument("unknown complexity method '" + std::string(method) + "'");
}

}  // namespace ccpt
