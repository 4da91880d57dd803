#include "ccpt/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ccpt/error.hpp"

namespace ccpt {

void require_length(std::int64_t n, const char* what) {
  if (n < 1 || n > kMaxLength) {
    throw InvalidArgument(std::string(what) + " must lie in [1, " +
                          std::to_string(kMaxLength) + "], got " + std::to_string(n));
  }
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1) throw InvalidArgument("gcd requires positive arguments");
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::int64_t lcm(std::span<const std::int64_t> values) {
  if (values.empty()) throw InvalidArgument("lcm of an empty period set");
  std::int64_t acc = 1;
  for (std::int64_t v : values) {
    if (v < 1) throw InvalidArgument("lcm requires positive periods");
    std::int64_t step = v / gcd(acc, v);
    if (__builtin_mul_overflow(acc, step, &acc)) {
      throw InvalidArgument("lcm overflows 64-bit integers");
    }
  }
  return acc;
}

std::int64_t totient(std::int64_t n) {
  if (n < 1) throw InvalidArgument("totient requires n >= 1");
  std::int64_t result = n;
  std::int64_t rest = n;
  for (std::int64_t f = 2; f * f <= rest; ++f) {
    if (rest % f != 0) continue;
    while (rest % f == 0) rest /= f;
    result -= result / f;
  }
  if (rest > 1) result -= result / rest;
  return result;
}

DivisorSet divisor_set(std::int64_t n) {
  if (n < 1) throw InvalidArgument("divisor_set requires n >= 1");
  std::vector<std::int64_t> low, high;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    low.push_back(d);
    if (d != n / d) high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return {n, std::move(low)};
}

bool CoprimeHalfSet::contains(std::int64_t k) const {
  return std::binary_search(residues.begin(), residues.end(), k);
}

CoprimeHalfSet coprime_half_set(std::int64_t n) {
  if (n < 1) throw InvalidArgument("coprime_half_set requires n >= 1");
  CoprimeHalfSet out{n, {}};
  if (n <= 2) {
    out.residues = {1};
    return out;
  }
  for (std::int64_t a = 1; a <= n / 2; ++a) {
    if (std::gcd(a, n) == 1) out.residues.push_back(a);
  }
  return out;
}

std::map<std::int64_t, std::vector<std::int64_t>> period_partition(std::int64_t n) {
  if (n < 1) throw InvalidArgument("period_partition requires N >= 1");
  std::map<std::int64_t, std::vector<std::int64_t>> cells;
  for (std::int64_t d : divisor_set(n).divisors) cells[d];
  for (std::int64_t k = 0; k < n; ++k) {
    // gcd(0, N) = N, so bin 0 lands in H_1.
    cells[n / std::gcd(k, n)].push_back(k);
  }
  return cells;
}

}  // namespace ccpt
