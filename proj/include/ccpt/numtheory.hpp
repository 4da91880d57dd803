#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace ccpt {

// Largest signal length / period the library accepts. Keeps every
// totient sum and lcm of admissible periods inside 64 bits.
inline constexpr std::int64_t kMaxLength = 1 << 16;

std::int64_t gcd(std::int64_t a, std::int64_t b);

// Least common multiple of a nonempty set of positive integers.
// Throws InvalidArgument on an empty list and on 64-bit overflow.
std::int64_t lcm(std::span<const std::int64_t> values);

std::int64_t totient(std::int64_t n);

struct DivisorSet {
  std::int64_t n = 1;
  std::vector<std::int64_t> divisors;  // ascending, 1 and n included
};

DivisorSet divisor_set(std::int64_t n);

// A_n: residues 1 <= a <= n/2 coprime to n; {1} for n in {1, 2}.
struct CoprimeHalfSet {
  std::int64_t n = 1;
  std::vector<std::int64_t> residues;

  bool contains(std::int64_t k) const;
};

CoprimeHalfSet coprime_half_set(std::int64_t n);

// H_d = {k in [0, N) : gcd(k, N) = N / d} for every divisor d of N.
// Exponential bins in H_d have exact period d.
std::map<std::int64_t, std::vector<std::int64_t>> period_partition(std::int64_t n);

// Throws InvalidArgument unless 1 <= n <= kMaxLength.
void require_length(std::int64_t n, const char* what);

}  // namespace ccpt
