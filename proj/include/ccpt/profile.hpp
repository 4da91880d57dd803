#pragma once

#include <cstdint>
#include <vector>

namespace ccpt {

// A candidate period counts as significant when its strength reaches
// `fraction` of the strongest candidate.
struct ThresholdPolicy {
  double fraction = 0.05;
};

// Strength (absolute square sum of coefficients) per candidate period.
struct PeriodStrengthProfile {
  std::vector<std::int64_t> periods;
  std::vector<double> strengths;

  double total() const;
  double max_strength() const;
  double strength(std::int64_t period) const;  // 0 when absent
  // strengths / total(); all zeros when total() == 0.
  std::vector<double> fractions() const;
  std::vector<std::int64_t> significant(ThresholdPolicy policy = {}) const;
};

// lcm of the significant periods. Throws NoPeriodicContent when nothing
// clears the threshold (e.g. an all-zero profile).
std::int64_t estimate_period(const PeriodStrengthProfile& profile, ThresholdPolicy policy = {});

}  // namespace ccpt
