#include "ccpt/profile.hpp"

#include <algorithm>
#include <numeric>

#include "ccpt/error.hpp"
#include "ccpt/numtheory.hpp"

namespace ccpt {

double PeriodStrengthProfile::total() const {
  return std::accumulate(strengths.begin(), strengths.end(), 0.0);
}

double PeriodStrengthProfile::max_strength() const {
  if (strengths.empty()) return 0.0;
  return *std::max_element(strengths.begin(), strengths.end());
}

double PeriodStrengthProfile::strength(std::int64_t period) const {
  for (std::size_t i = 0; i < periods.size(); ++i) {
    if (periods[i] == period) return strengths[i];
  }
  return 0.0;
}

std::vector<double> PeriodStrengthProfile::fractions() const {
  const double sum = total();
  std::vector<double> out(strengths.size(), 0.0);
  if (sum <= 0.0) return out;
  std::transform(strengths.begin(), strengths.end(), out.begin(),
                 [sum](double s) { return s / sum; });
  return out;
}

std::vector<std::int64_t> PeriodStrengthProfile::significant(ThresholdPolicy policy) const {
  std::vector<std::int64_t> out;
  const double peak = max_strength();
  if (!(peak > 0.0)) return out;
  for (std::size_t i = 0; i < periods.size(); ++i) {
    if (strengths[i] >= policy.fraction * peak) out.push_back(periods[i]);
  }
  return out;
}

std::int64_t estimate_period(const PeriodStrengthProfile& profile, ThresholdPolicy policy) {
  if (profile.periods.empty()) throw InvalidArgument("empty strength profile");
  const std::vector<std::int64_t> hits = profile.significant(policy);
  if (hits.empty()) throw NoPeriodicContent("no periodic content above threshold");
  return lcm(hits);
}

}  // namespace ccpt
