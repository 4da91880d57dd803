#include "ccpt/signalgen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ccpt/ccps.hpp"
#include "ccpt/error.hpp"
#include "ccpt/numtheory.hpp"

namespace ccpt {

double GaussianSource::uniform_open() {
  // 53 random bits mapped to (0, 1]; never zero so log() is finite.
  return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
}

double GaussianSource::next() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double radius = std::sqrt(-2.0 * std::log(uniform_open()));
  const double angle = 2.0 * std::numbers::pi * uniform_open();
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

ComplexSignal gen_custom(const std::vector<SignalComponent>& components, std::int64_t length) {
  require_length(length, "signal length");
  ComplexSignal out(static_cast<std::size_t>(length), 0.0);
  for (const SignalComponent& c : components) {
    require_length(c.period, "component period");
    for (std::int64_t n = 0; n < length; ++n) {
      const std::int64_t r = (((c.k * n) % c.period) + c.period) % c.period;
      const double angle =
          2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(c.period) + c.phase;
      out[static_cast<std::size_t>(n)] += std::polar(c.amplitude, angle);
    }
  }
  return out;
}

ComplexSignal gen_y1() {
  using std::numbers::pi;
  return gen_custom({{10, 360, pi / 5, 1.0}, {40, 360, pi / 4, 1.0}, {50, 360, pi / 3, 1.0}}, 72);
}

ComplexSignal gen_y2(std::uint64_t seed) {
  GaussianSource source(seed);
  std::vector<double> five(5), seven(7);
  std::generate(five.begin(), five.end(), [&] { return source.next(); });
  std::generate(seven.begin(), seven.end(), [&] { return source.next(); });
  ComplexSignal out(100);
  for (std::size_t n = 0; n < out.size(); ++n) out[n] = five[n % 5] + seven[n % 7];
  return out;
}

ComplexSignal gen_tiled_ccps(std::int64_t p, std::int64_t k, std::int64_t n) {
  require_length(n, "signal length");
  const CcpsSequence seq = ccps(p, k);
  ComplexSignal out(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = seq.at(i);
  return out;
}

ComplexSignal generate(const SignalSpec& spec) {
  switch (spec.kind) {
    case SignalKind::preset_y1:
      return gen_y1();
    case SignalKind::preset_y2:
      return gen_y2(spec.seed);
    case SignalKind::tiled_ccps:
      return gen_tiled_ccps(spec.ccps_period, spec.ccps_k, spec.length);
    case SignalKind::custom_sum:
      return gen_custom(spec.components, spec.length);
  }
  throw InvalidArgument("unknown signal kind");
}

bool is_real(const ComplexSignal& x) {
  return std::all_of(x.begin(), x.end(), [](const Complex& v) { return v.imag() == 0.0; });
}

}  // namespace ccpt
