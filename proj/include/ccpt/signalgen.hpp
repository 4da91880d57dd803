#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ccpt/linalg.hpp"

namespace ccpt {

// Identifier of the Gaussian sampler, recorded in signal metadata.
inline constexpr const char* kGaussianAlgorithm = "mt19937_64/box-muller";

// Portable standard-normal sampler: identical streams on every platform,
// unlike std::normal_distribution whose algorithm is implementation-defined.
class GaussianSource {
 public:
  explicit GaussianSource(std::uint64_t seed) : engine_(seed) {}
  double next();

 private:
  double uniform_open();  // (0, 1]
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// One term amplitude * e^{j (2 pi k n / period + phase)}.
struct SignalComponent {
  std::int64_t k = 1;
  std::int64_t period = 1;
  double phase = 0.0;
  double amplitude = 1.0;
};

enum class SignalKind { preset_y1, preset_y2, tiled_ccps, custom_sum };

struct SignalSpec {
  SignalKind kind = SignalKind::preset_y1;
  std::int64_t length = 72;
  std::vector<SignalComponent> components;  // custom_sum
  std::int64_t ccps_period = 1;             // tiled_ccps
  std::int64_t ccps_k = 1;
  std::uint64_t seed = 0;
};

// Three unit exponentials at 10, 40 and 50 cycles per 360 samples with
// phases pi/5, pi/4, pi/3; 72 samples, period 36.
ComplexSignal gen_y1();

// Sum of a 5-periodic and a 7-periodic Gaussian pattern over 100 samples.
// The 5 samples of the first pattern are drawn before the 7 of the second.
ComplexSignal gen_y2(std::uint64_t seed);

// c_{p,k} repeated to length n, last repetition truncated.
ComplexSignal gen_tiled_ccps(std::int64_t p, std::int64_t k, std::int64_t n);

ComplexSignal gen_custom(const std::vector<SignalComponent>& components, std::int64_t length);

ComplexSignal generate(const SignalSpec& spec);

// True when every imaginary part is exactly zero.
bool is_real(const ComplexSignal& x);

}  // namespace ccpt
