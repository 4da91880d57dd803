#pragma once

// Command implementations behind the `ccpt` binary. Each command takes a
// plain options struct so it can be driven from tests without a shell.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ccpt/baselines.hpp"
#include "ccpt/estimation.hpp"
#include "ccpt/signalgen.hpp"

namespace ccpt::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kIo = 3, kNumerical = 4 };

inline constexpr const char* kReportSchema = "ccpt-report/1";
inline constexpr const char* kScanSchema = "ccpt-scan/1";
inline constexpr const char* kSignalSchema = "ccpt-signal/1";
inline constexpr const char* kCompareSchema = "ccpt-compare/1";

// Default significance fraction, 0.05 unless CCPT_THRESHOLD holds a number
// in (0, 1].
double default_threshold();

struct InputInfo {
  std::int64_t length = 0;
  bool is_complex = false;
  std::string source;
};

struct StrengthReport {
  std::vector<std::int64_t> periods;
  std::vector<double> raw;
  std::vector<double> normalized;  // raw / sum(raw)
};

// Result of `analyze` and `dict`.
struct AnalysisReport {
  std::string schema = kReportSchema;
  std::string command;
  std::string method;
  InputInfo input;
  std::vector<std::vector<std::int64_t>> coefficient_labels;  // [p, k, shift]
  std::vector<double> coefficient_magnitudes;
  std::optional<std::vector<double>> frequencies;
  StrengthReport strengths;
  double threshold = 0.05;
  std::vector<std::int64_t> significant_periods;
  std::int64_t estimated_period = 0;
  std::optional<double> residual;
  std::optional<double> ridge;
  std::optional<double> runtime_ms;
  ComplexityReport complexity;
};

void to_json(nlohmann::json& j, const AnalysisReport& r);
void from_json(const nlohmann::json& j, AnalysisReport& r);

struct GenOptions {
  std::string preset;                                     // "y1" | "y2" | ""
  std::optional<std::pair<std::int64_t, std::int64_t>> tiled_ccps;  // (p, k)
  std::vector<SignalComponent> components;                // custom sum
  std::optional<std::int64_t> length;
  std::uint64_t seed = 0;
  std::optional<std::filesystem::path> output;            // stdout when absent
};

// Writes the CSV (and, with an output path, a "<output>.json" metadata
// sidecar). Returns the metadata.
nlohmann::json cmd_gen(const GenOptions& opts, std::ostream& out);

struct AnalyzeOptions {
  std::filesystem::path input;
  std::string method = "ccpt";  // ccpt | rpt | dft
  std::optional<double> threshold;
  std::optional<double> frame;  // samples per unit time
  bool timing = true;
  std::optional<std::filesystem::path> plot_coefficients;
  std::optional<std::filesystem::path> plot_strengths;
};

AnalysisReport cmd_analyze(const AnalyzeOptions& opts);

struct ScanOptions {
  std::filesystem::path input;
  std::int64_t n1 = 3;
  std::optional<double> threshold;
  unsigned jobs = 1;
  std::optional<std::filesystem::path> csv;
};

nlohmann::json cmd_scan(const ScanOptions& opts);

struct DictOptions {
  std::filesystem::path input;
  std::optional<std::int64_t> p_max;
  double penalty_exponent = 2.0;
  std::string basis = "ccpt";  // ccpt | farey | rpt
  std::optional<double> threshold;
  std::optional<double> frame;
  bool timing = true;
  std::optional<std::filesystem::path> plot_strengths;
};

AnalysisReport cmd_dict(const DictOptions& opts);

struct CompareOptions {
  std::filesystem::path input;
  bool dictionaries = false;
  std::optional<std::int64_t> p_max;
  std::optional<double> threshold;
  bool timing = true;
};

nlohmann::json cmd_compare(const CompareOptions& opts);
std::string render_compare_table(const nlohmann::json& comparison);

struct BasisOptions {
  std::int64_t n = 1;
  std::optional<std::int64_t> block;
  bool rpt = false;
};

void cmd_basis(const BasisOptions& opts, std::ostream& out);

// Maps library exceptions onto the documented exit codes.
int exit_code_for(const std::exception& e);

}  // namespace ccpt::cli
