#include "ccpt/commands.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "ccpt/error.hpp"
#include "ccpt/numtheory.hpp"
#include "ccpt/signal_io.hpp"

namespace ccpt::cli {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

const char* to_string(CountUnit unit) { return unit == CountUnit::real ? "real" : "complex"; }

double resolve_threshold(std::optional<double> explicit_value) {
  const double t = explicit_value.value_or(default_threshold());
  if (!(t > 0.0 && t <= 1.0)) throw InvalidArgument("threshold must lie in (0, 1]");
  return t;
}

StrengthReport make_strengths(const PeriodStrengthProfile& p) {
  return {p.periods, p.strengths, p.fractions()};
}

InputInfo describe(const ComplexSignal& x, const std::filesystem::path& source) {
  return {static_cast<std::int64_t>(x.size()), !is_real(x), source.string()};
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  return out;
}

void write_strength_plot(const std::filesystem::path& path, const StrengthReport& s) {
  std::ofstream out = open_output(path);
  out << "period,strength,normalized\n";
  for (std::size_t i = 0; i < s.periods.size(); ++i) {
    out << s.periods[i] << ',' << format_double(s.raw[i]) << ',' << format_double(s.normalized[i]) << '\n';
  }
}

void write_coefficient_plot(const std::filesystem::path& path, const AnalysisReport& r) {
  std::ofstream out = open_output(path);
  out << "index,period,magnitude\n";
  for (std::size_t i = 0; i < r.coefficient_magnitudes.size(); ++i) {
    out << i + 1 << ',' << r.coefficient_labels[i][0] << ',' << format_double(r.coefficient_magnitudes[i]) << '\n';
  }
}

std::vector<double> magnitudes(const ComplexSignal& v) {
  std::vector<double> out(v.size());
  std::transform(v.begin(), v.end(), out.begin(), [](const Complex& c) { return std::abs(c); });
  return out;
}

std::vector<std::vector<std::int64_t>> label_rows(std::span<const ColumnLabel> labels) {
  std::vector<std::vector<std::int64_t>> rows;
  rows.reserve(labels.size());
  for (const ColumnLabel& l : labels) rows.push_back({l.period, l.k, l.shift});
  return rows;
}

void finish_profile(AnalysisReport& r, const PeriodStrengthProfile& profile) {
  r.strengths = make_strengths(profile);
  r.significant_periods = profile.significant({r.threshold});
  r.estimated_period = estimate_period(profile, {r.threshold});
}

DictionaryBasis parse_basis(const std::string& name) {
  if (name == "ccpt") return DictionaryBasis::ccpt;
  if (name == "farey") return DictionaryBasis::farey;
  if (name == "rpt") return DictionaryBasis::rpt;
  throw InvalidArgument("unknown dictionary basis '" + name + "'");
}

}  // namespace

double default_threshold() {
  const char* env = std::getenv("CCPT_THRESHOLD");
  if (env == nullptr || *env == '\0') return 0.05;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(v > 0.0 && v <= 1.0)) {
    throw InvalidArgument(std::string("CCPT_THRESHOLD must be a number in (0, 1], got '") + env + "'");
  }
  return v;
}

// ---------------------------------------------------------------------------
// JSON mapping
// ---------------------------------------------------------------------------

void to_json(json& j, const AnalysisReport& r) {
  j = json{
      {"schema", r.schema},
      {"command", r.command},
      {"method", r.method},
      {"input", {{"length", r.input.length}, {"complex", r.input.is_complex}, {"source", r.input.source}}},
      {"coefficients", {{"labels", r.coefficient_labels}, {"magnitudes", r.coefficient_magnitudes}}},
      {"strengths",
       {{"periods", r.strengths.periods}, {"raw", r.strengths.raw}, {"normalized", r.strengths.normalized}}},
      {"threshold", r.threshold},
      {"significant_periods", r.significant_periods},
      {"estimated_period", r.estimated_period},
      {"complexity",
       {{"method", r.complexity.method},
        {"multiplications", r.complexity.multiplications},
        {"unit", to_string(r.complexity.unit)},
        {"formula", r.complexity.formula}}},
  };
  if (r.frequencies) j["coefficients"]["frequencies"] = *r.frequencies;
  if (r.residual) j["residual"] = *r.residual;
  if (r.ridge) j["ridge"] = *r.ridge;
  if (r.runtime_ms) j["runtime_ms"] = *r.runtime_ms;
}

void from_json(const json& j, AnalysisReport& r) {
  j.at("schema").get_to(r.schema);
  if (r.schema != kReportSchema) throw IoError("unsupported report schema '" + r.schema + "'");
  j.at("command").get_to(r.command);
  j.at("method").get_to(r.method);
  const json& in = j.at("input");
  in.at("length").get_to(r.input.length);
  in.at("complex").get_to(r.input.is_complex);
  in.at("source").get_to(r.input.source);
  const json& coeffs = j.at("coefficients");
  coeffs.at("labels").get_to(r.coefficient_labels);
  coeffs.at("magnitudes").get_to(r.coefficient_magnitudes);
  r.frequencies.reset();
  if (coeffs.contains("frequencies")) r.frequencies = coeffs.at("frequencies").get<std::vector<double>>();
  const json& s = j.at("strengths");
  s.at("periods").get_to(r.strengths.periods);
  s.at("raw").get_to(r.strengths.raw);
  s.at("normalized").get_to(r.strengths.normalized);
  j.at("threshold").get_to(r.threshold);
  j.at("significant_periods").get_to(r.significant_periods);
  j.at("estimated_period").get_to(r.estimated_period);
  const json& c = j.at("complexity");
  c.at("method").get_to(r.complexity.method);
  c.at("multiplications").get_to(r.complexity.multiplications);
  r.complexity.unit = c.at("unit").get<std::string>() == "real" ? CountUnit::real : CountUnit::complex;
  c.at("formula").get_to(r.complexity.formula);
  auto optional_number = [&j](const char* key) -> std::optional<double> {
    if (!j.contains(key)) return std::nullopt;
    return j.at(key).get<double>();
  };
  r.residual = optional_number("residual");
  r.ridge = optional_number("ridge");
  r.runtime_ms = optional_number("runtime_ms");
}

// ---------------------------------------------------------------------------
// gen
// ---------------------------------------------------------------------------

json cmd_gen(const GenOptions& opts, std::ostream& out) {
  const int sources = !opts.preset.empty() + opts.tiled_ccps.has_value() + !opts.components.empty();
  if (sources != 1) throw InvalidArgument("choose exactly one of --preset, --tiled-ccps, --component");

  SignalSpec spec;
  json meta{{"schema", kSignalSchema}};
  if (opts.preset == "y1") {
    spec.kind = SignalKind::preset_y1;
    meta["kind"] = "preset-y1";
  } else if (opts.preset == "y2") {
    spec.kind = SignalKind::preset_y2;
    spec.seed = opts.seed;
    meta["kind"] = "preset-y2";
    meta["seed"] = opts.seed;
    meta["rng"] = kGaussianAlgorithm;
  } else if (!opts.preset.empty()) {
    throw InvalidArgument("unknown preset '" + opts.preset + "'");
  } else if (opts.tiled_ccps) {
    if (!opts.length) throw InvalidArgument("--tiled-ccps needs --len");
    spec.kind = SignalKind::tiled_ccps;
    spec.ccps_period = opts.tiled_ccps->first;
    spec.ccps_k = opts.tiled_ccps->second;
    spec.length = *opts.length;
    meta["kind"] = "tiled-ccps";
    meta["period"] = spec.ccps_period;
    meta["k"] = spec.ccps_k;
  } else {
    if (!opts.length) throw InvalidArgument("--component needs --len");
    spec.kind = SignalKind::custom_sum;
    spec.components = opts.components;
    spec.length = *opts.length;
    meta["kind"] = "custom-sum";
    json comps = json::array();
    for (const SignalComponent& c : opts.components) {
      comps.push_back({{"k", c.k}, {"period", c.period}, {"phase", c.phase}, {"amplitude", c.amplitude}});
    }
    meta["components"] = comps;
  }
  if (opts.length && (spec.kind == SignalKind::preset_y1 || spec.kind == SignalKind::preset_y2)) {
    throw InvalidArgument("presets have a fixed length; drop --len");
  }

  const ComplexSignal x = generate(spec);
  meta["length"] = x.size();
  meta["complex"] = !is_real(x);

  if (opts.output) {
    write_signal_csv(*opts.output, x);
    std::filesystem::path sidecar = *opts.output;
    sidecar += ".json";
    std::ofstream side = open_output(sidecar);
    side << meta.dump(2) << '\n';
  } else {
    write_signal_csv(out, x);
  }
  return meta;
}

// ---------------------------------------------------------------------------
// analyze
// ---------------------------------------------------------------------------

AnalysisReport cmd_analyze(const AnalyzeOptions& opts) {
  const ComplexSignal x = read_signal_csv(opts.input);
  const auto n = static_cast<std::int64_t>(x.size());

  AnalysisReport r;
  r.command = "analyze";
  r.method = opts.method;
  r.input = describe(x, opts.input);
  r.threshold = resolve_threshold(opts.threshold);

  PeriodStrengthProfile profile;
  const auto start = Clock::now();
  if (opts.method == "ccpt" || opts.method == "rpt") {
    const bool ccpt = opts.method == "ccpt";
    const NestedPeriodicMatrix t = ccpt ? build_t(n) : build_rpt(n);
    const CoefficientVector beta = ccpt ? ccpt_forward(x, t) : rpt_forward(x, t);
    profile = divisor_strengths(beta, t);
    r.coefficient_labels = label_rows(t.labels());
    r.coefficient_magnitudes = magnitudes(beta.values);
    if (ccpt) r.frequencies = frequency_labels(t, opts.frame);
  } else if (opts.method == "dft") {
    const ComplexSignal spectrum = dft(x);
    profile = dft_divisor_strengths(spectrum);
    r.coefficient_magnitudes = magnitudes(spectrum);
    const double frame = opts.frame.value_or(static_cast<double>(n));
    std::vector<double> freqs;
    for (std::int64_t k = 0; k < n; ++k) {
      r.coefficient_labels.push_back({n / std::gcd(k, n), k, 0});
      freqs.push_back(static_cast<double>(k) / static_cast<double>(n) * frame);
    }
    r.frequencies = std::move(freqs);
  } else {
    throw InvalidArgument("unknown method '" + opts.method + "' (ccpt, rpt, dft)");
  }
  if (opts.timing) r.runtime_ms = elapsed_ms(start);
  r.complexity = complexity_estimate(opts.method, n);

  r.strengths = make_strengths(profile);
  if (opts.plot_coefficients) write_coefficient_plot(*opts.plot_coefficients, r);
  if (opts.plot_strengths) write_strength_plot(*opts.plot_strengths, r.strengths);
  finish_profile(r, profile);
  return r;
}

// ---------------------------------------------------------------------------
// scan
// ---------------------------------------------------------------------------

json cmd_scan(const ScanOptions& opts) {
  const ComplexSignal x = read_signal_csv(opts.input);
  const double threshold = resolve_threshold(opts.threshold);
  const ScanResult scan = range_scan(x, opts.n1, {threshold}, std::max(1u, opts.jobs));

  json rows = json::array();
  for (const ScanRecord& rec : scan.records) {
    rows.push_back({{"length", rec.length},
                    {"detected", rec.detected},
                    {"periods", rec.profile.periods},
                    {"strengths", rec.profile.strengths}});
  }
  json visits = json::object();
  for (const auto& [p, count] : scan.subspace_visits) visits[std::to_string(p)] = count;

  const auto n = static_cast<std::int64_t>(x.size());
  const ComplexityReport cost = complexity_estimate("scan-ccpt", n, opts.n1);
  json result{{"schema", kScanSchema},
              {"input", {{"length", n}, {"complex", !is_real(x)}, {"source", opts.input.string()}}},
              {"n1", scan.first_length},
              {"n", scan.last_length},
              {"threshold", threshold},
              {"rows", rows},
              {"subspace_visits", visits},
              {"duplicated_projections", scan.duplicated_projections},
              {"complexity", {{"method", cost.method}, {"multiplications", cost.multiplications},
                              {"unit", to_string(cost.unit)}, {"formula", cost.formula}}}};

  if (opts.csv) {
    std::ofstream out = open_output(*opts.csv);
    out << "length,detected\n";
    for (const ScanRecord& rec : scan.records) {
      out << rec.length << ',';
      for (std::size_t i = 0; i < rec.detected.size(); ++i) out << (i ? " " : "") << rec.detected[i];
      out << '\n';
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// dict
// ---------------------------------------------------------------------------

AnalysisReport cmd_dict(const DictOptions& opts) {
  const ComplexSignal x = read_signal_csv(opts.input);
  const auto n = static_cast<std::int64_t>(x.size());
  const std::int64_t p_max = opts.p_max.value_or(default_pmax(n));
  if (p_max < 1) throw InvalidArgument("--pmax must be >= 1");
  const DictionaryBasis basis = parse_basis(opts.basis);

  AnalysisReport r;
  r.command = "dict";
  r.method = std::string("dict-") + to_string(basis);
  r.input = describe(x, opts.input);
  r.threshold = resolve_threshold(opts.threshold);

  const auto start = Clock::now();
  const DictionaryModel model = build_dictionary(n, p_max, basis, power_penalty(opts.penalty_exponent));
  const DictionarySolution sol = dictionary_solve(model, x);
  if (opts.timing) r.runtime_ms = elapsed_ms(start);

  r.coefficient_labels = label_rows(model.labels);
  r.coefficient_magnitudes = magnitudes(sol.coefficients);
  if (basis != DictionaryBasis::rpt) {
    const double frame = opts.frame.value_or(static_cast<double>(n));
    std::vector<double> freqs;
    for (const ColumnLabel& l : model.labels) {
      freqs.push_back(static_cast<double>(l.k % l.period) / static_cast<double>(l.period) * frame);
    }
    r.frequencies = std::move(freqs);
  }
  r.residual = sol.residual;
  r.ridge = sol.ridge;
  r.complexity = complexity_estimate(r.method, n, p_max);

  const PeriodStrengthProfile profile = dictionary_strength_profile(sol, model);
  r.strengths = make_strengths(profile);
  if (opts.plot_strengths) write_strength_plot(*opts.plot_strengths, r.strengths);
  finish_profile(r, profile);
  return r;
}

// ---------------------------------------------------------------------------
// compare
// ---------------------------------------------------------------------------

json cmd_compare(const CompareOptions& opts) {
  const ComplexSignal x = read_signal_csv(opts.input);
  const auto n = static_cast<std::int64_t>(x.size());
  const double threshold = resolve_threshold(opts.threshold);

  auto period_or_null = [threshold](const PeriodStrengthProfile& p) -> json {
    try {
      return estimate_period(p, {threshold});
    } catch (const NoPeriodicContent&) {
      return nullptr;
    }
  };
  auto row = [&](const std::string& name, bool divisor, bool non_divisor, bool frequency,
                 const ComplexityReport& cost, double ms, const PeriodStrengthProfile& p) {
    json j{{"method", name},
           {"divisor_period", divisor},
           {"non_divisor_period", non_divisor},
           {"frequency", frequency},
           {"multiplications", cost.multiplications},
           {"unit", to_string(cost.unit)},
           {"formula", cost.formula},
           {"significant_periods", p.significant({threshold})},
           {"estimated_period", period_or_null(p)}};
    if (opts.timing) j["wall_clock_ms"] = ms;
    return j;
  };

  json transforms = json::array();
  {
    auto start = Clock::now();
    const PeriodStrengthProfile p = dft_divisor_strengths(dft(x));
    transforms.push_back(row("DFT", true, false, true, complexity_estimate("dft", n), elapsed_ms(start), p));
  }
  {
    auto start = Clock::now();
    const NestedPeriodicMatrix t = build_rpt(n);
    const PeriodStrengthProfile p = divisor_strengths(rpt_forward(x, t), t);
    transforms.push_back(row("RPT", true, false, false, complexity_estimate("rpt", n), elapsed_ms(start), p));
  }
  {
    auto start = Clock::now();
    const NestedPeriodicMatrix t = build_t(n);
    const PeriodStrengthProfile p = divisor_strengths(ccpt_forward(x, t), t);
    transforms.push_back(row("CCPT", true, false, true, complexity_estimate("ccpt", n), elapsed_ms(start), p));
  }

  json result{{"schema", kCompareSchema},
              {"input", {{"length", n}, {"complex", !is_real(x)}, {"source", opts.input.string()}}},
              {"threshold", threshold},
              {"transforms", transforms}};

  if (opts.dictionaries) {
    const std::int64_t p_max = opts.p_max.value_or(default_pmax(n));
    json dicts = json::array();
    for (auto [basis, name, freq] : {std::tuple{DictionaryBasis::farey, "Farey dictionary", true},
                                     std::tuple{DictionaryBasis::rpt, "RPT dictionary", false},
                                     std::tuple{DictionaryBasis::ccpt, "CCPT dictionary", true}}) {
      auto start = Clock::now();
      const DictionaryModel model = build_dictionary(n, p_max, basis);
      const DictionarySolution sol = dictionary_solve(model, x);
      const double ms = elapsed_ms(start);
      const std::string method = std::string("dict-") + to_string(basis);
      dicts.push_back(row(name, true, true, freq, complexity_estimate(method, n, p_max), ms, sol.strengths));
    }
    result["p_max"] = p_max;
    result["dictionaries"] = dicts;
  }
  return result;
}

std::string render_compare_table(const json& comparison) {
  std::ostringstream os;
  auto mark = [](const json& b) { return b.get<bool>() ? "yes" : "no"; };
  auto section = [&](const json& rows) {
    os << std::left << std::setw(18) << "method" << std::setw(9) << "divisor" << std::setw(13) << "non-divisor"
       << std::setw(11) << "frequency" << std::setw(26) << "multiplications" << std::setw(10) << "period"
       << "wall-clock\n";
    for (const json& r : rows) {
      std::ostringstream mult;
      mult << r["multiplications"].get<std::int64_t>() << " " << r["unit"].get<std::string>() << " ("
           << r["formula"].get<std::string>() << ")";
      std::ostringstream period;
      if (r["estimated_period"].is_null()) {
        period << "-";
      } else {
        period << r["estimated_period"].get<std::int64_t>();
      }
      std::ostringstream clock;
      if (r.contains("wall_clock_ms")) {
        clock << std::fixed << std::setprecision(3) << r["wall_clock_ms"].get<double>() << " ms";
      } else {
        clock << "-";
      }
      os << std::left << std::setw(18) << r["method"].get<std::string>() << std::setw(9) << mark(r["divisor_period"])
         << std::setw(13) << mark(r["non_divisor_period"]) << std::setw(11) << mark(r["frequency"])
         << std::setw(26) << mult.str() << std::setw(10) << period.str() << clock.str() << '\n';
    }
  };
  os << "N = " << comparison["input"]["length"].get<std::int64_t>() << "\n";
  section(comparison["transforms"]);
  if (comparison.contains("dictionaries")) {
    os << "\np_max = " << comparison["p_max"].get<std::int64_t>() << "\n";
    section(comparison["dictionaries"]);
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// basis
// ---------------------------------------------------------------------------

void cmd_basis(const BasisOptions& opts, std::ostream& out) {
  require_length(opts.n, "N");
  Eigen::MatrixXd m;
  std::vector<ColumnLabel> labels;
  if (opts.block) {
    if (*opts.block < 1 || opts.n % *opts.block != 0) {
      throw InvalidArgument("--block " + std::to_string(*opts.block) + " is not a divisor of " +
                            std::to_string(opts.n));
    }
    BasisBlock b = opts.rpt ? ramanujan_block(opts.n, *opts.block) : basis_block(opts.n, *opts.block);
    m = std::move(b.matrix);
    labels = std::move(b.labels);
  } else {
    const NestedPeriodicMatrix t = opts.rpt ? build_rpt(opts.n) : build_t(opts.n);
    m = t.matrix();
    labels.assign(t.labels().begin(), t.labels().end());
  }
  std::vector<std::string> header;
  for (const ColumnLabel& l : labels) {
    header.push_back(std::to_string(l.period) + ":" + std::to_string(l.k) + ":" + std::to_string(l.shift));
  }
  write_matrix_csv(out, m, header);
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const IoError*>(&e)) return kIo;
  if (dynamic_cast<const NumericalError*>(&e) || dynamic_cast<const NoPeriodicContent*>(&e)) return kNumerical;
  if (dynamic_cast<const InvalidArgument*>(&e)) return kUsage;
  if (dynamic_cast<const nlohmann::json::exception*>(&e)) return kIo;
  return kNumerical;
}

}  // namespace ccpt::cli
