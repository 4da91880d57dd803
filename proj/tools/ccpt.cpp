#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "ccpt/commands.hpp"
#include "ccpt/error.hpp"

using namespace ccpt;
using namespace ccpt::cli;

namespace {

void emit_json(const nlohmann::json& j, const std::optional<std::filesystem::path>& path) {
  const std::string text = j.dump(2) + "\n";
  if (!path) {
    std::cout << text;
    return;
  }
  std::ofstream out(*path);
  if (!out) throw IoError("cannot write " + path->string());
  out << text;
}

std::vector<SignalComponent> parse_components(const std::vector<std::string>& specs) {
  std::vector<SignalComponent> out;
  for (const std::string& s : specs) {
    std::vector<double> v;
    std::stringstream ss(s);
    std::string field;
    while (std::getline(ss, field, ',')) {
      try {
        std::size_t used = 0;
        v.push_back(std::stod(field, &used));
        if (used != field.size()) throw std::invalid_argument(field);
      } catch (const std::logic_error&) {
        throw InvalidArgument("bad --component '" + s + "' (want k,period[,phase[,amplitude]])");
      }
    }
    if (v.size() < 2 || v.size() > 4) throw InvalidArgument("bad --component '" + s + "' (want k,period[,phase[,amplitude]])");
    SignalComponent c;
    c.k = static_cast<std::int64_t>(v[0]);
    c.period = static_cast<std::int64_t>(v[1]);
    if (v.size() > 2) c.phase = v[2];
    if (v.size() > 3) c.amplitude = v[3];
    out.push_back(c);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Period and frequency analysis with complex conjugate pair sums"};
  app.require_subcommand(1);

  // gen
  GenOptions gen;
  std::vector<std::int64_t> tiled;
  std::vector<std::string> components;
  std::int64_t gen_len = 0;
  std::string gen_out;
  auto* g = app.add_subcommand("gen", "Generate a test signal as CSV");
  g->add_option("--preset", gen.preset, "Built-in signal: y1 or y2")->check(CLI::IsMember({"y1", "y2"}));
  g->add_option("--seed", gen.seed, "Noise seed for y2");
  g->add_option("--tiled-ccps", tiled, "p,k: c_{p,k} tiled to --len samples")->delimiter(',')->expected(2);
  g->add_option("--component", components, "k,period[,phase[,amplitude]] complex exponential term (repeatable)");
  g->add_option("--len", gen_len, "Signal length");
  g->add_option("-o,--output", gen_out, "Output CSV (a .json sidecar is written next to it)");

  // analyze
  AnalyzeOptions an;
  std::string an_json;
  bool an_no_timing = false;
  std::string an_plot_c, an_plot_s;
  auto* a = app.add_subcommand("analyze", "Full-length transform and divisor strengths");
  a->add_option("input", an.input, "Signal CSV")->required();
  a->add_option("--method", an.method, "ccpt, rpt or dft")->check(CLI::IsMember({"ccpt", "rpt", "dft"}));
  a->add_option("--threshold", an.threshold, "Significance fraction of the strongest period");
  a->add_option("--frame", an.frame, "Samples per unit time for frequency labels");
  a->add_flag("--no-timing", an_no_timing, "Omit runtime from the report");
  a->add_option("--plot-coefficients", an_plot_c, "Write index,period,magnitude CSV");
  a->add_option("--plot-strengths", an_plot_s, "Write period,strength CSV");
  a->add_option("--json", an_json, "Write the report here instead of stdout");

  // scan
  ScanOptions sc;
  std::string sc_json, sc_csv;
  auto* s = app.add_subcommand("scan", "Analyse every prefix length N1..N");
  s->add_option("input", sc.input, "Signal CSV")->required();
  s->add_option("--n1", sc.n1, "First prefix length")->required();
  s->add_option("--threshold", sc.threshold, "Significance fraction of the strongest period");
  s->add_option("--jobs", sc.jobs, "Worker threads")->check(CLI::PositiveNumber);
  s->add_option("--csv", sc_csv, "Also write length,detected CSV");
  s->add_option("--json", sc_json, "Write the result here instead of stdout");

  // dict
  DictOptions di;
  std::string di_json, di_plot_s;
  bool di_no_timing = false;
  auto* d = app.add_subcommand("dict", "Penalised dictionary period estimation");
  d->add_option("input", di.input, "Signal CSV")->required();
  d->add_option("--pmax", di.p_max, "Largest candidate period");
  d->add_option("--penalty-exponent", di.penalty_exponent, "Penalty p^e per column");
  d->add_option("--basis", di.basis, "ccpt, farey or rpt")->check(CLI::IsMember({"ccpt", "farey", "rpt"}));
  d->add_option("--threshold", di.threshold, "Significance fraction of the strongest period");
  d->add_option("--frame", di.frame, "Samples per unit time for frequency labels");
  d->add_flag("--no-timing", di_no_timing, "Omit runtime from the report");
  d->add_option("--plot-strengths", di_plot_s, "Write period,strength CSV");
  d->add_option("--json", di_json, "Write the report here instead of stdout");

  // compare
  CompareOptions co;
  std::string co_json;
  bool co_no_timing = false;
  bool co_as_json = false;
  auto* c = app.add_subcommand("compare", "DFT / RPT / CCPT capability and cost table");
  c->add_option("input", co.input, "Signal CSV")->required();
  c->add_flag("--dict", co.dictionaries, "Add Farey, RPT and CCPT dictionary rows");
  c->add_option("--pmax", co.p_max, "Largest candidate period for --dict");
  c->add_option("--threshold", co.threshold, "Significance fraction of the strongest period");
  c->add_flag("--no-timing", co_no_timing, "Omit wall-clock columns");
  c->add_flag("--as-json", co_as_json, "Print JSON instead of a table");
  c->add_option("--json", co_json, "Also write JSON here");

  // basis
  BasisOptions ba;
  std::string ba_out;
  auto* b = app.add_subcommand("basis", "Dump T_N or one period block as CSV");
  b->add_option("n", ba.n, "Matrix size")->required();
  b->add_option("--block", ba.block, "Only the columns of period p");
  b->add_flag("--rpt", ba.rpt, "Ramanujan-sum basis instead");
  b->add_option("-o,--output", ba_out, "Output CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  auto path_or_none = [](const std::string& p) -> std::optional<std::filesystem::path> {
    if (p.empty()) return std::nullopt;
    return p;
  };

  try {
    if (g->parsed()) {
      if (!tiled.empty()) gen.tiled_ccps = std::pair{tiled[0], tiled[1]};
      gen.components = parse_components(components);
      if (g->count("--len")) gen.length = gen_len;
      gen.output = path_or_none(gen_out);
      cmd_gen(gen, std::cout);
    } else if (a->parsed()) {
      an.timing = !an_no_timing;
      an.plot_coefficients = path_or_none(an_plot_c);
      an.plot_strengths = path_or_none(an_plot_s);
      emit_json(cmd_analyze(an), path_or_none(an_json));
    } else if (s->parsed()) {
      sc.csv = path_or_none(sc_csv);
      emit_json(cmd_scan(sc), path_or_none(sc_json));
    } else if (d->parsed()) {
      di.timing = !di_no_timing;
      di.plot_strengths = path_or_none(di_plot_s);
      emit_json(cmd_dict(di), path_or_none(di_json));
    } else if (c->parsed()) {
      co.timing = !co_no_timing;
      const nlohmann::json result = cmd_compare(co);
      if (!co_json.empty()) emit_json(result, path_or_none(co_json));
      if (co_as_json) {
        std::cout << result.dump(2) << '\n';
      } else {
        std::cout << render_compare_table(result);
      }
    } else if (b->parsed()) {
      if (ba_out.empty()) {
        cmd_basis(ba, std::cout);
      } else {
        std::ofstream out(ba_out);
        if (!out) throw IoError("cannot write " + ba_out);
        cmd_basis(ba, out);
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "ccpt: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kOk;
}
