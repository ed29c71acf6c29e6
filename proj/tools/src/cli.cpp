#include "wpd_cli/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "wpd/closed_forms.hpp"
#include "wpd/error.hpp"
#include "wpd/io.hpp"
#include "wpd/measures.hpp"
#include "wpd/rng.hpp"

namespace wpd::cli {

namespace {

// Full double precision so downstream plotting is lossless.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) { out_ << std::setprecision(17); }

  template <class... Ts>
  void row(const Ts&... values) {
    bool first = true;
    ((out_ << (first ? "" : ",") << values, first = false), ...);
    out_ << '\n';
  }

  void comment(const std::string& text) { out_ << "# " << text << '\n'; }

 private:
  std::ostream& out_;
};

struct Ternary {
  double x;
  double y;
};

// Barycentric (P, V, S) -> plane, with P at (0, 0), V at (1, 0), S at (1/2, sqrt3/2).
Ternary ternary(double v, double s) { return {v + 0.5 * s, 0.5 * std::numbers::sqrt3 * s}; }

std::string provenance(const std::string& figure, const FigureOptions& o, const std::string& grid) {
  std::ostringstream s;
  s << "wpd " << kVersion << " figure=" << figure << " seed=" << o.seed << " f=" << o.f_name
    << " grid=" << grid << " mode=" << (o.physical ? "physical" : "reproduction");
  return s.str();
}

const char* sign_flag(double p, double v, double s) {
  return (p < -1e-12 || v < -1e-12 || s < -1e-12) ? "negative" : "ok";
}

void figure0(const FigureOptions& o, std::ostream& out) {
  const auto f = FunctionRegistry{}.get(o.f_name);
  const std::size_t n = o.dim;
  const double norm = static_cast<double>(n) - 1.0;
  CsvWriter csv(out);
  csv.comment(provenance("fig0", o, "dim=" + std::to_string(n) + ",cloud=" +
                                        std::to_string(o.samples)));
  csv.row("label", "P", "V", "S_normalized", "x", "y");
  const auto emit = [&](const std::string& label, const DensityMatrix& rho) {
    const auto r = duality_report(rho, f);
    const double s = r.entropy / norm;
    const auto t = ternary(r.visibility, s);
    csv.row(label, r.predictability, r.visibility, s, t.x, t.y);
  };
  emit("basis", named_state("basis", n));
  if (n == 4) {
    const char* bell_names[] = {"bell-phi+", "bell-phi-", "bell-psi+", "bell-psi-"};
    for (std::size_t k = 0; k < 4; ++k) emit(bell_names[k], named_state("bell", 4, k));
  }
  emit("maximally-coherent", named_state("maximally-coherent", n));
  emit("maximally-mixed", named_state("maximally-mixed", n));
  for (std::size_t k = 0; k < o.samples; ++k) {
    const auto seed = mix_seed(o.seed, 0xf160, k);
    switch (k % 4) {
      case 0: emit("random-mixed", random_mixed(n, seed)); break;
      case 1: emit("random-pure", random_pure(n, seed)); break;
      case 2: emit("incoherent", dephase(random_mixed(n, seed))); break;
      default: {
        // Uniform diagonal: lies on the P = 0 edge.
        const double w = Rng(seed).uniform();
        const Matrix m = w * named_state("maximally-mixed", n).matrix() +
                         (1.0 - w) * random_maximally_coherent(n, mix_seed(seed, 2)).matrix();
        emit("uniform-diagonal", DensityMatrix::from_matrix(m));
      }
    }
  }
}

void figure1(const FigureOptions& o, std::ostream& out) {
  const auto f = FunctionRegistry{}.get(o.f_name);
  CsvWriter csv(out);
  csv.comment(provenance("fig1", o, "qubits=" + std::to_string(o.samples)));
  csv.row("index", "seed", "P", "V", "S_normalized", "x", "y");
  for (std::size_t k = 0; k < o.samples; ++k) {
    const auto seed = mix_seed(o.seed, 0xf161, k);
    const auto r = duality_report(random_mixed(2, seed), f);
    const auto t = ternary(r.visibility, r.entropy);
    csv.row(k, seed, r.predictability, r.visibility, r.entropy, t.x, t.y);
  }
}

constexpr int kFig2Points = 200;
constexpr int kFig3Points = 51;

void werner_row(CsvWriter& csv, int n, double p, double m, const FigureOptions& o,
                const MonotoneFunction& f) {
  const double paths = static_cast<double>(n) * n;
  double pp = 0.0, vv = 0.0, ss = 0.0;
  if (o.physical) {
    const auto r = duality_report(werner(n, m).state, f);
    pp = r.predictability;
    vv = r.visibility;
    ss = r.entropy / (paths - 1.0);
  } else {
    const auto c = closed_form::werner_wy(n, p, m);
    pp = c.predictability;
    vv = c.visibility;
    ss = c.entropy / (paths - 1.0);
  }
  csv.row(static_cast<int>(paths), n, p, m, pp, vv, ss, sign_flag(pp, vv, ss));
}

void figure2(const FigureOptions& o, std::ostream& out) {
  if (!o.physical && o.f_name != "WY") {
    throw Error(ErrorCode::BadParameters, "figure-reproduction mode evaluates the WY closed forms");
  }
  const auto f = FunctionRegistry{}.get(o.f_name);
  CsvWriter csv(out);
  std::ostringstream grid;
  grid << (o.physical ? "m in [0,1], p=(1+m)/2" : "p in [0,1/2]") << " x " << kFig2Points
       << ", n in {2,3,4}";
  if (!o.physical) grid << ", m=" << o.m;
  csv.comment(provenance("fig2", o, grid.str()));
  csv.row("paths", "n", "p", "m", "P", "V", "S_normalized", "flag");
  for (int n = 2; n <= 4; ++n) {
    for (int k = 0; k < kFig2Points; ++k) {
      const double t = static_cast<double>(k) / (kFig2Points - 1);
      if (o.physical) {
        werner_row(csv, n, 0.5 * (1.0 + t), t, o, f);
      } else {
        werner_row(csv, n, 0.5 * t, o.m, o, f);
      }
    }
  }
}

void figure3(const FigureOptions& o, std::ostream& out) {
  if (!o.physical && o.f_name != "WY") {
    throw Error(ErrorCode::BadParameters, "figure-reproduction mode evaluates the WY closed forms");
  }
  const auto f = FunctionRegistry{}.get(o.f_name);
  CsvWriter csv(out);
  csv.comment(provenance("fig3", o,
                         o.physical ? "n=2, m in [0,1] x 51, p=(1+m)/2"
                                    : "n=2, p in [0,1/2] x 51, m in [0,1] x 51"));
  csv.row("paths", "n", "p", "m", "P", "V", "S_normalized", "flag");
  for (int i = 0; i < kFig3Points; ++i) {
    const double m = static_cast<double>(i) / (kFig3Points - 1);
    if (o.physical) {
      werner_row(csv, 2, 0.5 * (1.0 + m), m, o, f);
      continue;
    }
    for (int j = 0; j < kFig3Points; ++j) {
      const double p = 0.5 * static_cast<double>(j) / (kFig3Points - 1);
      werner_row(csv, 2, p, m, o, f);
    }
  }
}

}  // namespace

nlohmann::json measure(const StateSpec& spec, const MonotoneFunction& f) {
  const auto rho = build_state(spec);
  auto j = to_json(duality_report(rho, f));
  j["state"] = to_string(spec);
  return j;
}

Figure parse_figure(const std::string& id) {
  if (id == "fig0") return Figure::Fig0;
  if (id == "fig1") return Figure::Fig1;
  if (id == "fig2") return Figure::Fig2;
  if (id == "fig3") return Figure::Fig3;
  throw Error(ErrorCode::UnknownName, "unknown figure '" + id + "' (expected fig0..fig3)");
}

void write_figure(Figure figure, const FigureOptions& options, std::ostream& out) {
  switch (figure) {
    case Figure::Fig0: return figure0(options, out);
    case Figure::Fig1: return figure1(options, out);
    case Figure::Fig2: return figure2(options, out);
    case Figure::Fig3: return figure3(options, out);
  }
}

double write_table1(std::ostream& out) {
  constexpr int kGrid = 50;
  CsvWriter csv(out);
  csv.comment(std::string("wpd ") + kVersion + " table=table1 f=WY,SLD grid=r x r3 50x50, |r3|<=r<=1");
  csv.row("r", "r3", "f", "P_closed", "P_numeric", "V_closed", "V_numeric", "S_closed",
          "S_numeric", "max_abs_diff");
  const MonotoneFunction fs[] = {wigner_yanase(), sld()};
  double worst = 0.0;
  for (int i = 0; i < kGrid; ++i) {
    const double r = static_cast<double>(i) / (kGrid - 1);
    for (int j = 0; j < kGrid; ++j) {
      const double r3 = r * (-1.0 + 2.0 * j / (kGrid - 1));
      const double r1 = std::sqrt(std::max(0.0, r * r - r3 * r3));
      const auto rho = bloch_qubit(r1, 0.0, r3);
      for (const auto& f : fs) {
        const auto closed = closed_form::qubit_table(f.name(), r, r3);
        const auto num = duality_report(rho, f);
        const double diff = std::max({std::abs(closed.predictability - num.predictability),
                                      std::abs(closed.visibility - num.visibility),
                                      std::abs(closed.entropy - num.entropy)});
        worst = std::max(worst, diff);
        csv.row(r, r3, f.name(), closed.predictability, num.predictability, closed.visibility,
                num.visibility, closed.entropy, num.entropy, diff);
      }
    }
  }
  csv.comment("max_abs_diff_overall=" + [&] {
    std::ostringstream s;
    s << std::setprecision(17) << worst;
    return s.str();
  }());
  return worst;
}

namespace {

// Runs fn writing either to --output or to `out`.
template <class Fn>
void with_output(const std::string& path, std::ostream& out, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(out);
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error(ErrorCode::ParseError, "cannot write '" + path + "'");
  fn(file);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Wave-particle duality measures over operator monotone functions", "wpd"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string f_name = "WY";
  std::string state_text;
  std::string output;
  std::string format = "json";
  auto* measure_cmd = app.add_subcommand("measure", "Compute P, V, C, S for one state");
  measure_cmd->add_option("--state", state_text,
                          "bloch:r1,r2,r3 | werner:n=N,m=M | random:dim=D,seed=S | "
                          "named:NAME[,dim=D,index=I,phases=a;b;..] | file:PATH")
      ->required();
  measure_cmd->add_option("--f", f_name, "Monotone function (WY or SLD)");
  measure_cmd->add_option("--output", output, "Write to file instead of stdout");
  measure_cmd->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  SuiteConfig config;
  std::vector<std::string> verify_fs;
  std::string verify_format = "table";
  auto* verify_cmd = app.add_subcommand("verify", "Run every relation and axiom check");
  verify_cmd->add_option("--dims", config.dims, "Dimensions, e.g. 2,3,4")->delimiter(',');
  verify_cmd->add_option("--samples", config.samples_per_dim, "Random states per dimension");
  verify_cmd->add_option("--seed", config.seed, "Base seed");
  verify_cmd->add_option("--f", verify_fs, "Functions, e.g. WY,SLD")->delimiter(',');
  verify_cmd->add_option("--tolerance", config.tolerance_identity, "Identity tolerance");
  verify_cmd->add_option("--slack", config.tolerance_inequality_slack, "Inequality slack");
  verify_cmd->add_option("--output", output, "Also write the JSON report to this file");
  verify_cmd->add_option("--format", verify_format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));

  FigureOptions fig;
  std::string figure_id;
  std::vector<std::size_t> fig_dims;
  auto* figure_cmd = app.add_subcommand("figure", "Emit a figure dataset as CSV");
  figure_cmd->add_option("id", figure_id, "fig0 | fig1 | fig2 | fig3")->required();
  figure_cmd->add_option("--seed", fig.seed, "Seed for random ensembles");
  figure_cmd->add_option("--f", fig.f_name, "Monotone function (WY or SLD)");
  figure_cmd->add_option("--samples", fig.samples, "fig1 qubits / fig0 cloud size");
  figure_cmd->add_option("--dims", fig_dims, "fig0 dimension")->delimiter(',');
  figure_cmd->add_option("--m", fig.m, "fig2: fixed m in figure-reproduction mode");
  figure_cmd->add_flag("--physical", fig.physical, "fig2/fig3: sweep m with p = (1+m)/2");
  figure_cmd->add_option("--output", output, "Write to file instead of stdout");
  figure_cmd->add_option("--format", format, "csv")->check(CLI::IsMember({"csv"}));

  auto* table_cmd = app.add_subcommand("table1", "Qubit closed forms vs generic values as CSV");
  table_cmd->add_option("--output", output, "Write to file instead of stdout");
  table_cmd->add_option("--format", format, "csv")->check(CLI::IsMember({"csv"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsageError;
  }

  try {
    if (*measure_cmd) {
      const auto f = FunctionRegistry{}.get(f_name);
      const auto spec = parse_state_spec(state_text);
      const auto j = measure(spec, f);
      with_output(output, out, [&](std::ostream& os) {
        if (format == "json") {
          os << j.dump(2) << '\n';
          return;
        }
        CsvWriter csv(os);
        csv.comment(std::string("wpd ") + kVersion + " measure state=" + j["state"].get<std::string>() +
                    " f=" + f.name());
        csv.row("dim", "f", "P", "V", "C", "S", "residual_theorem1", "residual_theorem2");
        csv.row(j["dim"].get<std::size_t>(), f.name(), j["P"].get<double>(), j["V"].get<double>(),
                j["C"].get<double>(), j["S"].get<double>(), j["residual_theorem1"].get<double>(),
                j["residual_theorem2"].get<double>());
      });
      return kPass;
    }
    if (*verify_cmd) {
      if (!verify_fs.empty()) config.f_names = verify_fs;
      const auto report = run_suite(config);
      if (!output.empty()) {
        std::ofstream file(output);
        if (!file) throw Error(ErrorCode::ParseError, "cannot write '" + output + "'");
        file << to_json(report).dump(2) << '\n';
      }
      if (verify_format == "json") {
        out << to_json(report).dump(2) << '\n';
      } else {
        out << to_table(report);
      }
      return report.passed() ? kPass : kVerificationFailure;
    }
    if (*figure_cmd) {
      const auto id = parse_figure(figure_id);
      if (!fig_dims.empty()) fig.dim = fig_dims.front();
      if (id == Figure::Fig0 && !figure_cmd->count("--samples")) fig.samples = 200;
      FunctionRegistry{}.get(fig.f_name);
      with_output(output, out, [&](std::ostream& os) { write_figure(id, fig, os); });
      return kPass;
    }
    if (*table_cmd) {
      double worst = 0.0;
      with_output(output, out, [&](std::ostream& os) { worst = write_table1(os); });
      return worst < 1e-10 ? kPass : kVerificationFailure;
    }
  } catch (const Error& e) {
    err << "wpd: " << e.what() << '\n';
    return is_numerical(e.code()) ? kNumericalError : kUsageError;
  }
  return kUsageError;
}

}  // namespace wpd::cli
