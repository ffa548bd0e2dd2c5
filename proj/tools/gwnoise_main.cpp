#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gwnoise/interferometer.hpp"
#include "gwnoise/io.hpp"
#include "gwnoise/noise.hpp"
#include "gwnoise/states.hpp"
#include "gwnoise/verify.hpp"

namespace {

using namespace gwnoise;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFlagged = 2;
constexpr int kExitVerifyFailed = 3;

std::string sci(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.8e", value);
  return buf;
}

DetectorConfig load_config(const std::string& name) {
  namespace fs = std::filesystem;
  if (fs::exists(name)) {
    std::ifstream in(name);
    return config_from_json(json::parse(in));
  }
  if (name == "initial-ligo") return DetectorConfig::preset(name);
  if (const char* dir = std::getenv("GWNOISE_PRESET_DIR")) {
    const fs::path candidate = fs::path(dir) / (name + ".json");
    if (fs::exists(candidate)) {
      std::ifstream in(candidate);
      return config_from_json(json::parse(in));
    }
  }
  throw std::invalid_argument("unknown config '" + name + "': not a file, preset, or preset-dir entry");
}

struct FamilyOptions {
  std::string family = "coherent";
  double alpha = 1.0;
  double r = 0.0;
  double theta = 0.0;
  int n = 1;
  int j2 = 2;
  double eta = 0.5;
  int m0x2 = 0;
};

InputStateSpec spec_from_options(const FamilyOptions& opt) {
  if (opt.family == "coherent") return CoherentVacuum{Complex(opt.alpha, 0)};
  if (opt.family == "squeezed") return CoherentSqueezed{Complex(opt.alpha, 0), opt.r, opt.theta};
  if (opt.family == "twin-fock") return TwinFock{opt.n};
  if (opt.family == "intelligent") return Intelligent{IrrepLabel(opt.j2), opt.eta, opt.m0x2};
  throw std::invalid_argument("family '" + opt.family + "' has no explicit state form");
}

BudgetFunction budget_function(const FamilyOptions& opt, const DetectorConfig& config,
                               std::string* note) {
  if (opt.family == "coherent")
    return [config](double nbar) { return budget_coherent(nbar, config); };
  if (opt.family == "squeezed") {
    const double r = opt.r;
    return [config, r](double nbar) {
      // asymptotic matched-phase form as a function of total nbar
      NoiseBudget b;
      b.dz_pc = std::sqrt(config.a_pc() * std::exp(-2.0 * r) / nbar);
      b.dz_rp = std::sqrt(config.a_rp() * std::exp(2.0 * r) * nbar);
      b.nbar = nbar;
      b.power = config.power_of_nbar(nbar);
      return b;
    };
  }
  if (opt.family == "heisenberg")
    return [config](double nbar) { return budget_heisenberg_limited(nbar, config); };
  if (opt.family == "twin-fock") {
    if (note)
      *note = "twin-fock carries <Jz> = 0, unusable with the photon-difference readout; "
              "routed to the squared-difference (Heisenberg-limited) budget";
    return [config](double nbar) { return budget_heisenberg_limited(nbar, config); };
  }
  if (opt.family == "intelligent") {
    const double m0 = 0.5 * opt.m0x2;
    return [config, m0](double nbar) { return budget_intelligent_limit(nbar, m0, config); };
  }
  throw std::invalid_argument("unknown family '" + opt.family + "'");
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open output path '" + out_path + "'");
  out << text;
}

std::string kv_csv(const std::vector<std::pair<std::string, double>>& fields) {
  std::ostringstream header, row;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    header << fields[i].first << (i + 1 < fields.size() ? "," : "\r\n");
    row << sci(fields[i].second) << (i + 1 < fields.size() ? "," : "\r\n");
  }
  return header.str() + row.str();
}

int cmd_sql(const std::string& config_name, const std::string& format,
            const std::string& out_path) {
  const DetectorConfig config = load_config(config_name);
  const double dz = sql(config);
  const std::vector<std::pair<std::string, double>> fields = {
      {"sql_m", dz},
      {"tau_s", config.tau()},
      {"bounces", config.bounces()},
      {"a_pc_m2", config.a_pc()},
      {"a_rp_m2", config.a_rp()},
      {"strain_scale", dz / config.arm_length},
  };
  if (format == "json") {
    json j;
    for (const auto& [k, v] : fields) j[k] = v;
    write_output(j.dump(2) + "\n", out_path);
  } else {
    write_output(kv_csv(fields), out_path);
  }
  return kExitOk;
}

int cmd_optimum(const std::string& config_name, const FamilyOptions& family,
                const std::string& format, const std::string& out_path) {
  const DetectorConfig config = load_config(config_name);
  std::string note;
  const BudgetFunction budget = budget_function(family, config, &note);
  const Optimum opt = optimize_budget(budget, config);
  const Optimum baseline = coherent_optimum(config);
  const std::vector<std::pair<std::string, double>> fields = {
      {"nbar_opt", opt.nbar_opt},
      {"power_opt_w", opt.power_opt},
      {"dz_opt_m", opt.dz_opt},
      {"power_ratio_to_coherent", opt.power_opt / baseline.power_opt},
      {"sql_m", sql(config)},
  };
  if (format == "json") {
    json j;
    for (const auto& [k, v] : fields) j[k] = v;
    j["family"] = family.family;
    if (!note.empty()) j["note"] = note;
    write_output(j.dump(2) + "\n", out_path);
  } else {
    write_output(kv_csv(fields), out_path);
  }
  return kExitOk;
}

struct SweepSpec {
  std::string variable;
  double min = 0, max = 0;
  int points = 0;
  bool log_scale = false;
};

SweepSpec parse_sweep(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 5)
    throw std::invalid_argument("--sweep expects var:min:max:points:scale");
  SweepSpec spec;
  spec.variable = parts[0];
  spec.min = std::stod(parts[1]);
  spec.max = std::stod(parts[2]);
  spec.points = std::stoi(parts[3]);
  if (parts[4] == "log")
    spec.log_scale = true;
  else if (parts[4] != "linear")
    throw std::invalid_argument("sweep scale must be 'linear' or 'log'");
  if (!(spec.min < spec.max)) throw std::invalid_argument("sweep requires min < max");
  if (spec.points < 2) throw std::invalid_argument("sweep requires points >= 2");
  if (spec.log_scale && spec.min <= 0)
    throw std::invalid_argument("log-scale sweep requires min > 0");
  return spec;
}

double sweep_value(const SweepSpec& spec, int i) {
  const double t = static_cast<double>(i) / (spec.points - 1);
  if (spec.log_scale) return spec.min * std::pow(spec.max / spec.min, t);
  return spec.min + (spec.max - spec.min) * t;
}

struct ReportRow {
  double value;
  NoiseBudget budget;
};

ReportRow sweep_row(const SweepSpec& spec, double value, const FamilyOptions& family,
                    const DetectorConfig& config, const std::string& observable, double nbar,
                    double gamma) {
  ReportRow row{value, {}};
  if (spec.variable == "nbar") {
    row.budget = budget_function(family, config, nullptr)(value);
    if (gamma > 0.0 && !loss_threshold_check(value, gamma).ok)
      row.budget.flag = "loss-threshold";
  } else if (spec.variable == "r") {
    // re-optimized squeezed operating point at each r
    FamilyOptions at_r = family;
    at_r.family = "squeezed";
    at_r.r = value;
    const BudgetFunction budget = budget_function(at_r, config, nullptr);
    const Optimum opt = optimize_budget(budget, config);
    row.budget = budget(opt.nbar_opt);
  } else if (spec.variable == "eta") {
    const auto sol = solve_intelligent_state(IrrepLabel(family.j2), value, family.m0x2);
    row.budget = budget_from_moments(moments_of(sol.state), config);
  } else if (spec.variable == "phi") {
    const InputStateSpec state_spec = spec_from_options(family);
    PhaseUncertainty u{};
    MomentSet moments;
    if (observable == "sqdiff") {
      const TwoModeState state = spec_to_state(state_spec);
      u = phase_uncertainty(state, ObservableKind::SquaredDifference, value);
      moments = moments_of(state);
    } else {
      const auto analytic = analytic_moments(state_spec);
      moments = analytic ? *analytic : moments_of(spec_to_state(state_spec));
      u = phase_uncertainty(moments, value);
    }
    row.budget.dz_pc = std::sqrt(config.a_pc()) * u.value;
    row.budget.dz_rp = std::sqrt(config.a_rp() * 4.0 * moments.var_jx);
    row.budget.nbar = moments.nbar;
    row.budget.power = config.power_of_nbar(moments.nbar);
  } else if (spec.variable == "gamma") {
    row.budget = budget_function(family, config, nullptr)(nbar);
    const LossCheck check = loss_threshold_check(nbar, value);
    if (!check.ok) row.budget.flag = "loss-threshold";
  } else {
    throw std::invalid_argument("unknown sweep variable '" + spec.variable + "'");
  }
  return row;
}

int cmd_sweep(const std::string& config_name, const std::string& sweep_text,
              const FamilyOptions& family, const std::string& observable, double nbar,
              double gamma, const std::string& format, const std::string& out_path) {
  const DetectorConfig config = load_config(config_name);
  const SweepSpec spec = parse_sweep(sweep_text);
  std::vector<ReportRow> rows;
  rows.reserve(spec.points);
  for (int i = 0; i < spec.points; ++i)
    rows.push_back(
        sweep_row(spec, sweep_value(spec, i), family, config, observable, nbar, gamma));

  bool flagged = false;
  std::ostringstream out;
  if (format == "json") {
    json arr = json::array();
    for (const auto& row : rows) {
      json j = to_json(row.budget);
      j[spec.variable] = row.value;
      arr.push_back(std::move(j));
      flagged = flagged || !row.budget.flag.empty();
    }
    out << arr.dump(2) << "\n";
  } else {
    out << spec.variable << ",dz_pc_m,dz_rp_m,dz_total_m,power_w,flags\r\n";
    for (const auto& row : rows) {
      out << sci(row.value) << ',' << sci(row.budget.dz_pc) << ',' << sci(row.budget.dz_rp)
          << ',' << sci(row.budget.dz_total()) << ',' << sci(row.budget.power) << ','
          << row.budget.flag << "\r\n";
      flagged = flagged || !row.budget.flag.empty();
    }
  }
  write_output(out.str(), out_path);
  return flagged ? kExitFlagged : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum-noise budgets of an interferometric gravitational-wave detector"};
  app.require_subcommand(1);

  std::string config_name = "initial-ligo";
  std::string format = "csv";
  std::string out_path;
  FamilyOptions family;
  std::string observable = "qdiff";
  std::string sweep_text;
  double gamma = 0.0;
  double nbar = 1.0;
  std::uint64_t seed = 20240101;
  std::string level = "quick";

  app.add_option("--config", config_name, "detector config: preset name or JSON path");
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", out_path, "output path (default stdout)");

  auto add_family_options = [&](CLI::App* cmd) {
    cmd->add_option("--family", family.family,
                    "coherent|squeezed|twin-fock|intelligent|heisenberg");
    cmd->add_option("--alpha", family.alpha, "coherent amplitude (real)");
    cmd->add_option("--r", family.r, "squeeze parameter");
    cmd->add_option("--theta", family.theta, "squeeze phase");
    cmd->add_option("--n", family.n, "twin-Fock photons per port");
    cmd->add_option("--j2", family.j2, "2j for intelligent states");
    cmd->add_option("--eta", family.eta, "intelligent-state eta");
    cmd->add_option("--m0x2", family.m0x2, "2 m0 for intelligent states");
  };

  CLI::App* sql_cmd = app.add_subcommand("sql", "standard quantum limit and derived constants");

  CLI::App* optimum_cmd = app.add_subcommand("optimum", "optimum light power for a family");
  add_family_options(optimum_cmd);

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "parameter sweep, one report row per point");
  add_family_options(sweep_cmd);
  sweep_cmd->add_option("--sweep", sweep_text, "var:min:max:points:scale")->required();
  sweep_cmd->add_option("--observable", observable, "qdiff or sqdiff")
      ->check(CLI::IsMember({"qdiff", "sqdiff"}));
  sweep_cmd->add_option("--gamma", gamma, "loss coefficient for gamma sweeps");
  sweep_cmd->add_option("--nbar", nbar, "photon number for gamma sweeps");

  CLI::App* verify_cmd = app.add_subcommand("verify", "run the oracle cross-check suites");
  verify_cmd->add_option("--level", level, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}));
  verify_cmd->add_option("--seed", seed, "PRNG seed for random-state checks");

  // let --config/--format/--out appear after the subcommand name
  for (CLI::App* cmd : {sql_cmd, optimum_cmd, sweep_cmd, verify_cmd}) cmd->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (sql_cmd->parsed()) return cmd_sql(config_name, format, out_path);
    if (optimum_cmd->parsed()) return cmd_optimum(config_name, family, format, out_path);
    if (sweep_cmd->parsed())
      return cmd_sweep(config_name, sweep_text, family, observable, nbar, gamma, format,
                       out_path);
    if (verify_cmd->parsed()) {
      const VerifyLevel lvl = level == "full" ? VerifyLevel::Full : VerifyLevel::Quick;
      std::ostringstream out;
      const bool ok = run_verification(lvl, seed, out);
      write_output(out.str(), out_path);
      return ok ? kExitOk : kExitVerifyFailed;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
