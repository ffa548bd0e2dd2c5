#include "gwnoise/noise.hpp"

#include <cmath>
#include <vector>

#include "gwnoise/states.hpp"

namespace gwnoise {

DetectorConfig DetectorConfig::preset(const std::string& name) {
  if (name == "initial-ligo") return DetectorConfig(11.0, 4000.0, 200.0, 1.064e-6);
  throw std::invalid_argument("DetectorConfig::preset: unknown preset '" + name + "'");
}

double sql(const DetectorConfig& config) {
  return std::sqrt(2.0 * constants::hbar * config.tau() / config.mirror_mass);
}

namespace {

NoiseBudget make_budget(double dz_pc2, double dz_rp2, double nbar, const DetectorConfig& config,
                        std::string flag = {}) {
  NoiseBudget b;
  b.dz_pc = std::sqrt(dz_pc2);
  b.dz_rp = std::sqrt(dz_rp2);
  b.nbar = nbar;
  b.power = config.power_of_nbar(nbar);
  b.flag = std::move(flag);
  return b;
}

}  // namespace

NoiseBudget budget_from_moments(const MomentSet& m, const DetectorConfig& config) {
  const double scale = std::max(1.0, m.nbar);
  if (std::abs(m.mean_jz) < 1e-12 * scale)
    throw std::domain_error(
        "budget_from_moments: <Jz> ~ 0 gives a zero fringe derivative for q_out; such "
        "inputs need the squared-difference scheme (budget_heisenberg_limited)");
  const double dz_pc2 = config.a_pc() * m.var_jy / (m.mean_jz * m.mean_jz);
  const double dz_rp2 = config.a_rp() * 4.0 * m.var_jx;
  return make_budget(dz_pc2, dz_rp2, m.nbar, config);
}

NoiseBudget budget_coherent(double nbar, const DetectorConfig& config) {
  if (nbar <= 0) throw std::invalid_argument("budget_coherent: nbar must be > 0");
  return make_budget(config.a_pc() / nbar, config.a_rp() * nbar, nbar, config);
}

NoiseBudget budget_squeezed(double alpha, double r, const DetectorConfig& config,
                            SqueezedMode mode) {
  if (r < 0) throw std::invalid_argument("budget_squeezed: r must be >= 0");
  if (mode == SqueezedMode::Exact)
    return budget_from_moments(coherent_squeezed_moments(alpha, r), config);
  const double a2 = alpha * alpha;
  const double sh2 = std::sinh(r) * std::sinh(r);
  const double nbar = a2 + sh2;
  std::string flag;
  if (a2 < 10.0 * sh2) flag = "asymptotic-regime";  // alpha^2 >> sinh^2 r assumed
  return make_budget(config.a_pc() * std::exp(-2.0 * r) / nbar,
                     config.a_rp() * std::exp(2.0 * r) * nbar, nbar, config, std::move(flag));
}

NoiseBudget budget_mismatch_quadrature(double nbar1, double r, const DetectorConfig& config) {
  if (nbar1 <= 0 || r < 0)
    throw std::invalid_argument("budget_mismatch_quadrature: need nbar1 > 0, r >= 0");
  const double sh2 = std::sinh(r) * std::sinh(r);
  const double nbar = nbar1 + sh2;
  const double ch2r = std::cosh(2.0 * r);
  std::string flag;
  if (nbar1 < 10.0 * sh2) flag = "carrier-regime";  // N1 >> sinh^2 r assumed
  return make_budget(config.a_pc() * ch2r / nbar, config.a_rp() * ch2r * nbar, nbar, config,
                     std::move(flag));
}

NoiseBudget budget_phase_insensitive_port(double nbar1, double nbar2,
                                          const DetectorConfig& config) {
  if (nbar1 < 0 || nbar2 < 0)
    throw std::invalid_argument("budget_phase_insensitive_port: photon numbers must be >= 0");
  if (nbar1 == nbar2)
    throw std::domain_error("budget_phase_insensitive_port: degenerate ports (nbar1 = nbar2)");
  const double s = 2.0 * nbar1 * nbar2 + nbar1 + nbar2;
  const double diff = nbar1 - nbar2;
  return make_budget(config.a_pc() * s / (diff * diff), config.a_rp() * s, nbar1 + nbar2, config);
}

NoiseBudget budget_heisenberg_limited(double nbar, const DetectorConfig& config) {
  if (nbar <= 0) throw std::invalid_argument("budget_heisenberg_limited: nbar must be > 0");
  std::string flag;
  if (nbar < 100.0) flag = "large-nbar-regime";
  return make_budget(2.0 * config.a_pc() / (nbar * nbar),
                     0.5 * config.a_rp() * nbar * nbar, nbar, config, std::move(flag));
}

NoiseBudget budget_intelligent_limit(double nbar, double m0, const DetectorConfig& config) {
  if (nbar <= 0) throw std::invalid_argument("budget_intelligent_limit: nbar must be > 0");
  const double j = 0.5 * nbar;
  const double four_var_jx = 2.0 * (j * j - m0 * m0 + j);
  if (four_var_jx <= 0)
    throw std::domain_error("budget_intelligent_limit: |m0| too large for this nbar");
  return make_budget(config.a_pc() / four_var_jx, config.a_rp() * four_var_jx, nbar, config);
}

Optimum optimize_budget(const BudgetFunction& budget, const DetectorConfig& config,
                        OptimizeBounds bounds) {
  if (!(bounds.nbar_min > 0) || !(bounds.nbar_max > bounds.nbar_min))
    throw std::invalid_argument("optimize_budget: need 0 < nbar_min < nbar_max");

  auto f = [&](double log_nbar) {
    const double dz = budget(std::exp(log_nbar)).dz_total();
    return dz * dz;
  };

  double a = std::log(bounds.nbar_min);
  double b = std::log(bounds.nbar_max);

  // coarse unimodality / bracket check before golden section
  {
    const int grid = 64;
    int min_idx = 0;
    double min_val = f(a);
    std::vector<double> values(grid + 1);
    values[0] = min_val;
    for (int i = 1; i <= grid; ++i) {
      values[i] = f(a + (b - a) * i / grid);
      if (values[i] < min_val) {
        min_val = values[i];
        min_idx = i;
      }
    }
    if (min_idx == 0 || min_idx == grid)
      throw std::domain_error("optimize_budget: minimum not bracketed inside the bounds");
    int sign_changes = 0;
    for (int i = 1; i < grid; ++i)
      if ((values[i] < values[i - 1]) != (values[i + 1] < values[i])) ++sign_changes;
    if (sign_changes > 1)
      throw std::domain_error("optimize_budget: budget is not unimodal over the bounds");
    a = std::log(bounds.nbar_min) + (b - std::log(bounds.nbar_min)) * (min_idx - 1) / grid;
    b = std::log(bounds.nbar_min) +
        (std::log(bounds.nbar_max) - std::log(bounds.nbar_min)) * (min_idx + 1) / grid;
  }

  constexpr double inv_phi = 0.6180339887498949;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > 1e-8 * (std::abs(a) + std::abs(b) + 1.0)) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    }
  }

  Optimum opt;
  opt.nbar_opt = std::exp(0.5 * (a + b));
  opt.power_opt = config.power_of_nbar(opt.nbar_opt);
  opt.dz_opt = budget(opt.nbar_opt).dz_total();
  opt.method = Optimum::Method::NumericalMinimization;
  return opt;
}

namespace {

Optimum closed_form_optimum(double nbar_opt, const DetectorConfig& config, double dz_opt) {
  Optimum opt;
  opt.nbar_opt = nbar_opt;
  opt.power_opt = config.power_of_nbar(nbar_opt);
  opt.dz_opt = dz_opt;
  opt.method = Optimum::Method::ClosedForm;
  return opt;
}

}  // namespace

Optimum coherent_optimum(const DetectorConfig& config) {
  // N_opt = m L^2 / (hbar omega^2 tau^3) = sqrt(A_pc / A_rp)
  return closed_form_optimum(std::sqrt(config.a_pc() / config.a_rp()), config, sql(config));
}

Optimum squeezed_optimum(double r, const DetectorConfig& config) {
  if (r < 0) throw std::invalid_argument("squeezed_optimum: r must be >= 0");
  return closed_form_optimum(std::sqrt(config.a_pc() / config.a_rp()) * std::exp(-2.0 * r),
                             config, sql(config));
}

Optimum heisenberg_limited_optimum(const DetectorConfig& config) {
  // minimum of 2 A_pc/N^2 + A_rp N^2/2 at N^4 = 4 A_pc / A_rp
  return closed_form_optimum(std::sqrt(2.0) * std::pow(config.a_pc() / config.a_rp(), 0.25),
                             config, sql(config));
}

LossCheck loss_threshold_check(double nbar, double gamma) {
  if (gamma < 0) throw std::invalid_argument("loss_threshold_check: gamma must be >= 0");
  LossCheck check;
  check.nbar_gamma = nbar * gamma;
  check.ok = check.nbar_gamma < 0.5;
  check.nbar_out = nbar * std::exp(-gamma);
  return check;
}

}  // namespace gwnoise
