#pragma once

#include <functional>
#include <string>

#include "gwnoise/config.hpp"
#include "gwnoise/su2.hpp"

namespace gwnoise {

/// Position-noise budget of one operating point. dz_total combines the two
/// contributions in quadrature. flag is empty when the result is fully
/// inside its formula's validity regime.
struct NoiseBudget {
  double dz_pc = 0;   // m
  double dz_rp = 0;   // m
  double nbar = 0;    // photons
  double power = 0;   // W
  std::string flag;

  double dz_total() const { return std::hypot(dz_pc, dz_rp); }
};

/// Standard quantum limit sqrt(2 hbar tau / m).
double sql(const DetectorConfig& config);

/// Generic dark-fringe budget: dz_pc^2 = A_pc var_jy / mean_jz^2,
/// dz_rp^2 = A_rp (2 dJx)^2. Every family closed form must agree with this
/// path on that family's moments.
NoiseBudget budget_from_moments(const MomentSet& moments, const DetectorConfig& config);

/// Coherent carrier, vacuum second port: A_pc/N + A_rp N.
NoiseBudget budget_coherent(double nbar, const DetectorConfig& config);

enum class SqueezedMode { Exact, Asymptotic };

/// Coherent carrier with matched-phase squeezed vacuum. Asymptotic mode is
/// the alpha^2 >> sinh^2 r form A_pc e^{-2r}/N + A_rp e^{2r} N.
NoiseBudget budget_squeezed(double alpha, double r, const DetectorConfig& config,
                            SqueezedMode mode);

/// Carrier with <a1^2 + a1^dag^2> = 0 mixed with squeezed vacuum: the
/// coherent budget scaled by cosh 2r.
NoiseBudget budget_mismatch_quadrature(double nbar1, double r, const DetectorConfig& config);

/// Arbitrary carrier mixed with any state with <a2^2> = 0:
/// (2 N1 N2 + N1 + N2) [A_pc (N1 - N2)^{-2} + A_rp].
NoiseBudget budget_phase_insensitive_port(double nbar1, double nbar2,
                                          const DetectorConfig& config);

/// Heisenberg-limited photon counting: 2 A_pc/N^2 + A_rp N^2 / 2.
NoiseBudget budget_heisenberg_limited(double nbar, const DetectorConfig& config);

/// Intelligent-state budget in the eta -> 0 closed form with j = nbar/2.
NoiseBudget budget_intelligent_limit(double nbar, double m0, const DetectorConfig& config);

struct Optimum {
  enum class Method { ClosedForm, NumericalMinimization };
  double nbar_opt = 0;
  double power_opt = 0;
  double dz_opt = 0;
  Method method = Method::NumericalMinimization;
};

struct OptimizeBounds {
  double nbar_min = 1.0;
  double nbar_max = 1e26;
};

using BudgetFunction = std::function<NoiseBudget(double nbar)>;

/// Golden-section minimization of dz_total(nbar) over log nbar, relative
/// tolerance 1e-8. Budgets here are unimodal in log nbar; a bracket failure
/// is reported as an error.
Optimum optimize_budget(const BudgetFunction& budget, const DetectorConfig& config,
                        OptimizeBounds bounds = {});

// Closed-form optima for the families that have one.
Optimum coherent_optimum(const DetectorConfig& config);
Optimum squeezed_optimum(double r, const DetectorConfig& config);
Optimum heisenberg_limited_optimum(const DetectorConfig& config);

struct LossCheck {
  bool ok = false;        // nbar * gamma < 1/2
  double nbar_gamma = 0;
  double nbar_out = 0;    // nbar e^{-gamma}
};

LossCheck loss_threshold_check(double nbar, double gamma);

}  // namespace gwnoise
