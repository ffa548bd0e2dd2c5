#include "gwnoise/states.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace gwnoise {

namespace {
constexpr Complex kI{0.0, 1.0};
constexpr double kTailTolerance = 1e-12;
}

MomentSet coherent_vacuum_moments(double nbar) {
  if (nbar < 0) throw std::invalid_argument("coherent_vacuum_moments: nbar must be >= 0");
  MomentSet m;
  m.mean_jz = 0.5 * nbar;
  m.var_jx = m.var_jy = m.var_jz = 0.25 * nbar;
  m.nbar = m.nbar1 = nbar;
  return m;
}

MomentSet coherent_squeezed_moments(double alpha, double r) {
  if (r < 0) throw std::invalid_argument("coherent_squeezed_moments: r must be >= 0");
  const double a2 = alpha * alpha;
  const double sh = std::sinh(r), ch = std::cosh(r);
  const double sh2 = sh * sh;
  MomentSet m;
  m.var_jx = 0.25 * (a2 * std::exp(2.0 * r) + sh2);
  m.var_jy = 0.25 * (a2 * std::exp(-2.0 * r) + sh2);
  m.mean_jz = 0.5 * (a2 - sh2);
  m.var_jz = 0.25 * (a2 + 2.0 * sh2 * ch * ch);
  m.nbar1 = a2;
  m.nbar2 = sh2;
  m.nbar = a2 + sh2;
  return m;
}

TwoModeState twin_fock_state(int n) {
  if (n < 0) throw std::invalid_argument("twin_fock_state: n must be >= 0");
  return TwoModeState::irrep_basis_state(IrrepLabel(2 * n), 0);
}

MomentSet twin_fock_moments(int n) {
  if (n < 0) throw std::invalid_argument("twin_fock_moments: n must be >= 0");
  const double j = n;
  MomentSet m;
  m.var_jx = m.var_jy = 0.5 * j * (j + 1.0);
  m.nbar1 = m.nbar2 = n;
  m.nbar = 2.0 * n;
  return m;
}

namespace {

// eta*Jx - i*Jy = ((eta-1)/2) J+ + ((eta+1)/2) J- is diagonally similar to
// i*sqrt(1-eta^2)*Jx via D = diag((-i/q)^k), q = sqrt((1-eta)/(1+eta)).
// Solving the Hermitian Jx problem instead sidesteps the severe
// non-normality of the direct eigenproblem (condition ~ ((1+eta)/(1-eta))^j).
Eigen::SelfAdjointEigenSolver<Matrix> hermitian_jx_solver(IrrepLabel label) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(build_irrep_matrices(label).jx);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("intelligent state: Jx eigen-solver failed");
  return solver;
}

}  // namespace

std::vector<Complex> intelligent_spectrum(IrrepLabel label, double eta) {
  if (std::abs(eta) > 1.0)
    throw std::invalid_argument("intelligent_spectrum: |eta| must be <= 1");
  const auto solver = hermitian_jx_solver(label);
  const double root = std::sqrt(std::max(0.0, 1.0 - eta * eta));
  std::vector<Complex> values;
  values.reserve(label.dim());
  // Jx eigenvalues come out ascending (m = -j ... j); report m0 = j ... -j
  for (int i = solver.eigenvalues().size() - 1; i >= 0; --i)
    values.push_back(kI * (solver.eigenvalues()(i) * root));
  return values;
}

IntelligentStateSolution solve_intelligent_state(IrrepLabel label, double eta, int twice_m0) {
  if (eta == 0.0)
    throw std::invalid_argument(
        "solve_intelligent_state: eta = 0 degenerates the eigenproblem; use the "
        "intelligent_limit_4varjx closed form");
  if (std::abs(eta) < 1e-3)
    throw std::invalid_argument(
        "solve_intelligent_state: |eta| < 1e-3 is too ill-conditioned; use the closed form");
  if (std::abs(eta) > 1.0)
    throw std::invalid_argument("solve_intelligent_state: |eta| must be <= 1");
  if (std::abs(twice_m0) > label.twice_j || (label.twice_j - twice_m0) % 2 != 0)
    throw std::invalid_argument("solve_intelligent_state: m0 must satisfy |m0| <= j, j - m0 integer");

  if (std::abs(eta) == 1.0) {
    if (twice_m0 != 0)
      throw std::domain_error(
          "solve_intelligent_state: |eta| = 1 collapses the spectrum to 0; only m0 = 0 exists");
    // eta = +1: ker J-, the lowest-weight state; eta = -1: ker J+.
    TwoModeState state =
        TwoModeState::irrep_basis_state(label, eta > 0 ? -label.twice_j : label.twice_j);
    return IntelligentStateSolution{Complex{0, 0}, std::move(state), eta, 0};
  }

  const auto solver = hermitian_jx_solver(label);
  // ascending Jx eigenvalues: m0 sits at index m0 + j
  const int index = (twice_m0 + label.twice_j) / 2;
  const Complex eigenvalue = kI * (solver.eigenvalues()(index) *
                                   std::sqrt(std::max(0.0, 1.0 - eta * eta)));

  const double q = std::sqrt((1.0 - eta) / (1.0 + eta));
  const Complex step = Complex(0, -1.0) / q;
  Vector amp = solver.eigenvectors().col(index);
  Complex scale{1.0, 0.0};
  for (int k = 1; k < amp.size(); ++k) {
    scale *= step;
    amp(k) *= scale;
  }

  // deterministic phase: highest-m component real positive
  int anchor = 0;
  const double floor = 1e-12 * amp.cwiseAbs().maxCoeff();
  while (anchor < amp.size() - 1 && std::abs(amp(anchor)) < floor) ++anchor;
  amp *= std::abs(amp(anchor)) / amp(anchor);

  return IntelligentStateSolution{eigenvalue, TwoModeState(IrrepBasis{label}, std::move(amp)),
                                  eta, twice_m0};
}

MomentSet intelligent_moments(const IntelligentStateSolution& sol) {
  const IrrepBasis& basis = sol.state.irrep_basis();
  const double j = basis.label.j();
  const Vector& amp = sol.state.amplitudes();

  double mean_m = 0.0, mean_m2 = 0.0;
  for (int i = 0; i < basis.dim(); ++i) {
    const double m = j - i;
    const double p = std::norm(amp(i));
    mean_m += p * m;
    mean_m2 += p * m * m;
  }

  const double m0 = 0.5 * sol.twice_m0;
  MomentSet m;
  m.mean_jx = 0.0;
  m.mean_jy = -m0 * std::sqrt(std::max(0.0, 1.0 - sol.eta * sol.eta));
  m.mean_jz = mean_m;
  m.var_jz = mean_m2 - mean_m * mean_m;
  m.var_jx = std::abs(mean_m / (2.0 * sol.eta));
  m.var_jy = sol.eta * sol.eta * m.var_jx;
  m.cov_jy_jz = 0.5 * sol.eta * m.mean_jy;
  m.nbar = 2.0 * j;
  m.nbar1 = j + mean_m;
  m.nbar2 = j - mean_m;
  return m;
}

double intelligent_limit_4varjx(double j, double m0) {
  return 2.0 * (j * j - m0 * m0 + j);
}

Vector coherent_amplitudes(Complex alpha, int n_max) {
  Vector amp(n_max + 1);
  const double abs_a = std::abs(alpha);
  if (abs_a == 0.0) {
    amp.setZero();
    amp(0) = 1.0;
    return amp;
  }
  const double phase = std::arg(alpha);
  const double log_a = std::log(abs_a);
  for (int n = 0; n <= n_max; ++n) {
    // |c_n| in log space so large |alpha| never overflows e^{|alpha|^2/2}
    const double log_mag = -0.5 * abs_a * abs_a + n * log_a - 0.5 * std::lgamma(n + 1.0);
    amp(n) = std::exp(log_mag) * std::exp(kI * (phase * n));
  }
  return amp;
}

Vector squeezed_vacuum_amplitudes(double r, double theta, int n_max) {
  if (r < 0) throw std::invalid_argument("squeezed_vacuum_amplitudes: r must be >= 0");
  Vector amp = Vector::Zero(n_max + 1);
  Complex c = 1.0 / std::sqrt(std::cosh(r));
  amp(0) = c;
  const Complex factor = std::exp(kI * theta) * std::tanh(r);
  for (int k = 1; 2 * k <= n_max; ++k) {
    c *= factor * std::sqrt((2.0 * k - 1.0) / (2.0 * k));
    amp(2 * k) = c;
  }
  return amp;
}

int coherent_truncation(double abs_alpha) {
  return static_cast<int>(std::ceil(abs_alpha * abs_alpha + 10.0 * abs_alpha + 20.0));
}

int squeezed_truncation(double r) {
  const double sh = std::sinh(r), ch = std::cosh(r);
  return static_cast<int>(std::ceil(sh * sh + 10.0 * sh * ch + 20.0));
}

namespace {

// For unbounded families the analytic norm is 1, so the truncated tail
// probability is 1 - |amp|^2.
double tail_probability(const Vector& amp) { return 1.0 - amp.squaredNorm(); }

Vector truncated_mode(const std::function<Vector(int)>& build, int n_max, bool allow_growth) {
  Vector amp = build(n_max);
  if (allow_growth) {
    while (tail_probability(amp) >= kTailTolerance && n_max < 100000) {
      n_max += n_max / 2 + 10;
      amp = build(n_max);
    }
  }
  if (tail_probability(amp) >= kTailTolerance)
    throw std::domain_error("spec_to_state: truncation insufficient, tail probability >= 1e-12");
  return amp;
}

Vector vacuum_mode(int n_max) {
  Vector amp = Vector::Zero(n_max + 1);
  amp(0) = 1.0;
  return amp;
}

}  // namespace

TwoModeState spec_to_state(const InputStateSpec& spec, std::optional<int> truncation_override) {
  return std::visit(
      [&](const auto& family) -> TwoModeState {
        using T = std::decay_t<decltype(family)>;
        const bool grow = !truncation_override.has_value();
        if constexpr (std::is_same_v<T, CoherentVacuum>) {
          const int n1 = truncation_override.value_or(coherent_truncation(std::abs(family.alpha)));
          const Vector mode1 = truncated_mode(
              [&](int n) { return coherent_amplitudes(family.alpha, n); }, n1, grow);
          // a few spare levels in the vacuum port keep truncated second
          // moments exact
          return TwoModeState::product_fock(mode1, vacuum_mode(4));
        } else if constexpr (std::is_same_v<T, CoherentSqueezed>) {
          const int n1 = truncation_override.value_or(coherent_truncation(std::abs(family.alpha)));
          const int n2 = truncation_override.value_or(squeezed_truncation(family.r));
          const Vector mode1 = truncated_mode(
              [&](int n) { return coherent_amplitudes(family.alpha, n); }, std::max(n1, 4), grow);
          const Vector mode2 = truncated_mode(
              [&](int n) { return squeezed_vacuum_amplitudes(family.r, family.theta, n); },
              std::max(n2, 4), grow);
          return TwoModeState::product_fock(mode1, mode2);
        } else if constexpr (std::is_same_v<T, TwinFock>) {
          return twin_fock_state(family.n);
        } else if constexpr (std::is_same_v<T, Intelligent>) {
          return solve_intelligent_state(family.label, family.eta, family.twice_m0).state;
        } else {
          return family.state;
        }
      },
      spec);
}

std::optional<MomentSet> analytic_moments(const InputStateSpec& spec) {
  return std::visit(
      [](const auto& family) -> std::optional<MomentSet> {
        using T = std::decay_t<decltype(family)>;
        if constexpr (std::is_same_v<T, CoherentVacuum>) {
          return coherent_vacuum_moments(std::norm(family.alpha));
        } else if constexpr (std::is_same_v<T, CoherentSqueezed>) {
          // closed form only in the matched-phase configuration
          if (std::abs(family.theta) > 1e-12 || std::abs(family.alpha.imag()) > 1e-12)
            return std::nullopt;
          return coherent_squeezed_moments(family.alpha.real(), family.r);
        } else if constexpr (std::is_same_v<T, TwinFock>) {
          return twin_fock_moments(family.n);
        } else if constexpr (std::is_same_v<T, Intelligent>) {
          return intelligent_moments(
              solve_intelligent_state(family.label, family.eta, family.twice_m0));
        } else {
          return std::nullopt;
        }
      },
      spec);
}

}  // namespace gwnoise
