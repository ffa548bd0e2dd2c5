#include "gwnoise/interferometer.hpp"

#include <cmath>

namespace gwnoise {

namespace {
constexpr Complex kI{0.0, 1.0};
}

Eigen::Matrix3d rotation_x(double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  Eigen::Matrix3d r;
  r << 1, 0, 0, 0, c, -s, 0, s, c;
  return r;
}

Eigen::Matrix3d rotation_y(double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  Eigen::Matrix3d r;
  r << c, 0, s, 0, 1, 0, -s, 0, c;
  return r;
}

Eigen::Matrix3d rotation_z(double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  Eigen::Matrix3d r;
  r << c, -s, 0, s, c, 0, 0, 0, 1;
  return r;
}

Eigen::Matrix3d interferometer_rotation(double phi) {
  constexpr double half_pi = std::numbers::pi / 2.0;
  return rotation_y(half_pi) * rotation_z(phi) * rotation_y(-half_pi);
}

PhotonDifferenceStats heisenberg_transform(const MomentSet& m, double phi) {
  const double s = std::sin(phi), c = std::cos(phi);
  PhotonDifferenceStats out;
  out.mean = 2.0 * (s * m.mean_jy + c * m.mean_jz);
  out.variance = 4.0 * (s * s * m.var_jy + c * c * m.var_jz + 2.0 * s * c * m.cov_jy_jz);
  out.dmean_dphi = 2.0 * (c * m.mean_jy - s * m.mean_jz);
  return out;
}

namespace {

Matrix dense_jx(const Basis& basis) {
  if (const auto* irrep = std::get_if<IrrepBasis>(&basis)) {
    return build_irrep_matrices(irrep->label).jx;
  }
  const auto& b = std::get<FockBasis>(basis);
  Matrix jx = Matrix::Zero(b.dim(), b.dim());
  for (int n1 = 0; n1 <= b.n_max1; ++n1) {
    for (int n2 = 0; n2 <= b.n_max2; ++n2) {
      if (n1 < b.n_max1 && n2 > 0)
        jx(b.index(n1 + 1, n2 - 1), b.index(n1, n2)) =
            0.5 * std::sqrt(double(n1 + 1) * double(n2));
      if (n1 > 0 && n2 < b.n_max2)
        jx(b.index(n1 - 1, n2 + 1), b.index(n1, n2)) =
            0.5 * std::sqrt(double(n1) * double(n2 + 1));
    }
  }
  return jx;
}

}  // namespace

Evolver::Evolver(const Basis& basis) : basis_(basis) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(dense_jx(basis));
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("Evolver: eigendecomposition of Jx failed");
  eigenvalues_ = solver.eigenvalues();
  eigenvectors_ = solver.eigenvectors();
}

TwoModeState Evolver::evolve(const TwoModeState& state, double phi) const {
  if (state.dim() != eigenvectors_.rows())
    throw std::invalid_argument("Evolver: state dimension does not match basis");
  Vector coeff = eigenvectors_.adjoint() * state.amplitudes();
  for (int i = 0; i < coeff.size(); ++i) coeff(i) *= std::exp(-kI * (phi * eigenvalues_(i)));
  return TwoModeState(basis_, eigenvectors_ * coeff);
}

TwoModeState schroedinger_evolve(const TwoModeState& state, double phi) {
  return Evolver(state.basis()).evolve(state, phi);
}

PhaseUncertainty phase_uncertainty(const MomentSet& moments, double phi) {
  const PhotonDifferenceStats stats = heisenberg_transform(moments, phi);
  const double scale = std::max({1.0, std::abs(stats.mean), std::sqrt(std::abs(stats.variance))});
  if (std::abs(stats.dmean_dphi) < 1e-12 * scale)
    throw std::domain_error("phase_uncertainty: derivative of <q_out> vanishes at this phi");
  return {std::sqrt(std::abs(stats.variance)) / std::abs(stats.dmean_dphi),
          ObservableKind::PhotonDifference, phi};
}

namespace {

struct ObservableStats {
  double mean = 0;
  double spread = 0;  // standard deviation
  double slope = 0;   // d<O>/dphi
};

// Jz is diagonal in both bases, so its power moments are plain weighted sums.
void jz_power_moments(const TwoModeState& state, double& jz2, double& jz4) {
  jz2 = jz4 = 0.0;
  const Vector& amp = state.amplitudes();
  auto accumulate = [&](double m, double p) {
    const double m2 = m * m;
    jz2 += p * m2;
    jz4 += p * m2 * m2;
  };
  if (state.is_fock()) {
    const auto& b = state.fock_basis();
    for (int n1 = 0; n1 <= b.n_max1; ++n1)
      for (int n2 = 0; n2 <= b.n_max2; ++n2)
        accumulate(0.5 * (n1 - n2), std::norm(amp(b.index(n1, n2))));
  } else {
    const auto& b = state.irrep_basis();
    const double j = b.label.j();
    for (int i = 0; i < b.dim(); ++i) accumulate(j - i, std::norm(amp(i)));
  }
}

double mean_s(const Evolver& evolver, const TwoModeState& state, double phi) {
  double jz2, jz4;
  jz_power_moments(evolver.evolve(state, phi), jz2, jz4);
  return 4.0 * jz2;
}

ObservableStats observable_stats(const Evolver& evolver, const TwoModeState& state,
                                 ObservableKind kind, double phi) {
  const TwoModeState out = evolver.evolve(state, phi);
  ObservableStats stats;
  if (kind == ObservableKind::PhotonDifference) {
    const MomentSet m = moments_of(out);
    stats.mean = 2.0 * m.mean_jz;
    stats.spread = 2.0 * std::sqrt(std::max(0.0, m.var_jz));
    stats.slope = 2.0 * m.mean_jy;  // d<Jz>/dphi = <Jy> under exp(-i phi Jx)
  } else {
    double jz2, jz4;
    jz_power_moments(out, jz2, jz4);
    stats.mean = 4.0 * jz2;
    stats.spread = 4.0 * std::sqrt(std::max(0.0, jz4 - jz2 * jz2));
    // central difference, h = 1e-5, one Richardson level
    const double h = 1e-5;
    auto d = [&](double step) {
      return (mean_s(evolver, state, phi + step) - mean_s(evolver, state, phi - step)) /
             (2.0 * step);
    };
    stats.slope = (4.0 * d(h / 2.0) - d(h)) / 3.0;
  }
  return stats;
}

}  // namespace

PhaseUncertainty phase_uncertainty(const Evolver& evolver, const TwoModeState& state,
                                   ObservableKind kind, double phi) {
  const ObservableStats stats = observable_stats(evolver, state, kind, phi);
  const double scale = std::max({1.0, std::abs(stats.mean), stats.spread});
  if (std::abs(stats.slope) >= 1e-12 * scale && stats.spread >= 1e-12 * scale)
    return {stats.spread / std::abs(stats.slope), kind, phi};

  if (stats.spread >= 1e-6 * scale)
    throw std::domain_error("phase_uncertainty: derivative of the observable mean vanishes");

  // a state-independent observable (e.g. S on j = 1/2, where Jz^2 is a
  // multiple of the identity) carries no phase information at any phi
  const ObservableStats probe = observable_stats(evolver, state, kind, phi + 0.01);
  const double probe_scale = std::max({1.0, std::abs(probe.mean), probe.spread});
  if (probe.spread < 1e-9 * probe_scale)
    throw std::domain_error("phase_uncertainty: observable is constant on this state");

  // dark fringe of S: spread and slope vanish together, the ratio has a
  // finite limit; extrapolate (delta phi)^2 from symmetric offsets
  auto g = [&](double delta) {
    const PhaseUncertainty u = phase_uncertainty(evolver, state, kind, phi + delta);
    return u.value * u.value;
  };
  auto gs = [&](double delta) { return 0.5 * (g(delta) + g(-delta)); };
  const double d0 = 0.01;
  const double r1a = (4.0 * gs(d0 / 2.0) - gs(d0)) / 3.0;
  const double r1b = (4.0 * gs(d0 / 4.0) - gs(d0 / 2.0)) / 3.0;
  const double limit = (16.0 * r1b - r1a) / 15.0;
  if (!(limit > 0.0) || !std::isfinite(limit))
    throw std::domain_error("phase_uncertainty: 0/0 limit did not converge");
  return {std::sqrt(limit), kind, phi};
}

PhaseUncertainty phase_uncertainty(const TwoModeState& state, ObservableKind kind, double phi) {
  return phase_uncertainty(Evolver(state.basis()), state, kind, phi);
}

double phase_from_displacement(double z, const DetectorConfig& config) {
  return config.omega() * config.tau() * z / config.arm_length;
}

double displacement_from_phase(double phi, const DetectorConfig& config) {
  return phi * config.arm_length / (config.omega() * config.tau());
}

}  // namespace gwnoise
