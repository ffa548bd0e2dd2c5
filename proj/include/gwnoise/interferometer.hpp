#pragma once

#include "gwnoise/config.hpp"
#include "gwnoise/su2.hpp"

namespace gwnoise {

// 3x3 rotations acting on the column (Jx, Jy, Jz). The lossless
// interferometer is R_x(phi) = R_y(pi/2) R_z(phi) R_y(-pi/2): beam splitter,
// relative phase phi between the arms, beam splitter again.
Eigen::Matrix3d rotation_x(double angle);
Eigen::Matrix3d rotation_y(double angle);
Eigen::Matrix3d rotation_z(double angle);
Eigen::Matrix3d interferometer_rotation(double phi);

enum class ObservableKind {
  PhotonDifference,   // q_out = 2 Jz_out
  SquaredDifference,  // S = q_out^2
};

/// Output statistics of q_out = 2[(sin phi) Jy + (cos phi) Jz] propagated
/// through the Heisenberg picture from input moments.
struct PhotonDifferenceStats {
  double mean = 0;
  double variance = 0;
  double dmean_dphi = 0;
};

PhotonDifferenceStats heisenberg_transform(const MomentSet& moments, double phi);

/// Applies exp(-i phi Jx) via a cached eigendecomposition of Jx on the
/// state's basis; reusable across phase sweeps.
class Evolver {
 public:
  explicit Evolver(const Basis& basis);
  TwoModeState evolve(const TwoModeState& state, double phi) const;

 private:
  Basis basis_;
  Eigen::VectorXd eigenvalues_;
  Matrix eigenvectors_;
};

TwoModeState schroedinger_evolve(const TwoModeState& state, double phi);

struct PhaseUncertainty {
  double value = 0;  // radians
  ObservableKind kind = ObservableKind::PhotonDifference;
  double phi = 0;
};

/// Error-propagation uncertainty from input moments, q_out scheme.
PhaseUncertainty phase_uncertainty(const MomentSet& moments, double phi);

/// State-based (oracle) route for either observable. For SquaredDifference
/// the slope comes from a Richardson-extrapolated central difference; a
/// simultaneous zero of spread and slope (dark fringe of S) is resolved by
/// extrapolating the 0/0 limit.
PhaseUncertainty phase_uncertainty(const TwoModeState& state, ObservableKind kind, double phi);
PhaseUncertainty phase_uncertainty(const Evolver& evolver, const TwoModeState& state,
                                   ObservableKind kind, double phi);

/// phi = (omega tau / L) z and its inverse.
double phase_from_displacement(double z, const DetectorConfig& config);
double displacement_from_phase(double phi, const DetectorConfig& config);

}  // namespace gwnoise
