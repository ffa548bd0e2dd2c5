#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "gwnoise/su2.hpp"

namespace gwnoise {

// ---- input-state families --------------------------------------------------

struct CoherentVacuum {
  Complex alpha{0.0, 0.0};
};

/// Coherent carrier in port 1, squeezed vacuum xi = r e^{i theta} in port 2.
struct CoherentSqueezed {
  Complex alpha{0.0, 0.0};
  double r = 0.0;
  double theta = 0.0;
};

struct TwinFock {
  int n = 0;  // photons per port; the state is |n>|n> = |j=n, m=0>
};

struct Intelligent {
  IrrepLabel label;
  double eta = 0.0;
  int twice_m0 = 0;
};

struct Custom {
  TwoModeState state;
};

using InputStateSpec = std::variant<CoherentVacuum, CoherentSqueezed, TwinFock, Intelligent, Custom>;

// ---- analytic moment engines ----------------------------------------------

MomentSet coherent_vacuum_moments(double nbar);

/// Matched-phase configuration (theta = 0, real alpha); the only case with
/// a closed moment list.
MomentSet coherent_squeezed_moments(double alpha, double r);

TwoModeState twin_fock_state(int n);
MomentSet twin_fock_moments(int n);

// ---- intelligent states ----------------------------------------------------

/// Normalized eigenvector of eta*Jx - i*Jy with eigenvalue i*m0*sqrt(1-eta^2),
/// i.e. a Jx-Jy minimum-uncertainty state.
struct IntelligentStateSolution {
  Complex eigenvalue{0.0, 0.0};
  TwoModeState state;
  double eta = 0.0;
  int twice_m0 = 0;
};

IntelligentStateSolution solve_intelligent_state(IrrepLabel label, double eta, int twice_m0);

/// All eigenvalues of eta*Jx - i*Jy on the irrep, sorted by imaginary part
/// descending (the order of m0 = j, ..., -j).
std::vector<Complex> intelligent_spectrum(IrrepLabel label, double eta);

/// Moment set built from the eigenvalue relations: <Jx> = 0,
/// <Jy> = -m0 sqrt(1-eta^2), var_jx = |<Jz>/(2 eta)|, var_jy = eta^2 var_jx.
/// Only <Jz> and var_jz come from the amplitude distribution.
MomentSet intelligent_moments(const IntelligentStateSolution& sol);

/// The eta -> 0 closed form (2*dJx)^2 = 2(j^2 - m0^2 + j).
double intelligent_limit_4varjx(double j, double m0);

// ---- explicit state construction ------------------------------------------

/// Photon-number amplitudes of |alpha> up to n_max.
Vector coherent_amplitudes(Complex alpha, int n_max);

/// Even-photon expansion of the squeezed vacuum with xi = r e^{i theta}.
Vector squeezed_vacuum_amplitudes(double r, double theta, int n_max);

int coherent_truncation(double abs_alpha);
int squeezed_truncation(double r);

/// Explicit normalized state for a spec; Fock basis for coherent families,
/// irrep basis for twin-Fock and intelligent. Throws if the truncated tail
/// probability is not below 1e-12 (after growing the default rule if needed;
/// an explicit override is used as-is and checked).
TwoModeState spec_to_state(const InputStateSpec& spec,
                           std::optional<int> truncation_override = std::nullopt);

/// Closed-form moments where the family has them (all except Custom and
/// unmatched-phase CoherentSqueezed, which go through the oracle route).
std::optional<MomentSet> analytic_moments(const InputStateSpec& spec);

}  // namespace gwnoise
