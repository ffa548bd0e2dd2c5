#pragma once

#include <complex>
#include <stdexcept>
#include <variant>

#include <Eigen/Dense>

namespace gwnoise {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Spin label j of an su(2) irreducible representation, stored as 2j so
/// half-integer values stay exact.
struct IrrepLabel {
  int twice_j = 0;

  IrrepLabel() = default;
  explicit IrrepLabel(int twice_j_) : twice_j(twice_j_) {
    if (twice_j < 0) throw std::invalid_argument("IrrepLabel: 2j must be a non-negative integer");
  }
  static IrrepLabel from_j(double j);

  double j() const { return 0.5 * twice_j; }
  int dim() const { return twice_j + 1; }
};

/// Angular-momentum matrices of one irrep in the |j,m> basis,
/// ordered m = j, j-1, ..., -j.
struct IrrepMatrices {
  IrrepLabel label;
  Matrix jx, jy, jz;
};

IrrepMatrices build_irrep_matrices(IrrepLabel label);

/// Two-mode ladder and Schwinger operators on the truncated Fock space,
/// n1, n2 <= n_max, basis lexicographic in (n1, n2).
///
/// Truncation breaks the commutation relations only in the top
/// photon-number shell n1 + n2 > n_max; states supported strictly below
/// it see the exact algebra.
struct FockOperators {
  int n_max = 0;
  Matrix a1, a2;          // annihilation
  Matrix jx, jy, jz, n;   // Schwinger operators and total photon number
};

FockOperators build_fock_operators(int n_max);

struct FockBasis {
  int n_max1 = 0;
  int n_max2 = 0;
  int dim() const { return (n_max1 + 1) * (n_max2 + 1); }
  int index(int n1, int n2) const { return n1 * (n_max2 + 1) + n2; }
};

struct IrrepBasis {
  IrrepLabel label;
  int dim() const { return label.dim(); }
};

using Basis = std::variant<FockBasis, IrrepBasis>;

int basis_dim(const Basis& basis);

/// Pure state of the two-mode field, either over the truncated Fock basis
/// |n1,n2> or inside a single irrep |j,m>. Normalized at construction;
/// immutable afterwards.
class TwoModeState {
 public:
  TwoModeState(Basis basis, Vector amplitudes);

  static TwoModeState fock_vacuum(int n_max1, int n_max2);
  static TwoModeState product_fock(const Vector& mode1, const Vector& mode2);
  static TwoModeState irrep_basis_state(IrrepLabel label, int twice_m);

  const Basis& basis() const { return basis_; }
  const Vector& amplitudes() const { return amplitudes_; }
  int dim() const { return static_cast<int>(amplitudes_.size()); }

  bool is_fock() const { return std::holds_alternative<FockBasis>(basis_); }
  const FockBasis& fock_basis() const;
  const IrrepBasis& irrep_basis() const;

 private:
  Basis basis_;
  Vector amplitudes_;
};

/// First and second moments of the Schwinger operators; the only input the
/// noise formulas need. cov_jy_jz is the symmetrized covariance, zero for
/// every matched-phase family considered here.
struct MomentSet {
  double mean_jx = 0, mean_jy = 0, mean_jz = 0;
  double var_jx = 0, var_jy = 0, var_jz = 0;
  double cov_jy_jz = 0;
  double nbar = 0, nbar1 = 0, nbar2 = 0;
};

// Matrix-free application of the Schwinger operators to a state vector;
// used so moments of large truncated coherent/squeezed states never
// materialize a dense two-mode matrix.
Vector apply_jx(const TwoModeState& state);
Vector apply_jy(const TwoModeState& state);
Vector apply_jz(const TwoModeState& state);
Vector apply_n1(const TwoModeState& state);
Vector apply_n2(const TwoModeState& state);

Complex expectation(const Matrix& op, const TwoModeState& state);
double real_expectation(const Matrix& op, const TwoModeState& state);

MomentSet moments_of(const TwoModeState& state);

}  // namespace gwnoise
