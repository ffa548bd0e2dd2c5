#include "gwnoise/su2.hpp"

#include <cmath>
#include <unsupported/Eigen/KroneckerProduct>

namespace gwnoise {

namespace {
constexpr Complex kI{0.0, 1.0};
}

IrrepLabel IrrepLabel::from_j(double j) {
  const double twice = 2.0 * j;
  const double rounded = std::round(twice);
  if (j < 0 || std::abs(twice - rounded) > 1e-9)
    throw std::invalid_argument("IrrepLabel: j must be a non-negative half-integer");
  return IrrepLabel(static_cast<int>(rounded));
}

IrrepMatrices build_irrep_matrices(IrrepLabel label) {
  const int d = label.dim();
  const double j = label.j();
  Matrix jp = Matrix::Zero(d, d);  // raising operator J+
  Matrix jz = Matrix::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    const double m = j - i;
    jz(i, i) = m;
    if (i > 0) jp(i - 1, i) = std::sqrt(j * (j + 1) - m * (m + 1));
  }
  IrrepMatrices out;
  out.label = label;
  out.jz = std::move(jz);
  out.jx = 0.5 * (jp + jp.adjoint());
  out.jy = -0.5 * kI * (jp - Matrix(jp.adjoint()));
  return out;
}

FockOperators build_fock_operators(int n_max) {
  if (n_max < 1) throw std::invalid_argument("build_fock_operators: n_max must be >= 1");
  const int d = n_max + 1;
  Matrix a = Matrix::Zero(d, d);
  for (int n = 1; n <= n_max; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  const Matrix id = Matrix::Identity(d, d);

  FockOperators out;
  out.n_max = n_max;
  out.a1 = Eigen::kroneckerProduct(a, id);
  out.a2 = Eigen::kroneckerProduct(id, a);
  const Matrix a1d = out.a1.adjoint();
  const Matrix a2d = out.a2.adjoint();
  out.jx = 0.5 * (a1d * out.a2 + a2d * out.a1);
  out.jy = -0.5 * kI * (a1d * out.a2 - a2d * out.a1);
  out.jz = 0.5 * (a1d * out.a1 - a2d * out.a2);
  out.n = a1d * out.a1 + a2d * out.a2;
  return out;
}

int basis_dim(const Basis& basis) {
  return std::visit([](const auto& b) { return b.dim(); }, basis);
}

TwoModeState::TwoModeState(Basis basis, Vector amplitudes)
    : basis_(std::move(basis)), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != basis_dim(basis_))
    throw std::invalid_argument("TwoModeState: amplitude vector does not match basis dimension");
  const double norm = amplitudes_.norm();
  if (norm < 1e-12)
    throw std::invalid_argument("TwoModeState: cannot normalize a null vector");
  amplitudes_ /= norm;
}

TwoModeState TwoModeState::fock_vacuum(int n_max1, int n_max2) {
  FockBasis basis{n_max1, n_max2};
  Vector amp = Vector::Zero(basis.dim());
  amp(0) = 1.0;
  return TwoModeState(basis, std::move(amp));
}

TwoModeState TwoModeState::product_fock(const Vector& mode1, const Vector& mode2) {
  FockBasis basis{static_cast<int>(mode1.size()) - 1, static_cast<int>(mode2.size()) - 1};
  Vector amp(basis.dim());
  for (int n1 = 0; n1 <= basis.n_max1; ++n1)
    for (int n2 = 0; n2 <= basis.n_max2; ++n2)
      amp(basis.index(n1, n2)) = mode1(n1) * mode2(n2);
  return TwoModeState(basis, std::move(amp));
}

TwoModeState TwoModeState::irrep_basis_state(IrrepLabel label, int twice_m) {
  if (std::abs(twice_m) > label.twice_j || (label.twice_j - twice_m) % 2 != 0)
    throw std::invalid_argument("irrep_basis_state: m must satisfy |m| <= j with j - m integer");
  IrrepBasis basis{label};
  Vector amp = Vector::Zero(basis.dim());
  amp((label.twice_j - twice_m) / 2) = 1.0;  // m ordered j, j-1, ..., -j
  return TwoModeState(basis, std::move(amp));
}

const FockBasis& TwoModeState::fock_basis() const {
  if (const auto* b = std::get_if<FockBasis>(&basis_)) return *b;
  throw std::logic_error("TwoModeState: not a Fock-basis state");
}

const IrrepBasis& TwoModeState::irrep_basis() const {
  if (const auto* b = std::get_if<IrrepBasis>(&basis_)) return *b;
  throw std::logic_error("TwoModeState: not an irrep-basis state");
}

namespace {

// out[n1-1,n2+1] accumulates sqrt(n1 (n2+1)) in[n1,n2] and so on; each
// Schwinger operator is a two-term hop on the lattice of occupation pairs.
Vector apply_fock_op(const TwoModeState& state, double c_up, Complex c_phase_up,
                     Complex c_phase_dn) {
  // generic (c_phase_up * a1† a2 + c_phase_dn * a2† a1) / 2 action
  const auto& b = state.fock_basis();
  const auto& in = state.amplitudes();
  Vector out = Vector::Zero(in.size());
  for (int n1 = 0; n1 <= b.n_max1; ++n1) {
    for (int n2 = 0; n2 <= b.n_max2; ++n2) {
      const Complex amp = in(b.index(n1, n2));
      if (amp == 0.0) continue;
      // a1† a2 : (n1, n2) -> (n1+1, n2-1)
      if (n1 < b.n_max1 && n2 > 0)
        out(b.index(n1 + 1, n2 - 1)) +=
            c_up * c_phase_up * std::sqrt(double(n1 + 1) * double(n2)) * amp;
      // a2† a1 : (n1, n2) -> (n1-1, n2+1)
      if (n1 > 0 && n2 < b.n_max2)
        out(b.index(n1 - 1, n2 + 1)) +=
            c_up * c_phase_dn * std::sqrt(double(n1) * double(n2 + 1)) * amp;
    }
  }
  return out;
}

Vector apply_irrep_tridiag(const TwoModeState& state, Complex c_plus, Complex c_minus) {
  // (c_plus * J+ + c_minus * J-) action in the |j,m> basis
  const auto& b = state.irrep_basis();
  const auto& in = state.amplitudes();
  const double j = b.label.j();
  const int d = b.dim();
  Vector out = Vector::Zero(d);
  for (int i = 0; i < d; ++i) {
    const double m = j - i;
    const Complex amp = in(i);
    if (amp == 0.0) continue;
    if (i > 0) out(i - 1) += c_plus * std::sqrt(j * (j + 1) - m * (m + 1)) * amp;
    if (i < d - 1) out(i + 1) += c_minus * std::sqrt(j * (j + 1) - m * (m - 1)) * amp;
  }
  return out;
}

Vector apply_diag(const TwoModeState& state, auto&& weight) {
  Vector out = state.amplitudes();
  if (state.is_fock()) {
    const auto& b = state.fock_basis();
    for (int n1 = 0; n1 <= b.n_max1; ++n1)
      for (int n2 = 0; n2 <= b.n_max2; ++n2)
        out(b.index(n1, n2)) *= weight(double(n1), double(n2));
  } else {
    const auto& b = state.irrep_basis();
    const double j = b.label.j();
    for (int i = 0; i < b.dim(); ++i) {
      const double m = j - i;
      out(i) *= weight(j + m, j - m);  // n1 = j + m, n2 = j - m
    }
  }
  return out;
}

}  // namespace

Vector apply_jx(const TwoModeState& state) {
  if (state.is_fock()) return apply_fock_op(state, 0.5, 1.0, 1.0);
  return apply_irrep_tridiag(state, 0.5, 0.5);
}

Vector apply_jy(const TwoModeState& state) {
  if (state.is_fock()) return apply_fock_op(state, 0.5, -kI, kI);
  return apply_irrep_tridiag(state, -0.5 * kI, 0.5 * kI);
}

Vector apply_jz(const TwoModeState& state) {
  return apply_diag(state, [](double n1, double n2) { return 0.5 * (n1 - n2); });
}

Vector apply_n1(const TwoModeState& state) {
  return apply_diag(state, [](double n1, double) { return n1; });
}

Vector apply_n2(const TwoModeState& state) {
  return apply_diag(state, [](double, double n2) { return n2; });
}

Complex expectation(const Matrix& op, const TwoModeState& state) {
  if (op.rows() != state.dim() || op.cols() != state.dim())
    throw std::invalid_argument("expectation: operator and state dimensions differ");
  return state.amplitudes().dot(op * state.amplitudes());
}

double real_expectation(const Matrix& op, const TwoModeState& state) {
  const Complex value = expectation(op, state);
  const double scale = std::max(1.0, std::abs(value.real()));
  if (std::abs(value.imag()) > 1e-10 * scale)
    throw std::domain_error("real_expectation: imaginary residue exceeds tolerance");
  return value.real();
}

MomentSet moments_of(const TwoModeState& state) {
  const Vector& psi = state.amplitudes();
  const Vector jx_psi = apply_jx(state);
  const Vector jy_psi = apply_jy(state);
  const Vector jz_psi = apply_jz(state);

  MomentSet m;
  m.mean_jx = psi.dot(jx_psi).real();
  m.mean_jy = psi.dot(jy_psi).real();
  m.mean_jz = psi.dot(jz_psi).real();
  m.var_jx = jx_psi.squaredNorm() - m.mean_jx * m.mean_jx;
  m.var_jy = jy_psi.squaredNorm() - m.mean_jy * m.mean_jy;
  m.var_jz = jz_psi.squaredNorm() - m.mean_jz * m.mean_jz;
  m.cov_jy_jz = jy_psi.dot(jz_psi).real() - m.mean_jy * m.mean_jz;
  m.nbar1 = psi.dot(apply_n1(state)).real();
  m.nbar2 = psi.dot(apply_n2(state)).real();
  m.nbar = m.nbar1 + m.nbar2;
  return m;
}

}  // namespace gwnoise
