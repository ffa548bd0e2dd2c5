#include <doctest.h>

#include <random>

#include "gwnoise/su2.hpp"
#include "gwnoise/verify.hpp"

using namespace gwnoise;

namespace {
constexpr Complex kI{0.0, 1.0};

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }
}  // namespace

TEST_CASE("irrep label validation") {
  CHECK_THROWS(IrrepLabel(-1));
  CHECK_THROWS(IrrepLabel::from_j(0.3));
  CHECK_THROWS(IrrepLabel::from_j(-0.5));
  CHECK(IrrepLabel::from_j(1.5).twice_j == 3);
  CHECK(IrrepLabel::from_j(1.5).dim() == 4);
}

TEST_CASE("spin-1/2 matrices are halved Paulis") {
  const auto m = build_irrep_matrices(IrrepLabel(1));
  CHECK(m.jz(0, 0) == Complex(0.5, 0));
  CHECK(m.jz(1, 1) == Complex(-0.5, 0));
  CHECK(m.jx(0, 1) == Complex(0.5, 0));
  CHECK(m.jx(1, 0) == Complex(0.5, 0));
  CHECK(std::abs(m.jy(0, 1) - Complex(0, -0.5)) < 1e-15);
  CHECK(std::abs(m.jy(1, 0) - Complex(0, 0.5)) < 1e-15);
}

TEST_CASE("j = 0 irrep is the 1x1 zero matrix") {
  const auto m = build_irrep_matrices(IrrepLabel(0));
  CHECK(m.jx.rows() == 1);
  CHECK(std::abs(m.jx(0, 0)) == 0.0);
  CHECK(std::abs(m.jy(0, 0)) == 0.0);
  CHECK(std::abs(m.jz(0, 0)) == 0.0);
}

TEST_CASE("j = 1 commutator [Jx, Jy] = i Jz entrywise") {
  const auto m = build_irrep_matrices(IrrepLabel(2));
  CHECK(max_abs(m.jx * m.jy - m.jy * m.jx - kI * m.jz) < 1e-14);
}

TEST_CASE("commutation and Casimir for all irreps up to j = 20") {
  for (int twice_j = 0; twice_j <= 40; ++twice_j) {
    const auto m = build_irrep_matrices(IrrepLabel(twice_j));
    const double j = 0.5 * twice_j;
    CHECK(max_abs(m.jx - m.jx.adjoint()) < 1e-12);
    CHECK(max_abs(m.jx * m.jy - m.jy * m.jx - kI * m.jz) < 1e-10);
    CHECK(max_abs(m.jy * m.jz - m.jz * m.jy - kI * m.jx) < 1e-10);
    CHECK(max_abs(m.jz * m.jx - m.jx * m.jz - kI * m.jy) < 1e-10);
    const Matrix casimir = m.jx * m.jx + m.jy * m.jy + m.jz * m.jz;
    CHECK(max_abs(casimir - j * (j + 1) * Matrix::Identity(m.jx.rows(), m.jx.cols())) < 1e-10);
  }
}

TEST_CASE("fock operator construction") {
  CHECK_THROWS(build_fock_operators(0));

  SUBCASE("|1,0> has <Jz> = 1/2") {
    const auto ops = build_fock_operators(1);
    Vector amp = Vector::Zero(4);
    amp(2) = 1.0;  // lexicographic (n1, n2): index 1*(1+1)+0
    const TwoModeState state(FockBasis{1, 1}, amp);
    CHECK(real_expectation(ops.jz, state) == doctest::Approx(0.5).epsilon(1e-12));
  }

  SUBCASE("J^2 equals (N/2)(N/2+1) on every complete shell") {
    const int n_max = 4;
    const auto ops = build_fock_operators(n_max);
    const Matrix j2 = ops.jx * ops.jx + ops.jy * ops.jy + ops.jz * ops.jz;
    const Matrix rhs =
        0.5 * ops.n * (0.5 * ops.n + Matrix::Identity(ops.n.rows(), ops.n.cols()));
    const Matrix diff = j2 - rhs;
    // shells with n1 + n2 > n_max lose ladder partners to the truncation
    for (int r1 = 0; r1 <= n_max; ++r1)
      for (int r2 = 0; r2 + r1 <= n_max; ++r2)
        for (int c1 = 0; c1 <= n_max; ++c1)
          for (int c2 = 0; c2 + c1 <= n_max; ++c2)
            CHECK(std::abs(diff(r1 * (n_max + 1) + r2, c1 * (n_max + 1) + c2)) < 1e-12);
  }

  SUBCASE("|2,1> counts 3 photons") {
    const auto ops = build_fock_operators(3);
    Vector amp = Vector::Zero(16);
    amp(2 * 4 + 1) = 1.0;
    const TwoModeState state(FockBasis{3, 3}, amp);
    CHECK(real_expectation(ops.n, state) == doctest::Approx(3.0).epsilon(1e-12));
  }
}

TEST_CASE("fock and irrep operators agree shell by shell") {
  const int n_max = 6;
  const auto fock = build_fock_operators(n_max);
  for (int total = 0; total <= n_max; ++total) {
    const auto irrep = build_irrep_matrices(IrrepLabel(total));
    for (int a = 0; a <= total; ++a) {
      for (int b = 0; b <= total; ++b) {
        const int row = (total - a) * (n_max + 1) + a;
        const int col = (total - b) * (n_max + 1) + b;
        CHECK(std::abs(fock.jx(row, col) - irrep.jx(a, b)) < 1e-12);
        CHECK(std::abs(fock.jy(row, col) - irrep.jy(a, b)) < 1e-12);
        CHECK(std::abs(fock.jz(row, col) - irrep.jz(a, b)) < 1e-12);
      }
    }
  }
}

TEST_CASE("expectation basics") {
  SUBCASE("Jz on |j=1, m=0>") {
    const auto m = build_irrep_matrices(IrrepLabel(2));
    const auto state = TwoModeState::irrep_basis_state(IrrepLabel(2), 0);
    CHECK(std::abs(real_expectation(m.jz, state)) < 1e-14);
  }

  SUBCASE("Jx vanishes on a Fock product state") {
    const auto ops = build_fock_operators(2);
    Vector amp = Vector::Zero(9);
    amp(3) = 1.0;  // |1,0>
    const TwoModeState state(FockBasis{2, 2}, amp);
    CHECK(std::abs(real_expectation(ops.jx, state)) < 1e-14);
  }

  SUBCASE("Jx^2 on twin Fock |2,2> is j(j+1)/2 = 3") {
    const auto m = build_irrep_matrices(IrrepLabel(4));
    const auto state = TwoModeState::irrep_basis_state(IrrepLabel(4), 0);
    CHECK(real_expectation(Matrix(m.jx * m.jx), state) == doctest::Approx(3.0).epsilon(1e-12));
  }

  SUBCASE("dimension mismatch is rejected") {
    const auto m = build_irrep_matrices(IrrepLabel(2));
    const auto state = TwoModeState::irrep_basis_state(IrrepLabel(4), 0);
    CHECK_THROWS(expectation(m.jz, state));
  }
}

TEST_CASE("state construction and normalization") {
  Vector amp(3);
  amp << Complex(3, 0), Complex(0, 4), Complex(0, 0);
  const TwoModeState state(IrrepBasis{IrrepLabel(2)}, amp);
  CHECK(state.amplitudes().norm() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS(TwoModeState(IrrepBasis{IrrepLabel(2)}, Vector::Zero(3)));
  CHECK_THROWS(TwoModeState(IrrepBasis{IrrepLabel(2)}, Vector::Zero(5)));
  CHECK_THROWS(TwoModeState::irrep_basis_state(IrrepLabel(2), 1));  // wrong parity
}

TEST_CASE("moments of basic states") {
  SUBCASE("two-mode vacuum") {
    const auto m = moments_of(TwoModeState::fock_vacuum(2, 2));
    CHECK(m.nbar == doctest::Approx(0.0));
    CHECK(std::abs(m.mean_jz) < 1e-14);
    CHECK(std::abs(m.var_jx) < 1e-14);
  }

  SUBCASE("|1,0>") {
    Vector amp = Vector::Zero(9);
    amp(3) = 1.0;
    const auto m = moments_of(TwoModeState(FockBasis{2, 2}, amp));
    CHECK(m.mean_jz == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(m.var_jx == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(m.var_jy == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(m.nbar1 == doctest::Approx(1.0).epsilon(1e-12));
  }

  SUBCASE("twin Fock |1,1>") {
    const auto m = moments_of(TwoModeState::irrep_basis_state(IrrepLabel(2), 0));
    CHECK(std::abs(m.mean_jz) < 1e-14);
    CHECK(std::abs(m.var_jz) < 1e-14);
    CHECK(m.var_jx == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(m.var_jy == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("moment sets of random states satisfy the uncertainty relation") {
  std::mt19937_64 rng(1234);
  for (int t = 0; t < 50; ++t) {
    const int twice_j = 1 + static_cast<int>(rng() % 16);
    const auto m = moments_of(random_irrep_state(IrrepLabel(twice_j), rng));
    CHECK(m.var_jx >= 0.0);
    CHECK(m.var_jy >= 0.0);
    CHECK(m.var_jz >= 0.0);
    CHECK(m.var_jx * m.var_jy >= 0.25 * m.mean_jz * m.mean_jz * (1.0 - 1e-9) - 1e-12);
    CHECK(m.nbar == doctest::Approx(m.nbar1 + m.nbar2).epsilon(1e-9));
  }
}
