#include <doctest.h>

#include <cmath>
#include <random>

#include "gwnoise/interferometer.hpp"
#include "gwnoise/noise.hpp"
#include "gwnoise/states.hpp"
#include "gwnoise/verify.hpp"

using namespace gwnoise;

TEST_CASE("beam-splitter decomposition reproduces the x rotation") {
  for (double phi : {0.0, 0.3, 1.2, -2.5}) {
    CHECK((interferometer_rotation(phi) - rotation_x(phi)).cwiseAbs().maxCoeff() < 1e-12);
  }
  const Eigen::Matrix3d lhs = interferometer_rotation(0.7) * interferometer_rotation(-1.9);
  CHECK((lhs - interferometer_rotation(0.7 - 1.9)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("heisenberg transform of q_out") {
  const MomentSet m = coherent_vacuum_moments(4.0);

  const auto at_zero = heisenberg_transform(m, 0.0);
  CHECK(at_zero.mean == doctest::Approx(2.0 * m.mean_jz).epsilon(1e-12));

  const auto dark = heisenberg_transform(m, std::numbers::pi / 2);
  CHECK(dark.variance == doctest::Approx(4.0 * m.var_jy).epsilon(1e-12));
  CHECK(dark.dmean_dphi == doctest::Approx(-2.0 * m.mean_jz).epsilon(1e-12));

  const auto flipped = heisenberg_transform(m, std::numbers::pi);
  CHECK(flipped.mean == doctest::Approx(-2.0 * m.mean_jz).epsilon(1e-12));
}

TEST_CASE("schroedinger evolution basics") {
  const auto state = TwoModeState::irrep_basis_state(IrrepLabel(2), 0);

  SUBCASE("phi = 0 is the identity") {
    const auto out = schroedinger_evolve(state, 0.0);
    CHECK((out.amplitudes() - state.amplitudes()).norm() < 1e-12);
  }

  SUBCASE("phi = 2 pi returns an integer-j state up to global phase") {
    std::mt19937_64 rng(5);
    const auto random = random_irrep_state(IrrepLabel(4), rng);
    const auto out = schroedinger_evolve(random, 2.0 * std::numbers::pi);
    const Complex overlap = random.amplitudes().dot(out.amplitudes());
    CHECK(std::abs(std::abs(overlap) - 1.0) < 1e-10);
  }

  SUBCASE("phi = pi/2 on |j=1, m=0>") {
    const auto out = schroedinger_evolve(state, std::numbers::pi / 2);
    const auto m = moments_of(out);
    CHECK(std::abs(m.mean_jz) < 1e-10);
    CHECK(m.var_jz + m.mean_jz * m.mean_jz == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("pictures agree on random states") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> phi_dist(-3.0, 3.0);
  for (int t = 0; t < 20; ++t) {
    const IrrepLabel label(1 + static_cast<int>(rng() % 16));
    const auto state = random_irrep_state(label, rng);
    const double phi = phi_dist(rng);
    const auto heis = heisenberg_transform(moments_of(state), phi);
    const auto after = moments_of(schroedinger_evolve(state, phi));
    CHECK(heis.mean == doctest::Approx(2.0 * after.mean_jz).epsilon(1e-9));
    CHECK(heis.variance ==
          doctest::Approx(4.0 * after.var_jz).epsilon(1e-9).scale(1.0 + std::abs(heis.variance)));
  }
}

TEST_CASE("coherent light at the dark fringe reaches the shot-noise limit") {
  for (double nbar : {4.0, 25.0, 1e6}) {
    const auto u = phase_uncertainty(coherent_vacuum_moments(nbar), std::numbers::pi / 2);
    CHECK(u.value == doctest::Approx(1.0 / std::sqrt(nbar)).epsilon(1e-12));
  }
}

TEST_CASE("photon difference is useless on twin Fock input") {
  const auto state = twin_fock_state(2);
  CHECK_THROWS_WITH_AS(phase_uncertainty(state, ObservableKind::PhotonDifference, 0.4),
                       doctest::Contains("vanishes"), std::domain_error);
  CHECK_THROWS(phase_uncertainty(twin_fock_moments(2), 0.4));
}

TEST_CASE("squared-difference readout on twin Fock") {
  SUBCASE("j = 1 at the dark fringe reaches the Heisenberg limit") {
    const auto u = phase_uncertainty(twin_fock_state(1), ObservableKind::SquaredDifference, 0.0);
    CHECK(std::abs(u.value - 0.5) < 1e-8);
  }

  SUBCASE("matches the closed form away from the fringe") {
    for (int n : {1, 2, 5}) {
      const double j = n;
      for (double phi : {0.1, 0.3}) {
        const auto u =
            phase_uncertainty(twin_fock_state(n), ObservableKind::SquaredDifference, phi);
        const double t2 = std::tan(phi) * std::tan(phi);
        const double expected = t2 / 8.0 + (2.0 - t2) / (4.0 * j * (j + 1.0));
        CHECK(u.value * u.value == doctest::Approx(expected).epsilon(1e-6));
      }
    }
  }
}

TEST_CASE("no readout beats the Heisenberg limit") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> phi_dist(-1.5, 1.5);
  int checked = 0;
  for (int t = 0; t < 40; ++t) {
    const IrrepLabel label(1 + static_cast<int>(rng() % 16));
    const double j = label.j();
    const double bound = 1.0 / std::sqrt(2.0 * j * (j + 1.0));
    const auto state = random_irrep_state(label, rng);
    const double phi = phi_dist(rng);
    for (ObservableKind kind :
         {ObservableKind::PhotonDifference, ObservableKind::SquaredDifference}) {
      try {
        const auto u = phase_uncertainty(state, kind, phi);
        CHECK(u.value >= bound - 1e-9);
        ++checked;
      } catch (const std::domain_error&) {
        // stationary observable for this state/phi; no estimate to bound
      }
    }
  }
  CHECK(checked > 40);
}

TEST_CASE("dark-fringe chain (dphi)_pc >= 1/(2 dJx)") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 25; ++t) {
    const IrrepLabel label(2 + static_cast<int>(rng() % 12));
    const auto m = moments_of(random_irrep_state(label, rng));
    if (std::abs(m.mean_jz) < 1e-6) continue;
    const auto u = phase_uncertainty(m, std::numbers::pi / 2);
    CHECK(u.value >= 1.0 / (2.0 * std::sqrt(m.var_jx)) - 1e-9);
  }
}

TEST_CASE("displacement-phase conversion") {
  const auto config = DetectorConfig::preset("initial-ligo");
  CHECK(phase_from_displacement(0.0, config) == 0.0);
  CHECK(phase_from_displacement(1.24e-19, config) == doctest::Approx(4.7e-11).epsilon(0.02));
  const double z = displacement_from_phase(std::numbers::pi, config);
  CHECK(phase_from_displacement(z, config) == doctest::Approx(std::numbers::pi).epsilon(1e-12));
}
