#include <doctest.h>

#include <cmath>

#include "gwnoise/io.hpp"

using namespace gwnoise;

TEST_CASE("detector config round trip") {
  const auto config = DetectorConfig::preset("initial-ligo");
  const json j = to_json(config);
  CHECK(j.at("mirror_mass_kg").get<double>() == 11.0);
  CHECK(j.at("arm_length_m").get<double>() == 4000.0);
  CHECK(j.at("finesse").get<double>() == 200.0);
  CHECK(j.at("wavelength_m").get<double>() == 1.064e-6);

  const auto back = config_from_json(j);
  CHECK(back.mirror_mass == config.mirror_mass);
  CHECK(back.wavelength == config.wavelength);

  CHECK_THROWS(config_from_json(json{{"mirror_mass_kg", 11.0}}));
  CHECK_THROWS(config_from_json(json{{"mirror_mass_kg", -1.0},
                                     {"arm_length_m", 4000.0},
                                     {"finesse", 200.0},
                                     {"wavelength_m", 1.064e-6}}));
}

TEST_CASE("input-state spec round trips") {
  SUBCASE("coherent") {
    const InputStateSpec spec = CoherentVacuum{Complex(2.0, -0.5)};
    const json j = to_json(spec);
    CHECK(j.at("family") == "coherent");
    CHECK(j.at("alpha_re").get<double>() == 2.0);
    const auto back = spec_from_json(j);
    CHECK(std::get<CoherentVacuum>(back).alpha == Complex(2.0, -0.5));
  }

  SUBCASE("squeezed") {
    const InputStateSpec spec = CoherentSqueezed{Complex(1.0, 0.0), 0.7, 0.3};
    const auto back = spec_from_json(to_json(spec));
    const auto& s = std::get<CoherentSqueezed>(back);
    CHECK(s.r == 0.7);
    CHECK(s.theta == 0.3);
  }

  SUBCASE("twin-fock") {
    const auto back = spec_from_json(to_json(InputStateSpec{TwinFock{4}}));
    CHECK(std::get<TwinFock>(back).n == 4);
  }

  SUBCASE("intelligent") {
    const InputStateSpec spec = Intelligent{IrrepLabel(5), 0.4, 1};
    const json j = to_json(spec);
    CHECK(j.at("j2").get<int>() == 5);
    CHECK(j.at("m0x2").get<int>() == 1);
    const auto& back = std::get<Intelligent>(spec_from_json(j));
    CHECK(back.label.twice_j == 5);
    CHECK(back.eta == 0.4);
  }

  SUBCASE("custom states are not serializable") {
    CHECK_THROWS(to_json(InputStateSpec{Custom{twin_fock_state(1)}}));
  }

  SUBCASE("unknown family is rejected") {
    CHECK_THROWS(spec_from_json(json{{"family", "thermal"}}));
    CHECK_THROWS(spec_from_json(json{{"n", 3}}));
  }
}

TEST_CASE("noise budget and moment serialization") {
  NoiseBudget budget;
  budget.dz_pc = 1e-19;
  budget.dz_rp = 2e-19;
  budget.nbar = 1e20;
  budget.power = 191e3;
  budget.flag = "asymptotic-regime";
  const json j = to_json(budget);
  CHECK(j.at("dz_pc_m").get<double>() == 1e-19);
  CHECK(j.at("dz_total_m").get<double>() == doctest::Approx(std::hypot(1e-19, 2e-19)));
  CHECK(j.at("flag") == "asymptotic-regime");

  const json m = to_json(coherent_vacuum_moments(4.0));
  CHECK(m.at("mean_jz").get<double>() == doctest::Approx(2.0));
  CHECK(m.at("var_jy").get<double>() == doctest::Approx(1.0));
  CHECK(m.at("nbar").get<double>() == doctest::Approx(4.0));
}

TEST_CASE("matrix dump shape") {
  const auto ops = build_irrep_matrices(IrrepLabel(2));
  const json j = matrix_to_json(ops.jy);
  REQUIRE(j.size() == 3);
  REQUIRE(j[0].size() == 3);
  CHECK(j[0][1][0].get<double>() == doctest::Approx(0.0));
  CHECK(j[0][1][1].get<double>() == doctest::Approx(-1.0 / std::sqrt(2.0)));
}
