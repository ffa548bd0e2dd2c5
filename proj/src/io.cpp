#include "gwnoise/io.hpp"

namespace gwnoise {

json to_json(const DetectorConfig& config) {
  return json{{"mirror_mass_kg", config.mirror_mass},
              {"arm_length_m", config.arm_length},
              {"finesse", config.finesse},
              {"wavelength_m", config.wavelength}};
}

DetectorConfig config_from_json(const json& j) {
  return DetectorConfig(j.at("mirror_mass_kg").get<double>(), j.at("arm_length_m").get<double>(),
                        j.at("finesse").get<double>(), j.at("wavelength_m").get<double>());
}

json to_json(const InputStateSpec& spec) {
  return std::visit(
      [](const auto& family) -> json {
        using T = std::decay_t<decltype(family)>;
        if constexpr (std::is_same_v<T, CoherentVacuum>) {
          return json{{"family", "coherent"},
                      {"alpha_re", family.alpha.real()},
                      {"alpha_im", family.alpha.imag()}};
        } else if constexpr (std::is_same_v<T, CoherentSqueezed>) {
          return json{{"family", "squeezed"},
                      {"alpha_re", family.alpha.real()},
                      {"alpha_im", family.alpha.imag()},
                      {"r", family.r},
                      {"theta", family.theta}};
        } else if constexpr (std::is_same_v<T, TwinFock>) {
          return json{{"family", "twin-fock"}, {"n", family.n}};
        } else if constexpr (std::is_same_v<T, Intelligent>) {
          return json{{"family", "intelligent"},
                      {"j2", family.label.twice_j},
                      {"eta", family.eta},
                      {"m0x2", family.twice_m0}};
        } else {
          throw std::invalid_argument("to_json: Custom states are not serializable");
        }
      },
      spec);
}

InputStateSpec spec_from_json(const json& j) {
  const std::string family = j.at("family").get<std::string>();
  if (family == "coherent") {
    return CoherentVacuum{
        Complex(j.at("alpha_re").get<double>(), j.value("alpha_im", 0.0))};
  }
  if (family == "squeezed") {
    return CoherentSqueezed{Complex(j.at("alpha_re").get<double>(), j.value("alpha_im", 0.0)),
                            j.at("r").get<double>(), j.value("theta", 0.0)};
  }
  if (family == "twin-fock") {
    return TwinFock{j.at("n").get<int>()};
  }
  if (family == "intelligent") {
    return Intelligent{IrrepLabel(j.at("j2").get<int>()), j.at("eta").get<double>(),
                       j.at("m0x2").get<int>()};
  }
  throw std::invalid_argument("spec_from_json: unknown family '" + family + "'");
}

json to_json(const NoiseBudget& budget) {
  return json{{"dz_pc_m", budget.dz_pc},     {"dz_rp_m", budget.dz_rp},
              {"dz_total_m", budget.dz_total()}, {"nbar", budget.nbar},
              {"power_w", budget.power},     {"flag", budget.flag}};
}

json to_json(const MomentSet& m) {
  return json{{"mean_jx", m.mean_jx}, {"mean_jy", m.mean_jy}, {"mean_jz", m.mean_jz},
              {"var_jx", m.var_jx},   {"var_jy", m.var_jy},   {"var_jz", m.var_jz},
              {"cov_jy_jz", m.cov_jy_jz}, {"nbar", m.nbar},   {"nbar1", m.nbar1},
              {"nbar2", m.nbar2}};
}

json matrix_to_json(const Matrix& matrix) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < matrix.cols(); ++k)
      row.push_back(json::array({matrix(i, k).real(), matrix(i, k).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace gwnoise
