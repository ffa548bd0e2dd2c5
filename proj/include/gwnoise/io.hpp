#pragma once

#include <nlohmann/json.hpp>

#include "gwnoise/config.hpp"
#include "gwnoise/noise.hpp"
#include "gwnoise/states.hpp"

namespace gwnoise {

using json = nlohmann::json;

// DetectorConfig <-> {mirror_mass_kg, arm_length_m, finesse, wavelength_m}
json to_json(const DetectorConfig& config);
DetectorConfig config_from_json(const json& j);

// InputStateSpec <-> {"family": ..., alpha_re, alpha_im, r, theta, n,
// j2 (= 2j), eta, m0x2 (= 2 m0)}; Custom states are not serializable.
json to_json(const InputStateSpec& spec);
InputStateSpec spec_from_json(const json& j);

json to_json(const NoiseBudget& budget);
json to_json(const MomentSet& moments);

/// Debug dump: row-major [re, im] pairs.
json matrix_to_json(const Matrix& matrix);

}  // namespace gwnoise
