#pragma once

#include <cstdint>
#include <ostream>
#include <random>

#include "gwnoise/su2.hpp"

namespace gwnoise {

enum class VerifyLevel { Quick, Full };

/// Runs the cross-checks of the analytic machinery against the brute-force
/// Fock/irrep oracle: algebra identities, analytic-vs-oracle moments,
/// intelligent spectrum, picture equivalence. Prints one line per check;
/// returns false if anything fails.
bool run_verification(VerifyLevel level, std::uint64_t seed, std::ostream& out);

/// Haar-ish random normalized state inside one irrep.
TwoModeState random_irrep_state(IrrepLabel label, std::mt19937_64& rng);

/// Random normalized single-mode amplitude vector of n_max + 1 entries.
Vector random_mode_amplitudes(int n_max, std::mt19937_64& rng);

}  // namespace gwnoise
