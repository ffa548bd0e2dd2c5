#pragma once

#include <numbers>
#include <stdexcept>
#include <string>

namespace gwnoise {

namespace constants {
inline constexpr double hbar = 1.054571817e-34;  // J s
inline constexpr double c = 2.99792458e8;        // m/s
}  // namespace constants

/// Physical interferometer parameters; every derived quantity is recomputed
/// from the four primaries.
struct DetectorConfig {
  double mirror_mass = 0;  // kg
  double arm_length = 0;   // m
  double finesse = 0;      // dimensionless
  double wavelength = 0;   // m

  DetectorConfig() = default;
  DetectorConfig(double mass_kg, double length_m, double finesse_, double wavelength_m)
      : mirror_mass(mass_kg), arm_length(length_m), finesse(finesse_), wavelength(wavelength_m) {
    if (mirror_mass <= 0 || arm_length <= 0 || finesse <= 0 || wavelength <= 0)
      throw std::invalid_argument("DetectorConfig: all parameters must be positive");
  }

  double omega() const { return 2.0 * std::numbers::pi * constants::c / wavelength; }
  double tau() const { return arm_length * finesse / (std::numbers::pi * constants::c); }
  double bounces() const { return tau() * constants::c / (2.0 * arm_length); }

  /// Photon-counting noise constant (L / omega tau)^2, m^2.
  double a_pc() const {
    const double x = arm_length / (omega() * tau());
    return x * x;
  }
  /// Radiation-pressure noise constant (hbar omega tau^2 / m L)^2, m^2.
  double a_rp() const {
    const double x = constants::hbar * omega() * tau() * tau() / (mirror_mass * arm_length);
    return x * x;
  }

  /// Light power carried by nbar photons over one storage time.
  double power_of_nbar(double nbar) const { return constants::hbar * omega() * nbar / tau(); }
  double nbar_of_power(double power) const { return power * tau() / (constants::hbar * omega()); }

  /// Named preset; "initial-ligo" = {11 kg, 4 km, 200, 1.064 um}.
  static DetectorConfig preset(const std::string& name);
};

}  // namespace gwnoise
