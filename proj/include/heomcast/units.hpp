#pragma once

#include <numbers>

namespace heomcast {

// Internal working units: angular frequency in rad/ps, time in ps, hbar = 1.
// All cm^-1 quantities are converted at the boundary.
struct UnitSystem {
    // speed of light in cm/ps
    static constexpr double c_cm_per_ps = 0.0299792458;
    // 1 cm^-1 expressed as an angular frequency, rad/ps
    static constexpr double cm1_to_radps = 2.0 * std::numbers::pi * c_cm_per_ps;
    // Boltzmann constant, cm^-1 per kelvin
    static constexpr double kB_cm1_per_K = 0.695034800;
};

/// Energy/frequency in cm^-1 -> angular frequency in rad/ps.
constexpr double cm1_to_radps(double value_cm1) {
    return value_cm1 * UnitSystem::cm1_to_radps;
}

/// Thermal energy k_B * T for a temperature in kelvin, returned in rad/ps.
constexpr double thermal_energy_radps(double temperature_K) {
    return UnitSystem::kB_cm1_per_K * temperature_K * UnitSystem::cm1_to_radps;
}

} // namespace heomcast
