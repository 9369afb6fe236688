#pragma once

#include <vector>

#include "heomcast/linalg.hpp"

namespace heomcast {

/// Electronic system: site energies and inter-site couplings, both in cm^-1.
struct SystemSpec {
    std::size_t n_sites = 0;
    std::vector<double> site_energies_cm1;        // epsilon_j
    std::vector<double> couplings_cm1;            // J_jk, row-major n x n

    double coupling(std::size_t j, std::size_t k) const {
        return couplings_cm1[j * n_sites + k];
    }

    /// Chain preset: couplings only between adjacent sites.
    static SystemSpec linear_chain(std::vector<double> epsilons_cm1,
                                   const std::vector<double>& chain_j_cm1);

    /// True when J_jk vanishes for all |j-k| != 1.
    bool is_linear_chain() const;

    /// Throws invalid_spec_error on dimension mismatch, asymmetry, or a
    /// nonzero diagonal.
    void validate() const;
};

/// One Drude bath per site. Energies in cm^-1, temperature in kelvin.
struct BathSpec {
    std::vector<double> lambdas_cm1;   // reorganization energies
    std::vector<double> gammas_cm1;    // cut-off / relaxation rates
    double temperature_K = 0.0;

    static BathSpec uniform(std::size_t n_sites, double lambda_cm1, double gamma_cm1,
                            double temperature_K);

    /// Throws invalid_spec_error unless one strictly positive lambda and gamma
    /// exist per site and T > 0.
    void validate(std::size_t n_sites) const;
};

/// System Hamiltonian in internal units (rad/ps), Hermitian by construction.
CMat build_hamiltonian(const SystemSpec& spec);

/// Drude-Lorentz spectral density 2*lambda*gamma*omega / (omega^2 + gamma^2).
/// omega is in rad/ps, lambda and gamma in cm^-1; the result is in rad/ps.
double spectral_density(double omega_radps, double lambda_cm1, double gamma_cm1);

/// Per-site ratios hbar*gamma_j / (k_B T); warn is set when any ratio >= 0.5,
/// i.e. outside the regime the one-exponential bath closure is built for.
struct HighTemperatureCheck {
    std::vector<double> ratios;
    bool warn = false;
};
HighTemperatureCheck check_high_temperature(const BathSpec& bath);

} // namespace heomcast
