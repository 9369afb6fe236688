#include "heomcast/model.hpp"

#include <cmath>
#include <string>

#include "heomcast/errors.hpp"
#include "heomcast/units.hpp"

namespace heomcast {

SystemSpec SystemSpec::linear_chain(std::vector<double> epsilons_cm1,
                                    const std::vector<double>& chain_j_cm1) {
    SystemSpec spec;
    spec.n_sites = epsilons_cm1.size();
    if (spec.n_sites == 0)
        throw invalid_spec_error("linear_chain: at least one site required");
    if (chain_j_cm1.size() + 1 != spec.n_sites)
        throw invalid_spec_error("linear_chain: expected " + std::to_string(spec.n_sites - 1) +
                                 " couplings for " + std::to_string(spec.n_sites) + " sites");
    spec.site_energies_cm1 = std::move(epsilons_cm1);
    spec.couplings_cm1.assign(spec.n_sites * spec.n_sites, 0.0);
    for (std::size_t j = 0; j + 1 < spec.n_sites; ++j) {
        spec.couplings_cm1[j * spec.n_sites + (j + 1)] = chain_j_cm1[j];
        spec.couplings_cm1[(j + 1) * spec.n_sites + j] = chain_j_cm1[j];
    }
    return spec;
}

bool SystemSpec::is_linear_chain() const {
    for (std::size_t j = 0; j < n_sites; ++j)
        for (std::size_t k = 0; k < n_sites; ++k)
            if (coupling(j, k) != 0.0 && (j > k ? j - k : k - j) != 1) return false;
    return true;
}

void SystemSpec::validate() const {
    if (n_sites == 0) throw invalid_spec_error("SystemSpec: n_sites must be positive");
    if (site_energies_cm1.size() != n_sites)
        throw invalid_spec_error("SystemSpec: expected " + std::to_string(n_sites) +
                                 " site energies, got " +
                                 std::to_string(site_energies_cm1.size()));
    if (couplings_cm1.size() != n_sites * n_sites)
        throw invalid_spec_error("SystemSpec: coupling matrix must be n_sites x n_sites");
    for (std::size_t j = 0; j < n_sites; ++j) {
        if (coupling(j, j) != 0.0)
            throw invalid_spec_error("SystemSpec: coupling diagonal must be zero");
        for (std::size_t k = j + 1; k < n_sites; ++k)
            if (coupling(j, k) != coupling(k, j))
                throw invalid_spec_error("SystemSpec: coupling matrix must be symmetric");
    }
    for (double e : site_energies_cm1)
        if (!std::isfinite(e)) throw invalid_spec_error("SystemSpec: non-finite site energy");
    for (double j : couplings_cm1)
        if (!std::isfinite(j)) throw invalid_spec_error("SystemSpec: non-finite coupling");
}

BathSpec BathSpec::uniform(std::size_t n_sites, double lambda_cm1, double gamma_cm1,
                           double temperature_K) {
    BathSpec bath;
    bath.lambdas_cm1.assign(n_sites, lambda_cm1);
    bath.gammas_cm1.assign(n_sites, gamma_cm1);
    bath.temperature_K = temperature_K;
    return bath;
}

void BathSpec::validate(std::size_t n_sites) const {
    if (lambdas_cm1.size() != n_sites || gammas_cm1.size() != n_sites)
        throw invalid_spec_error("BathSpec: one lambda and one gamma required per site");
    for (double l : lambdas_cm1)
        if (!(l > 0.0) || !std::isfinite(l))
            throw invalid_spec_error("BathSpec: lambdas must be strictly positive");
    for (double g : gammas_cm1)
        if (!(g > 0.0) || !std::isfinite(g))
            throw invalid_spec_error("BathSpec: gammas must be strictly positive");
    if (!(temperature_K > 0.0) || !std::isfinite(temperature_K))
        throw invalid_spec_error("BathSpec: temperature must be strictly positive");
}

CMat build_hamiltonian(const SystemSpec& spec) {
    spec.validate();
    CMat h(spec.n_sites);
    for (std::size_t j = 0; j < spec.n_sites; ++j) {
        h(j, j) = cm1_to_radps(spec.site_energies_cm1[j]);
        for (std::size_t k = 0; k < spec.n_sites; ++k)
            if (j != k) h(j, k) = cm1_to_radps(spec.coupling(j, k));
    }
    return h;
}

double spectral_density(double omega_radps, double lambda_cm1, double gamma_cm1) {
    const double lambda = cm1_to_radps(lambda_cm1);
    const double gamma = cm1_to_radps(gamma_cm1);
    return 2.0 * lambda * gamma * omega_radps / (omega_radps * omega_radps + gamma * gamma);
}

HighTemperatureCheck check_high_temperature(const BathSpec& bath) {
    HighTemperatureCheck check;
    check.ratios.reserve(bath.gammas_cm1.size());
    for (double gamma : bath.gammas_cm1) {
        const double ratio = gamma / (UnitSystem::kB_cm1_per_K * bath.temperature_K);
        check.ratios.push_back(ratio);
        if (ratio >= 0.5) check.warn = true;
    }
    return check;
}

} // namespace heomcast
