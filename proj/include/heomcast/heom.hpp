#pragma once

#include <functional>
#include <vector>

#include "heomcast/hierarchy.hpp"
#include "heomcast/linalg.hpp"
#include "heomcast/model.hpp"

namespace heomcast {

struct HeomOptions {
    double t_total_ps = 1.0;
    double dt_ps = 2.0e-4;
    int depth = 20;
    bool store_full = false;
    std::size_t memory_budget_bytes = kDefaultMemoryBudgetBytes;
};

/// All auxiliary density operators of one hierarchy, flattened in layout
/// order. ado(0) is the reduced density matrix.
struct HierarchyState {
    std::size_t n_sites = 0;
    std::vector<cplx> ados;
    double time_ps = 0.0;

    std::size_t matrix_size() const { return n_sites * n_sites; }
    std::span<cplx> ado(std::size_t i) {
        return {ados.data() + i * matrix_size(), matrix_size()};
    }
    std::span<const cplx> ado(std::size_t i) const {
        return {ados.data() + i * matrix_size(), matrix_size()};
    }
    CMat reduced_density() const;
};

/// Zero hierarchy with position 0 set to rho0.
HierarchyState make_initial_state(const HierarchyLayout& layout, const CMat& rho0);

struct Trajectory {
    std::vector<double> times_ps;
    std::vector<std::vector<double>> populations;   // [time][site]
    std::vector<CMat> density_matrices;             // filled when store_full
    double max_trace_deviation = 0.0;
    double max_hermiticity_deviation = 0.0;
};

/// [H, sigma]
CMat liouvillian_apply(const CMat& h, const CMat& sigma);

/// i [V_j, sigma] with V_j = |j><j|
CMat phi_apply(std::size_t site, const CMat& sigma);

/// i ( 2 lambda_j k_B T [V_j, sigma] - i lambda_j gamma_j {V_j, sigma} )
/// in internal units (hbar = 1).
CMat theta_apply(std::size_t site, const CMat& sigma, const BathSpec& bath);

/// Time derivative of every operator in the hierarchy. Missing upper
/// neighbours at the truncation depth contribute zero.
HierarchyState heom_derivative(const HierarchyState& state, const CMat& h,
                               const BathSpec& bath, const HierarchyLayout& layout);

using DerivativeFn =
    std::function<void(const std::vector<cplx>&, std::vector<cplx>&)>;

/// Classical RK4 update of the whole hierarchy; throws divergence_error when
/// the step produces non-finite entries.
HierarchyState rk4_step(const HierarchyState& state, double dt_ps,
                        const DerivativeFn& derivative);

/// Solves the hierarchy from rho0 over [0, t_total], sampling every step.
Trajectory propagate(const SystemSpec& system, const BathSpec& bath, const CMat& rho0,
                     const HeomOptions& options);

/// Density-matrix audit: trace, hermiticity, and minimum eigenvalue with
/// pass flags at 1e-6 / 1e-8 / -1e-8.
struct DensityReport {
    double trace_deviation = 0.0;
    double hermiticity_deviation = 0.0;
    double min_eigenvalue = 0.0;
    bool trace_ok = false;
    bool hermitian_ok = false;
    bool psd_ok = false;
    bool pass() const { return trace_ok && hermitian_ok && psd_ok; }
};
DensityReport check_density_properties(const CMat& rho);

/// Spectral spread of H over the smallest bath rate; the truncation depth
/// should sit well above this for the closure to be safe.
double terminator_ratio(const SystemSpec& system, const BathSpec& bath);

} // namespace heomcast
