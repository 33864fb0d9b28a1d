#pragma once

#include "qfp/equilibrium.hpp"
#include "qfp/kinetics/grid.hpp"

#include <optional>
#include <span>
#include <vector>

namespace qfp::kinetics {

/// Entropy density Phi(f): f log f for k = 0,
/// f log f - (1 + k f) log(1 + k f) / k + f otherwise, with 0 log 0 = 0.
double entropy_density(double f, double k);

/// s(r) = r log r - (1 + k r) log(1 + k r) / k, i.e. Phi without the linear term.
double convex_part(double r, double k);

struct Moments {
    std::vector<double> density;
    double total_density = 0.0;
    /// Empty where the local density is below 1e-14.
    std::vector<std::optional<double>> mean_velocity;
    std::vector<double> energy;
    double total_energy = 0.0;
};

Moments moments(const DistributionField& f);
double total_density(const DistributionField& f);
double total_energy(const DistributionField& f);

/// S = -sum Phi(f) dx dv.
double entropy(const DistributionField& f);
/// F = S - E.
double free_energy(const DistributionField& f);

/// Global Maxwellian on the grid: x-uniform samples of M_k with C chosen so
/// the grid total density equals `total_density`.
equilibrium::MaxwellianSpec discrete_maxwellian(const PhaseGrid& grid, double k,
                                                double total_density);
DistributionField sample_maxwellian(const PhaseGrid& grid, const equilibrium::MaxwellianSpec& spec);

/// G = F(M) - F(f). Throws PreconditionError if the total densities differ
/// by more than 1e-6 relative.
double distance_G(const DistributionField& f, const equilibrium::MaxwellianSpec& reference);

/// Lyapunov functional C~ - F(f).
double lyapunov(const DistributionField& f, double reference_level);

/// Free energy of the Maxwellian carrying the same total density as f.
double reference_level(const DistributionField& f);

/// Values of f at x = 0 and x = L, one per velocity node.
struct BoundaryTrace {
    std::vector<double> left;
    std::vector<double> right;
};

/// Trace taken from the first and last cell rows.
BoundaryTrace endpoint_trace(const DistributionField& f);
/// Trace seen by the upwind transport at the walls: the cell value for
/// outgoing velocities and the boundary-condition data for incoming ones.
BoundaryTrace scheme_trace(const DistributionField& f, const BoundaryCondition& bc);

struct BoundaryFluxes {
    /// A: energy flux through the boundary.
    double energy = 0.0;
    /// B: density flux through the boundary.
    double density = 0.0;
    /// U: entropy flow across the boundary.
    double entropy = 0.0;
};

BoundaryFluxes boundary_fluxes(const BoundaryTrace& trace, const PhaseGrid& grid, double k);
BoundaryFluxes boundary_fluxes(const DistributionField& f);
BoundaryFluxes boundary_fluxes(const DistributionField& f, const BoundaryCondition& bc);

/// Minimum over the grid of exp(-v^2/2) - (-v^2 f / 2 - s(f)); non-negative
/// for admissible fermion data. Throws PreconditionError unless k < 0.
double fermion_bound_check(const DistributionField& f);

} // namespace qfp::kinetics
