#pragma once

#include "qfp/kinetics/grid.hpp"

namespace qfp::kinetics {

/// Scales f so its grid total density equals `total_density`.
void renormalize(DistributionField& f, double total_density);

/// x-uniform global Maxwellian for density `total_density` on [0, L]
/// (closed-form normalization with V = L).
DistributionField maxwellian_initial(const PhaseGrid& grid, double k, double total_density);

/// M_k(v) (1 + amplitude cos(2 pi mode x / L)), rescaled to `total_density`.
DistributionField modulated_maxwellian(const PhaseGrid& grid, double k, double total_density,
                                       double amplitude, int mode = 1);

/// exp(-(v - shift)^2 / (2 width^2)) (1 + amplitude cos(2 pi mode x / L)),
/// rescaled to `total_density`. Throws AdmissibilityError if the result
/// violates 1 + k f >= 0.
DistributionField shifted_gaussian(const PhaseGrid& grid, double k, double total_density,
                                   double shift, double width, double amplitude = 0.0,
                                   int mode = 1);

} // namespace qfp::kinetics
