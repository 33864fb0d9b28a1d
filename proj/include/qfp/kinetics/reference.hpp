#pragma once

#include "qfp/kinetics/grid.hpp"
#include "qfp/kinetics/solver.hpp"

// Serial reference versions of the OpenMP kernels. Plain loops, no scratch
// reuse; kept for cross-checking and benchmarking the parallel path.

namespace qfp::kinetics::reference {

DistributionField step(const DistributionField& f, double dt, const BoundaryCondition& bc,
                       StepStats* stats = nullptr);

double total_density(const DistributionField& f);
double total_energy(const DistributionField& f);
double entropy(const DistributionField& f);

} // namespace qfp::kinetics::reference
