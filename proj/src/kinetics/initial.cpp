#include "qfp/kinetics/initial.hpp"

#include "qfp/equilibrium.hpp"
#include "qfp/errors.hpp"
#include "qfp/kinetics/diagnostics.hpp"

#include <cmath>
#include <numbers>

namespace qfp::kinetics {

void renormalize(DistributionField& f, double target)
{
    if (!(target > 0.0))
        throw PreconditionError("target density must be positive");
    const double current = total_density(f);
    if (!(current > 0.0))
        throw PreconditionError("cannot renormalize a field with zero mass");
    const double scale = target / current;
    for (double& value : f.values())
        value *= scale;
}

namespace {

DistributionField modulated(const PhaseGrid& grid, double k, double target,
                            const std::vector<double>& profile, double amplitude, int mode)
{
    if (!(std::abs(amplitude) < 1.0))
        throw PreconditionError("modulation amplitude must lie in (-1, 1)");
    DistributionField f(grid, k);
    for (std::size_t i = 0; i < grid.x_nodes(); ++i) {
        const double factor =
            1.0 + amplitude * std::cos(2.0 * std::numbers::pi * mode * grid.x(i) / grid.length());
        for (std::size_t j = 0; j < grid.v_nodes(); ++j)
            f(i, j) = factor * profile[j];
    }
    renormalize(f, target);
    f.check_admissible();
    return f;
}

} // namespace

DistributionField maxwellian_initial(const PhaseGrid& grid, double k, double target)
{
    const equilibrium::ModelParams params{k, 1, grid.length(), target};
    return sample_maxwellian(grid, equilibrium::solve_normalization(params).maxwellian());
}

DistributionField modulated_maxwellian(const PhaseGrid& grid, double k, double target,
                                       double amplitude, int mode)
{
    const equilibrium::ModelParams params{k, 1, grid.length(), target};
    const auto spec = equilibrium::solve_normalization(params).maxwellian();
    std::vector<double> profile(grid.v_nodes());
    for (std::size_t j = 0; j < grid.v_nodes(); ++j)
        profile[j] = equilibrium::maxwellian_value_sq(spec, grid.v(j) * grid.v(j));
    return modulated(grid, k, target, profile, amplitude, mode);
}

DistributionField shifted_gaussian(const PhaseGrid& grid, double k, double target, double shift,
                                   double width, double amplitude, int mode)
{
    if (!(width > 0.0))
        throw PreconditionError("gaussian width must be positive");
    std::vector<double> profile(grid.v_nodes());
    for (std::size_t j = 0; j < grid.v_nodes(); ++j) {
        const double z = (grid.v(j) - shift) / width;
        profile[j] = std::exp(-0.5 * z * z);
    }
    return modulated(grid, k, target, profile, amplitude, mode);
}

} // namespace qfp::kinetics
