#include "qfp/equilibrium.hpp"

#include "qfp/errors.hpp"
#include "qfp/specfun.hpp"

#include <cmath>

namespace qfp::equilibrium {

double maxwellian_value_sq(const MaxwellianSpec& spec, double speed_squared)
{
    const double g = spec.C * std::exp(-0.5 * speed_squared);
    return g / (1.0 - spec.k * g);
}

double maxwellian_value(const MaxwellianSpec& spec, std::span<const double> velocity)
{
    double speed_squared = 0.0;
    for (double component : velocity)
        speed_squared += component * component;
    return maxwellian_value_sq(spec, speed_squared);
}

double equilibrium_energy(const ModelParams& params, double C)
{
    const double classical = 0.5 * params.n * params.rho;
    if (params.k == 0.0)
        return classical;
    const double s = 0.5 * params.n;
    const double z = params.k * C;
    return classical * specfun::polylog(s + 1.0, z) / specfun::polylog(s, z);
}

double equilibrium_entropy(const ModelParams& params, double C)
{
    const double energy = equilibrium_energy(params, C);
    // k = 0 takes the classical closed form; both agree there but this avoids
    // relying on the k -> 0 limit.
    if (params.k == 0.0)
        return energy - params.rho * std::log(C);
    return (1.0 + 2.0 / params.n) * energy - (1.0 + std::log(C)) * params.rho;
}

double equilibrium_free_energy(const ModelParams& params, double C)
{
    return equilibrium_entropy(params, C) - equilibrium_energy(params, C);
}

AsymptoticSlopes asymptotic_predictions(const ModelParams& params)
{
    const ClassicalReference ref = classical_reference(params);
    const double scale = params.rho * ref.C0 / std::pow(2.0, 0.5 * params.n);
    return {
        -0.25 * params.n * scale,
        -0.25 * (params.n - 2) * scale,
        0.5 * scale,
    };
}

} // namespace qfp::equilibrium
