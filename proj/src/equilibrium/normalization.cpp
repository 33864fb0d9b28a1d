#include "qfp/equilibrium.hpp"

#include "qfp/errors.hpp"
#include "qfp/roots.hpp"
#include "qfp/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace qfp::equilibrium {

namespace {

// Root tolerance well inside the 1e-10 contract.
constexpr double kResidualTarget = 1e-13;
constexpr double kResidualContract = 1e-10;
constexpr double kBosonBracketMargin = 1e-12;
constexpr int kMaxDoublings = 2000;

double gaussian_volume_factor(int n)
{
    return std::pow(2.0 * std::numbers::pi, 0.5 * n);
}

[[noreturn]] void throw_supercritical(const ModelParams& params, double threshold)
{
    std::ostringstream msg;
    msg.precision(10);
    msg << "supercritical density: k*rho = " << params.k * params.rho
        << " is not below (2pi)^{n/2} V L_{n/2}(1) = " << threshold
        << "; no solution with kC < 1 exists (critical point kC = 1)";
    throw SupercriticalDensity(msg.str(), threshold, params.k * params.rho);
}

} // namespace

void ModelParams::validate() const
{
    if (!std::isfinite(k))
        throw PreconditionError("ModelParams: k must be finite");
    if (n < 1)
        throw PreconditionError("ModelParams: velocity dimension n must be >= 1");
    if (!(volume > 0.0) || !std::isfinite(volume))
        throw PreconditionError("ModelParams: volume must be positive");
    if (!(rho > 0.0) || !std::isfinite(rho))
        throw PreconditionError("ModelParams: total density must be positive");
}

void MaxwellianSpec::validate() const
{
    if (!(C > 0.0) || !std::isfinite(C))
        throw PreconditionError("MaxwellianSpec: C must be positive");
    if (!(1.0 - k * C > 0.0))
        throw PreconditionError("MaxwellianSpec: requires 1 - kC > 0");
}

ClassicalReference classical_reference(const ModelParams& params)
{
    params.validate();
    ClassicalReference ref{};
    ref.C0 = params.rho / (gaussian_volume_factor(params.n) * params.volume);
    ref.energy = 0.5 * params.n * params.rho;
    ref.entropy = ref.energy - params.rho * std::log(ref.C0);
    ref.free_energy = ref.entropy - ref.energy;
    return ref;
}

double normalization_map(const ModelParams& params, double C)
{
    return gaussian_volume_factor(params.n) * params.volume * C *
           specfun::polylog(0.5 * params.n, params.k * C);
}

double critical_k_rho(const ModelParams& params)
{
    if (params.n <= 2)
        return std::numeric_limits<double>::infinity();
    return gaussian_volume_factor(params.n) * params.volume * specfun::zeta(0.5 * params.n);
}

EquilibriumSolution solve_normalization(const ModelParams& params)
{
    const ClassicalReference classical = classical_reference(params);
    const double k = params.k;

    double C = classical.C0;
    if (k != 0.0) {
        auto excess = [&](double c) { return normalization_map(params, c) - params.rho; };
        double hi = 0.0;
        if (k > 0.0) {
            const double threshold = critical_k_rho(params);
            if (!(k * params.rho < threshold))
                throw_supercritical(params, threshold);
            hi = (1.0 - kBosonBracketMargin) / k;
            // Guards n <= 2 (and n > 2 within rounding of the threshold) where
            // the density at the bracket edge is finite in floating point.
            if (excess(hi) < 0.0)
                throw_supercritical(params, normalization_map(params, hi) * k);
        } else {
            hi = classical.C0;
            int doublings = 0;
            while (excess(hi) < 0.0) {
                hi *= 2.0;
                if (++doublings > kMaxDoublings)
                    throw std::runtime_error("solve_normalization: fermion bracket did not close");
            }
        }
        C = find_root_increasing(excess, 0.0, hi, kResidualTarget * params.rho).x;
    }

    EquilibriumSolution sol{};
    sol.params = params;
    sol.C = C;
    sol.kC = k * C;
    sol.classical = classical;
    sol.residual = normalization_map(params, C) - params.rho;
    if (!(std::abs(sol.residual) <= kResidualContract * params.rho))
        throw std::runtime_error("solve_normalization: residual above contract");
    sol.energy = equilibrium_energy(params, C);
    sol.entropy = equilibrium_entropy(params, C);
    sol.free_energy = sol.entropy - sol.energy;
    return sol;
}

} // namespace qfp::equilibrium
