#include "qfp/kinetics/diagnostics.hpp"

#include "qfp/errors.hpp"
#include "qfp/roots.hpp"
#include "scheme.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace qfp::kinetics {

double entropy_density(double f, double k)
{
    // 0 log 0 = 0 and (1 + k f) log(1 + k f) = 0 at 1 + k f = 0.
    if (f < 1e-300)
        return 0.0;
    const double plain = f * std::log(f);
    if (k == 0.0)
        return plain;
    const double q = 1.0 + k * f;
    const double occupancy = std::abs(q) < 1e-300 ? 0.0 : q * std::log1p(k * f) / k;
    return plain - occupancy + f;
}

double convex_part(double r, double k)
{
    if (k == 0.0)
        return r > 0.0 ? r * std::log(r) - r : 0.0;
    return entropy_density(r, k) - std::max(r, 0.0);
}

Moments moments(const DistributionField& f)
{
    const PhaseGrid& grid = f.grid();
    const std::size_t nx = grid.x_nodes();
    const std::size_t nv = grid.v_nodes();
    const double dv = grid.dv();
    Moments m;
    m.density.resize(nx);
    m.mean_velocity.resize(nx);
    m.energy.resize(nx);
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < nx; ++i) {
        double rho = 0.0, momentum = 0.0, energy = 0.0;
        for (std::size_t j = 0; j < nv; ++j) {
            const double v = grid.v(j);
            const double value = f(i, j);
            rho += value;
            momentum += v * value;
            energy += 0.5 * v * v * value;
        }
        m.density[i] = rho * dv;
        m.energy[i] = energy * dv;
        if (m.density[i] >= 1e-14)
            m.mean_velocity[i] = momentum * dv / m.density[i];
    }
    for (std::size_t i = 0; i < nx; ++i) {
        m.total_density += m.density[i];
        m.total_energy += m.energy[i];
    }
    m.total_density *= grid.dx();
    m.total_energy *= grid.dx();
    return m;
}

double total_density(const DistributionField& f)
{
    const auto values = f.values();
    double sum = 0.0;
#pragma omp parallel for reduction(+ : sum) schedule(static)
    for (std::size_t idx = 0; idx < values.size(); ++idx)
        sum += values[idx];
    return sum * f.grid().dx() * f.grid().dv();
}

double total_energy(const DistributionField& f)
{
    const PhaseGrid& grid = f.grid();
    const std::size_t nx = grid.x_nodes();
    const std::size_t nv = grid.v_nodes();
    double sum = 0.0;
#pragma omp parallel for reduction(+ : sum) schedule(static)
    for (std::size_t i = 0; i < nx; ++i)
        for (std::size_t j = 0; j < nv; ++j)
            sum += 0.5 * grid.v(j) * grid.v(j) * f(i, j);
    return sum * grid.dx() * grid.dv();
}

double entropy(const DistributionField& f)
{
    const auto values = f.values();
    const double k = f.k();
    double sum = 0.0;
#pragma omp parallel for reduction(+ : sum) schedule(static)
    for (std::size_t idx = 0; idx < values.size(); ++idx)
        sum += entropy_density(values[idx], k);
    return -sum * f.grid().dx() * f.grid().dv();
}

double free_energy(const DistributionField& f)
{
    const PhaseGrid& grid = f.grid();
    const std::size_t nx = grid.x_nodes();
    const std::size_t nv = grid.v_nodes();
    const double k = f.k();
    double sum = 0.0;
#pragma omp parallel for reduction(+ : sum) schedule(static)
    for (std::size_t i = 0; i < nx; ++i)
        for (std::size_t j = 0; j < nv; ++j) {
            const double value = f(i, j);
            sum += entropy_density(value, k) + 0.5 * grid.v(j) * grid.v(j) * value;
        }
    return -sum * grid.dx() * grid.dv();
}

namespace {

double row_mass(const PhaseGrid& grid, const equilibrium::MaxwellianSpec& spec)
{
    double sum = 0.0;
    for (double v : grid.velocities())
        sum += equilibrium::maxwellian_value_sq(spec, v * v);
    return sum;
}

double grid_mass(const PhaseGrid& grid, const equilibrium::MaxwellianSpec& spec)
{
    return row_mass(grid, spec) * static_cast<double>(grid.x_nodes()) * grid.dx() * grid.dv();
}

} // namespace

equilibrium::MaxwellianSpec discrete_maxwellian(const PhaseGrid& grid, double k,
                                                double total_density)
{
    if (!(total_density > 0.0) || !std::isfinite(total_density))
        throw PreconditionError("total density must be positive");
    const double gauss = grid_mass(grid, {1.0, 0.0});
    if (k == 0.0)
        return {total_density / gauss, 0.0};

    const auto residual = [&](double C) { return grid_mass(grid, {C, k}) - total_density; };
    double lo = 0.0;
    double hi;
    if (k > 0.0) {
        hi = (1.0 - 1e-12) / k;
        if (residual(hi) < 0.0)
            throw PreconditionError("no discrete boson Maxwellian carries density " +
                                    std::to_string(total_density) + " on this grid");
    } else {
        hi = total_density / gauss;
        while (residual(hi) < 0.0) {
            lo = hi;
            hi *= 2.0;
            if (!std::isfinite(hi))
                throw PreconditionError("fermion normalization bracket overflow");
        }
    }
    const auto root = find_root_increasing(residual, lo, hi, 1e-15 * total_density);
    return {root.x, k};
}

DistributionField sample_maxwellian(const PhaseGrid& grid, const equilibrium::MaxwellianSpec& spec)
{
    spec.validate();
    DistributionField f(grid, spec.k);
    std::vector<double> profile(grid.v_nodes());
    for (std::size_t j = 0; j < grid.v_nodes(); ++j)
        profile[j] = equilibrium::maxwellian_value_sq(spec, grid.v(j) * grid.v(j));
    for (std::size_t i = 0; i < grid.x_nodes(); ++i)
        std::copy(profile.begin(), profile.end(), f.row(i).begin());
    return f;
}

double distance_G(const DistributionField& f, const equilibrium::MaxwellianSpec& reference)
{
    if (reference.k != f.k())
        throw PreconditionError("reference Maxwellian has a different k");
    const DistributionField m = sample_maxwellian(f.grid(), reference);
    const double mass_f = total_density(f);
    const double mass_m = total_density(m);
    if (std::abs(mass_f - mass_m) > 1e-6 * mass_m)
        throw PreconditionError("G is undefined: total density " + std::to_string(mass_f) +
                                " differs from the reference " + std::to_string(mass_m));
    return free_energy(m) - free_energy(f);
}

double lyapunov(const DistributionField& f, double reference_level)
{
    return reference_level - free_energy(f);
}

double reference_level(const DistributionField& f)
{
    const auto spec = discrete_maxwellian(f.grid(), f.k(), total_density(f));
    return free_energy(sample_maxwellian(f.grid(), spec));
}

BoundaryTrace endpoint_trace(const DistributionField& f)
{
    const auto first = f.row(0);
    const auto last = f.row(f.grid().x_nodes() - 1);
    return {{first.begin(), first.end()}, {last.begin(), last.end()}};
}

BoundaryTrace scheme_trace(const DistributionField& f, const BoundaryCondition& bc)
{
    bc.validate(f.grid());
    std::vector<double> ghost_left, ghost_right;
    detail::ghost_values(f, bc, ghost_left, ghost_right);
    const PhaseGrid& grid = f.grid();
    const std::size_t last = grid.x_nodes() - 1;
    BoundaryTrace trace;
    trace.left.resize(grid.v_nodes());
    trace.right.resize(grid.v_nodes());
    for (std::size_t j = 0; j < grid.v_nodes(); ++j) {
        const bool rightward = grid.v(j) > 0.0;
        trace.left[j] = rightward ? ghost_left[j] : f(0, j);
        trace.right[j] = rightward ? f(last, j) : ghost_right[j];
    }
    return trace;
}

BoundaryFluxes boundary_fluxes(const BoundaryTrace& trace, const PhaseGrid& grid, double k)
{
    if (trace.left.size() != grid.v_nodes() || trace.right.size() != grid.v_nodes())
        throw PreconditionError("boundary trace size does not match the velocity grid");
    // Mirror pairs are added first so even traces cancel exactly.
    const auto term = [&](std::size_t j) {
        const double v = grid.v(j);
        const double jump = trace.right[j] - trace.left[j];
        return BoundaryFluxes{0.5 * v * v * v * jump, v * jump,
                              -v * (entropy_density(trace.right[j], k) -
                                    entropy_density(trace.left[j], k))};
    };
    BoundaryFluxes out;
    for (std::size_t j = 0; j < grid.v_nodes() / 2; ++j) {
        const auto a = term(j);
        const auto b = term(grid.mirror(j));
        out.energy += a.energy + b.energy;
        out.density += a.density + b.density;
        out.entropy += a.entropy + b.entropy;
    }
    const double dv = grid.dv();
    out.energy *= dv;
    out.density *= dv;
    out.entropy *= dv;
    return out;
}

BoundaryFluxes boundary_fluxes(const DistributionField& f)
{
    return boundary_fluxes(endpoint_trace(f), f.grid(), f.k());
}

BoundaryFluxes boundary_fluxes(const DistributionField& f, const BoundaryCondition& bc)
{
    return boundary_fluxes(scheme_trace(f, bc), f.grid(), f.k());
}

double fermion_bound_check(const DistributionField& f)
{
    const double k = f.k();
    if (!(k < 0.0))
        throw PreconditionError("fermion bound check requires k < 0");
    const PhaseGrid& grid = f.grid();
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < grid.x_nodes(); ++i)
        for (std::size_t j = 0; j < grid.v_nodes(); ++j) {
            const double v2 = grid.v(j) * grid.v(j);
            const double r = f(i, j);
            const double margin = std::exp(-0.5 * v2) - (-0.5 * v2 * r - convex_part(r, k));
            worst = std::min(worst, margin);
        }
    return worst;
}

} // namespace qfp::kinetics
