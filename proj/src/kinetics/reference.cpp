#include "qfp/kinetics/reference.hpp"

#include "qfp/errors.hpp"
#include "scheme.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qfp::kinetics::reference {

namespace {

// Flux-form upwind update, one velocity column at a time.
void transport(DistributionField& f, const BoundaryCondition& bc, double tau, StepStats& stats)
{
    const PhaseGrid& grid = f.grid();
    const std::size_t nx = grid.x_nodes();
    const std::size_t nv = grid.v_nodes();

    const auto fluxes = boundary_fluxes(f, bc);
    stats.density_outflow += tau * fluxes.density;
    stats.energy_flux += tau * fluxes.energy;
    stats.entropy_flow += tau * fluxes.entropy;

    std::vector<double> ghost_left, ghost_right;
    detail::ghost_values(f, bc, ghost_left, ghost_right);

    DistributionField old = f;
    std::vector<double> face(nx + 1);
    for (std::size_t j = 0; j < nv; ++j) {
        const double v = grid.v(j);
        for (std::size_t face_index = 0; face_index <= nx; ++face_index) {
            const double left = face_index == 0 ? ghost_left[j] : old(face_index - 1, j);
            const double right = face_index == nx ? ghost_right[j] : old(face_index, j);
            face[face_index] = v * (v > 0.0 ? left : right);
        }
        for (std::size_t i = 0; i < nx; ++i)
            f(i, j) = old(i, j) - tau / grid.dx() * (face[i + 1] - face[i]);
    }
}

void solve_tridiagonal(const std::vector<double>& a, std::vector<double> b,
                       const std::vector<double>& c, std::vector<double> d,
                       std::vector<double>& x)
{
    const std::size_t n = b.size();
    for (std::size_t i = 1; i < n; ++i) {
        const double m = a[i] / b[i - 1];
        b[i] -= m * c[i - 1];
        d[i] -= m * d[i - 1];
    }
    x.resize(n);
    x[n - 1] = d[n - 1] / b[n - 1];
    for (std::size_t i = n - 1; i-- > 0;)
        x[i] = (d[i] - c[i] * x[i + 1]) / b[i];
}

void collide(DistributionField& f, double dt)
{
    const PhaseGrid& grid = f.grid();
    const std::size_t nv = grid.v_nodes();
    const double k = f.k();
    const double dv = grid.dv();

    for (std::size_t i = 0; i < grid.x_nodes(); ++i) {
        std::vector<double> sub(nv, 0.0), main(nv, 1.0), super(nv, 0.0), rhs(nv), solution;
        for (std::size_t j = 0; j < nv; ++j)
            rhs[j] = f(i, j);
        for (std::size_t j = 0; j + 1 < nv; ++j) {
            const double vl = grid.v(j), vr = grid.v(j + 1);
            const double fl = f(i, j), fr = f(i, j + 1);
            double jump = 0.5 * (vr * vr - vl * vl);
            if (k != 0.0)
                jump -= detail::log_occupancy(k, fr) - detail::log_occupancy(k, fl);
            jump = std::clamp(jump, -700.0, 700.0);
            const double mobility = 1.0 + 0.5 * k * (fl + fr);
            const double coeff = dt * mobility / (dv * dv);
            const double out_of_left = coeff * detail::bernoulli(jump);
            const double out_of_right = coeff * detail::bernoulli(-jump);
            main[j] += out_of_left;
            super[j] -= out_of_right;
            main[j + 1] += out_of_right;
            sub[j + 1] -= out_of_left;
        }
        solve_tridiagonal(sub, main, super, rhs, solution);
        for (std::size_t j = 0; j < nv; ++j)
            f(i, j) = solution[j];
    }
}

} // namespace

DistributionField step(const DistributionField& f, double dt, const BoundaryCondition& bc,
                       StepStats* stats)
{
    bc.validate(f.grid());
    f.check_admissible();
    const double dt_max = max_stable_dt(f.grid(), f.k(), f.max_value());
    if (!(dt > 0.0) || dt > dt_max * (1.0 + 1e-12))
        throw StepSizeError("time step " + std::to_string(dt) + " violates the stability bound " +
                                std::to_string(dt_max),
                            dt, dt_max);
    StepStats local;
    DistributionField out = f;
    transport(out, bc, 0.5 * dt, local);
    collide(out, dt);
    transport(out, bc, 0.5 * dt, local);

    long bad = -1;
    const double delta = detail::clamp_admissible(out.values().data(), out.values().size(),
                                                  out.k(), bad);
    if (bad >= 0)
        throw AdmissibilityError("reference step left the admissible set");
    local.clamp_mass = delta * f.grid().dx() * f.grid().dv();
    if (stats)
        *stats = local;
    return out;
}

double total_density(const DistributionField& f)
{
    double sum = 0.0;
    for (std::size_t i = 0; i < f.grid().x_nodes(); ++i)
        for (std::size_t j = 0; j < f.grid().v_nodes(); ++j)
            sum += f(i, j);
    return sum * f.grid().dx() * f.grid().dv();
}

double total_energy(const DistributionField& f)
{
    double sum = 0.0;
    for (std::size_t i = 0; i < f.grid().x_nodes(); ++i)
        for (std::size_t j = 0; j < f.grid().v_nodes(); ++j)
            sum += 0.5 * f.grid().v(j) * f.grid().v(j) * f(i, j);
    return sum * f.grid().dx() * f.grid().dv();
}

double entropy(const DistributionField& f)
{
    double sum = 0.0;
    for (double value : f.values())
        sum += entropy_density(value, f.k());
    return -sum * f.grid().dx() * f.grid().dv();
}

} // namespace qfp::kinetics::reference
