#include "qfp/kinetics/solver.hpp"

#include "qfp/errors.hpp"
#include "scheme.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qfp::kinetics {

namespace {

const double kMinExp = std::exp(-700.0);
const double kMaxExp = std::exp(700.0);

} // namespace

double max_stable_dt(const PhaseGrid& grid, double k, double f_max)
{
    const double transport = grid.dx() / grid.v_max();
    const double diffusion = 0.5 * grid.dv() * grid.dv();
    const double drift =
        grid.dv() / (grid.v_max() * (1.0 + std::abs(k) * std::max(f_max, 0.0)));
    return 0.9 * std::min({transport, diffusion, drift});
}

Solver::Solver(PhaseGrid grid, double k, BoundaryCondition bc)
    : grid_(std::move(grid)), k_(k), bc_(std::move(bc)), buffer_(grid_.size())
{
    if (!std::isfinite(k_))
        throw PreconditionError("k must be finite");
    bc_.validate(grid_);
    face_ratio_.resize(grid_.v_nodes() - 1);
    for (std::size_t j = 0; j + 1 < grid_.v_nodes(); ++j) {
        const double vl = grid_.v(j), vr = grid_.v(j + 1);
        face_ratio_[j] = std::exp(0.5 * (vr * vr - vl * vl));
    }
}

void Solver::transport(DistributionField& f, double tau, StepStats& stats)
{
    const std::size_t nx = grid_.x_nodes();
    const std::size_t nv = grid_.v_nodes();
    std::vector<double> ghost_left, ghost_right;
    detail::ghost_values(f, bc_, ghost_left, ghost_right);

    const auto fluxes = boundary_fluxes(f, bc_);
    stats.density_outflow += tau * fluxes.density;
    stats.energy_flux += tau * fluxes.energy;
    stats.entropy_flow += tau * fluxes.entropy;

    const double ratio = tau / grid_.dx();
    const double* old = f.values().data();
    double* out = buffer_.data();
    const double* v = grid_.velocities().data();
    const double* gl = ghost_left.data();
    const double* gr = ghost_right.data();

#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < nx; ++i) {
        const double* row = old + i * nv;
        const double* prev = i == 0 ? gl : row - nv;
        const double* next = i + 1 == nx ? gr : row + nv;
        double* dst = out + i * nv;
        for (std::size_t j = 0; j < nv; ++j) {
            const double lambda = ratio * v[j];
            dst[j] = lambda > 0.0 ? row[j] - lambda * (row[j] - prev[j])
                                  : row[j] + lambda * (row[j] - next[j]);
        }
    }
    f.swap_values(buffer_);
}

void Solver::collide(DistributionField& f, double dt)
{
    const std::size_t nx = grid_.x_nodes();
    const std::size_t nv = grid_.v_nodes();
    const double k = k_;
    const double weight = dt / (grid_.dv() * grid_.dv());
    double* data = f.values().data();

#pragma omp parallel
    {
        std::vector<double> occupancy(nv), lower(nv), diag(nv), upper(nv), rhs(nv);
#pragma omp for schedule(static)
        for (std::size_t i = 0; i < nx; ++i) {
            double* row = data + i * nv;
            for (std::size_t j = 0; j < nv; ++j) {
                occupancy[j] = std::max(1.0 + k * row[j], 1e-300);
                lower[j] = 0.0;
                upper[j] = 0.0;
                diag[j] = 1.0;
                rhs[j] = row[j];
            }
            // Face j+1/2 carries a [B(-d) f_{j+1} - B(d) f_j] / dv with
            // d = (v_{j+1}^2 - v_j^2) / 2 - log((1 + k f_{j+1}) / (1 + k f_j)).
            for (std::size_t j = 0; j + 1 < nv; ++j) {
                const double e_jump = std::clamp(face_ratio_[j] * occupancy[j] / occupancy[j + 1],
                                                 kMinExp, kMaxExp);
                const double jump = std::log(e_jump);
                const double forward = detail::bernoulli(jump, e_jump);
                const double backward = forward + jump;
                const double w = weight * (1.0 + 0.5 * k * (row[j] + row[j + 1]));
                diag[j] += w * forward;
                upper[j] -= w * backward;
                diag[j + 1] += w * backward;
                lower[j + 1] -= w * forward;
            }
            // Thomas sweep; the matrix is a column-diagonally dominant M-matrix.
            upper[0] /= diag[0];
            rhs[0] /= diag[0];
            for (std::size_t j = 1; j < nv; ++j) {
                const double m = diag[j] - lower[j] * upper[j - 1];
                upper[j] /= m;
                rhs[j] = (rhs[j] - lower[j] * rhs[j - 1]) / m;
            }
            row[nv - 1] = rhs[nv - 1];
            for (std::size_t j = nv - 1; j-- > 0;)
                row[j] = rhs[j] - upper[j] * row[j + 1];
        }
    }
}

StepStats Solver::advance(DistributionField& f, double dt)
{
    if (f.grid().x_nodes() != grid_.x_nodes() || f.grid().v_nodes() != grid_.v_nodes())
        throw PreconditionError("field grid does not match the solver grid");
    if (f.k() != k_)
        throw PreconditionError("field k does not match the solver k");
    const double dt_max = max_stable_dt(grid_, k_, f.max_value());
    if (!(dt > 0.0) || dt > dt_max * (1.0 + 1e-12))
        throw StepSizeError("time step " + std::to_string(dt) + " violates the stability bound " +
                                std::to_string(dt_max),
                            dt, dt_max);

    StepStats stats;
    transport(f, 0.5 * dt, stats);
    collide(f, dt);
    transport(f, 0.5 * dt, stats);

    long bad = -1;
    const double delta =
        detail::clamp_admissible(f.values().data(), f.values().size(), k_, bad);
    if (bad >= 0) {
        const auto idx = static_cast<std::size_t>(bad);
        throw AdmissibilityError("step left the admissible set at (i, j) = (" +
                                 std::to_string(idx / grid_.v_nodes()) + ", " +
                                 std::to_string(idx % grid_.v_nodes()) +
                                 "), f = " + std::to_string(f.values()[idx]));
    }
    stats.clamp_mass = delta * grid_.dx() * grid_.dv();
    return stats;
}

DistributionField step(const DistributionField& f, double dt, const BoundaryCondition& bc)
{
    f.check_admissible();
    Solver solver(f.grid(), f.k(), bc);
    DistributionField out = f;
    solver.advance(out, dt);
    return out;
}

Classification classify(std::span<const DiagnosticRecord> series, double tolerance)
{
    if (series.empty())
        throw PreconditionError("cannot classify an empty diagnostic series");
    Classification c{true, true};
    for (const auto& record : series) {
        if (record.flux_A < -tolerance)
            c.dissipative = false;
        if (std::abs(record.flux_A) > tolerance)
            c.conservative = false;
    }
    return c;
}

DiagnosticRecord diagnose(const DistributionField& f, const BoundaryCondition& bc, double t,
                          const equilibrium::MaxwellianSpec& reference, double level,
                          double initial_density, double outflow)
{
    const Moments m = moments(f);
    const auto fluxes = boundary_fluxes(f, bc);
    DiagnosticRecord r;
    r.t = t;
    r.rho = m.total_density;
    r.u_profile = m.mean_velocity;
    r.energy = m.total_energy;
    r.entropy = entropy(f);
    r.free_energy = r.entropy - r.energy;
    r.lyapunov = level - r.free_energy;
    try {
        r.distance = distance_G(f, reference);
    } catch (const PreconditionError&) {
        r.distance.reset();
    }
    r.flux_A = fluxes.energy;
    r.flux_B = fluxes.density;
    r.flux_U = fluxes.entropy;
    r.mass_error = r.rho - initial_density + outflow;
    return r;
}

RunResult run(const DistributionField& initial, const BoundaryCondition& bc,
              const RunOptions& options)
{
    if (!(options.t_end >= 0.0) || !std::isfinite(options.t_end))
        throw PreconditionError("t_end must be finite and non-negative");
    if (!(options.output_interval > 0.0))
        throw PreconditionError("output interval must be positive");
    if (!(options.tolerance >= 0.0))
        throw PreconditionError("tolerance must be non-negative");
    initial.check_admissible();

    const PhaseGrid& grid = initial.grid();
    const double k = initial.k();
    Solver solver(grid, k, bc);

    RunResult result(initial);
    DistributionField& f = result.final_state;
    result.dt = options.dt > 0.0 ? options.dt : max_stable_dt(grid, k, f.max_value());

    const double rho0 = total_density(f);
    result.reference = discrete_maxwellian(grid, k, rho0);
    result.reference_level = free_energy(sample_maxwellian(grid, result.reference));
    const double level = result.reference_level;

    double t = 0.0;
    double outflow = 0.0;
    result.records.push_back(diagnose(f, bc, t, result.reference, level, rho0, outflow));

    double g_prev = lyapunov(f, level);
    std::size_t next_output = 1;
    const double dt = result.dt;
    const double eps_t = 1e-9 * dt;

    while (t < options.t_end - eps_t) {
        const double h = std::min(dt, options.t_end - t);
        StepStats stats;
        try {
            stats = solver.advance(f, h);
        } catch (const std::exception& e) {
            result.failure = std::string("step ") + std::to_string(result.steps + 1) + " at t = " +
                             std::to_string(t) + ": " + e.what();
            break;
        }
        ++result.steps;
        t += h;
        if (options.t_end - t < eps_t)
            t = options.t_end;
        outflow += stats.density_outflow;
        result.clamp_mass += stats.clamp_mass;

        const double g = lyapunov(f, level);
        const double allowed = stats.entropy_flow - stats.energy_flux;
        const double increase = g - g_prev;
        result.worst_excess = std::max(result.worst_excess, increase - allowed);
        if (increase > allowed + options.tolerance)
            result.violations.push_back({result.steps, t, increase, allowed});
        g_prev = g;

        const bool at_end = t >= options.t_end;
        const double due = static_cast<double>(next_output) * options.output_interval;
        if (t >= due - eps_t || at_end) {
            result.records.push_back(diagnose(f, bc, t, result.reference, level, rho0, outflow));
            while (static_cast<double>(next_output) * options.output_interval <= t + eps_t)
                ++next_output;
        }
    }
    return result;
}

} // namespace qfp::kinetics
