#pragma once

// Pointwise pieces shared by the parallel kernels and the serial reference.

#include "qfp/kinetics/grid.hpp"

#include <cmath>
#include <vector>

namespace qfp::kinetics::detail {

/// Bernoulli function x / (e^x - 1).
inline double bernoulli(double x)
{
    if (std::abs(x) < 1e-6)
        return 1.0 - 0.5 * x + x * x / 12.0;
    if (x > 700.0)
        return x * std::exp(-x);
    return x / std::expm1(x);
}

/// Bernoulli function given both x and e^x, saving the exponential.
inline double bernoulli(double x, double exp_x)
{
    if (std::abs(x) < 1e-6)
        return 1.0 - 0.5 * x + x * x / 12.0;
    return x / (exp_x - 1.0);
}

/// log(1 + k f), floored so the potential stays finite at 1 + k f = 0.
inline double log_occupancy(double k, double f)
{
    const double q = k * f;
    return q > -1.0 + 1e-300 ? std::log1p(q) : std::log(1e-300);
}

/// Ghost values behind each wall, one per velocity node. Only the incoming
/// half (v > 0 on the left, v < 0 on the right) is read by the upwind scheme.
inline void ghost_values(const DistributionField& f, const BoundaryCondition& bc,
                         std::vector<double>& left, std::vector<double>& right)
{
    const PhaseGrid& grid = f.grid();
    const std::size_t nv = grid.v_nodes();
    const std::size_t last = grid.x_nodes() - 1;
    left.resize(nv);
    right.resize(nv);
    switch (bc.kind) {
    case BoundaryKind::bounce_back:
        for (std::size_t j = 0; j < nv; ++j) {
            left[j] = f(0, grid.mirror(j));
            right[j] = f(last, grid.mirror(j));
        }
        break;
    case BoundaryKind::periodic:
        for (std::size_t j = 0; j < nv; ++j) {
            left[j] = f(last, j);
            right[j] = f(0, j);
        }
        break;
    case BoundaryKind::inflow:
        left = bc.inflow_left;
        right = bc.inflow_right;
        break;
    }
}

/// Fermion overshoot beyond this fraction of 1/|k| is an error; below it the
/// value is clamped.
inline constexpr double kOvershootTolerance = 1e-9;

/// Projects values onto [0, 1/|k| - 1e-14] (k < 0) or [0, inf). Returns the
/// signed mass change in units of one cell (sum of corrections).
/// Sets `bad` to the offending index on a non-finite value or an overshoot
/// beyond tolerance.
inline double clamp_admissible(double* values, std::size_t count, double k, long& bad)
{
    double delta = 0.0;
    const double cap = k < 0.0 ? 1.0 / -k - 1e-14 : HUGE_VAL;
    const double hard_cap = k < 0.0 ? (1.0 + kOvershootTolerance) / -k : HUGE_VAL;
    const double floor_tol = k < 0.0 ? kOvershootTolerance / -k : kOvershootTolerance;
    for (std::size_t idx = 0; idx < count; ++idx) {
        double& f = values[idx];
        if (!std::isfinite(f) || f > hard_cap || f < -floor_tol) {
            bad = static_cast<long>(idx);
            return delta;
        }
        if (f < 0.0) {
            delta -= f;
            f = 0.0;
        } else if (f > cap) {
            delta -= f - cap;
            f = cap;
        }
    }
    return delta;
}

} // namespace qfp::kinetics::detail
