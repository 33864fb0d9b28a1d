#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>

namespace qfp {

struct RootResult {
    double x;
    double value;
    std::size_t iterations;
};

/// Root of a monotonically increasing function on [lo, hi] with
/// f(lo) <= 0 <= f(hi). Secant steps are taken when they land strictly
/// inside the bracket and shrink it fast enough; otherwise the bracket is
/// bisected. Stops when |f| <= value_tol or the bracket collapses to a few ulps.
template <class F>
RootResult find_root_increasing(F&& f, double lo, double hi, double value_tol,
                                std::size_t max_iter = 400)
{
    double f_lo = f(lo);
    double f_hi = f(hi);
    if (!(f_lo <= 0.0 && f_hi >= 0.0))
        throw std::invalid_argument("find_root_increasing: root is not bracketed");
    if (f_lo == 0.0)
        return {lo, f_lo, 0};
    if (f_hi == 0.0)
        return {hi, f_hi, 0};

    double best_x = std::abs(f_lo) < std::abs(f_hi) ? lo : hi;
    double best_f = std::abs(f_lo) < std::abs(f_hi) ? f_lo : f_hi;
    double last_width = hi - lo;
    bool bisect_next = false;

    for (std::size_t it = 1; it <= max_iter; ++it) {
        double x = 0.5 * (lo + hi);
        if (!bisect_next && std::isfinite(f_lo) && std::isfinite(f_hi)) {
            const double secant = lo - f_lo * (hi - lo) / (f_hi - f_lo);
            if (secant > lo && secant < hi)
                x = secant;
        }
        const double fx = f(x);
        if (std::abs(fx) < std::abs(best_f)) {
            best_x = x;
            best_f = fx;
        }
        if (std::abs(fx) <= value_tol)
            return {x, fx, it};

        if (fx < 0.0) {
            lo = x;
            f_lo = fx;
        } else {
            hi = x;
            f_hi = fx;
        }

        const double width = hi - lo;
        if (width <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(hi))
            return {best_x, best_f, it};
        // Regula falsi stalls on one-sided convergence; force a bisection then.
        bisect_next = width > 0.5 * last_width;
        last_width = width;
    }
    return {best_x, best_f, max_iter};
}

} // namespace qfp
