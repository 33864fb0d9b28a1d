#pragma once

#include <cstddef>

namespace qfp::specfun {

/// Surface area of the unit (n-1)-sphere, 2 pi^{n/2} / Gamma(n/2).
double sphere_surface_area(int n);

/// int_0^inf exp(-a r^2) r^{n-1} dr = Gamma(n/2) / (2 a^{n/2}).
double gaussian_radial_moment(double a, int n);

enum class PolylogMethod { automatic, series, quadrature };

/// L_s(z) = sum_{m>=1} z^{m-1} / m^s, continued to z < -1 by its Bose-type
/// integral representation
///
///     L_s(z) = 2^{1-s} / Gamma(s) * int_0^inf e^{-r^2/2} r^{2s-1} / (1 - z e^{-r^2/2}) dr.
///
/// Equivalently Li_s(z) / z with L_s(0) = 1. Defined for s > 0 and z < 1, and
/// at z = 1 for s > 1 where it equals zeta(s). `automatic` uses the series for
/// |z| <= 0.9 and the integral otherwise.
///
/// Throws DivergenceError for z > 1 or (z == 1, s <= 1); DomainError for
/// s <= 0, non-finite input, or an explicit series request with |z| > 1.
double polylog(double s, double z, PolylogMethod method = PolylogMethod::automatic);

/// First `terms` terms of the defining series. Used for Leibniz bracketing.
double polylog_partial_sum(double s, double z, std::size_t terms);

/// Riemann zeta for real s > 1: 10^7 directly summed terms plus an
/// Euler-Maclaurin tail. Results are memoised per s.
double zeta(double s);

/// Value of `automatic` switch point between series and integral.
inline constexpr double kSeriesBranchLimit = 0.9;

} // namespace qfp::specfun
