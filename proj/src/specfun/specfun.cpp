#include "qfp/specfun.hpp"

#include "qfp/errors.hpp"
#include "qfp/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

namespace qfp::specfun {

namespace {

constexpr double kSeriesRelTol = 1e-15;
constexpr std::size_t kSeriesMaxTerms = 1'000'000;
constexpr std::size_t kZetaTerms = 10'000'000;
constexpr double kQuadratureRelTol = 1e-13;
// exp(-R^2/2) < 1e-18
constexpr double kTailExponent = 18.0 * std::numbers::ln10;

void require_order(double s)
{
    if (!std::isfinite(s) || s <= 0.0)
        throw DomainError("polylog: order s must be a positive finite number, got " +
                          std::to_string(s));
}

/// m^{-s}; half-integer and integer orders avoid pow().
class InversePower {
public:
    explicit InversePower(double s)
        : s_(s)
    {
        const double twice = 2.0 * s;
        if (twice == std::floor(twice) && twice <= 64.0) {
            integer_part_ = static_cast<int>(std::floor(s));
            half_ = (twice - 2.0 * integer_part_) > 0.5;
            fast_ = true;
        }
    }

    double operator()(double m) const
    {
        if (!fast_)
            return std::exp(-s_ * std::log(m));
        double denom = half_ ? std::sqrt(m) : 1.0;
        for (int i = 0; i < integer_part_; ++i)
            denom *= m;
        return 1.0 / denom;
    }

private:
    double s_;
    int integer_part_ = 0;
    bool half_ = false;
    bool fast_ = false;
};

double series(double s, double z)
{
    const InversePower inv(s);
    double sum = 1.0;
    double previous = 0.0;
    double z_power = 1.0;
    for (std::size_t m = 2; m <= kSeriesMaxTerms; ++m) {
        z_power *= z;
        const double term = z_power * inv(static_cast<double>(m));
        if (std::abs(term) < kSeriesRelTol * std::abs(sum))
            return sum;
        previous = sum;
        sum += term;
    }
    // Cap reached: only possible for |z| = 1. For the alternating case the
    // limit lies between consecutive partial sums.
    return z < 0.0 ? 0.5 * (sum + previous) : sum;
}

double quadrature(double s, double z)
{
    // With r = u^2 the factor r^{2s-1} dr becomes 2 u^{4s-1} du, which removes
    // the endpoint singularity for s < 1. Written as 1 / (e^t - z) the
    // integrand stays well conditioned for z -> 1 and for z << -1.
    const double one_minus_z = 1.0 - z;
    const double exponent = 4.0 * s - 1.0;
    auto integrand = [=](double u) {
        if (u == 0.0)
            return exponent == 0.0 ? 2.0 / one_minus_z : 0.0;
        const double u2 = u * u;
        const double t = 0.5 * u2 * u2;
        return 2.0 * std::pow(u, exponent) / (std::expm1(t) + one_minus_z);
    };
    const double r_max = std::sqrt(2.0 * (kTailExponent + std::log1p(std::abs(z))));
    const double u_max = std::sqrt(r_max);
    const double integral = integrate_adaptive(integrand, 0.0, u_max, kQuadratureRelTol, 16);
    return std::exp((1.0 - s) * std::numbers::ln2 - std::lgamma(s)) * integral;
}

double zeta_uncached(double s)
{
    const InversePower inv(s);
    double sum = 0.0;
    for (std::size_t m = kZetaTerms; m >= 1; --m)
        sum += inv(static_cast<double>(m));
    // Euler-Maclaurin remainder of sum_{m > N} m^{-s}.
    const double n = static_cast<double>(kZetaTerms);
    const double n_pow = inv(n);
    const double tail = n * n_pow / (s - 1.0) - 0.5 * n_pow + s * n_pow / (12.0 * n);
    return sum + tail;
}

} // namespace

double sphere_surface_area(int n)
{
    if (n < 1)
        throw DomainError("sphere_surface_area: dimension must be >= 1, got " +
                          std::to_string(n));
    const double half = 0.5 * n;
    return 2.0 * std::pow(std::numbers::pi, half) / std::tgamma(half);
}

double gaussian_radial_moment(double a, int n)
{
    if (!(a > 0.0) || !std::isfinite(a))
        throw DomainError("gaussian_radial_moment: a must be positive, got " + std::to_string(a));
    if (n < 1)
        throw DomainError("gaussian_radial_moment: dimension must be >= 1, got " +
                          std::to_string(n));
    const double half = 0.5 * n;
    return 0.5 * std::pow(a, -half) * std::tgamma(half);
}

double zeta(double s)
{
    if (!std::isfinite(s) || s <= 1.0)
        throw DivergenceError("zeta: series diverges for s <= 1 (got s = " + std::to_string(s) +
                              ")");
    static std::mutex mutex;
    static std::map<double, double> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(s); it != cache.end())
            return it->second;
    }
    const double value = zeta_uncached(s);
    std::lock_guard lock(mutex);
    cache.emplace(s, value);
    return value;
}

double polylog(double s, double z, PolylogMethod method)
{
    require_order(s);
    if (std::isnan(z))
        throw DomainError("polylog: argument is NaN");
    if (z > 1.0)
        throw DivergenceError("polylog: L_s(z) is infinite for z > 1 (got z = " +
                              std::to_string(z) + ")");
    if (z == 1.0) {
        if (s <= 1.0)
            throw DivergenceError("polylog: L_s(1) diverges for s <= 1 (got s = " +
                                  std::to_string(s) + ")");
        return zeta(s);
    }
    if (z == 0.0)
        return 1.0;
    if (std::isinf(z))
        return 0.0;

    switch (method) {
    case PolylogMethod::series:
        if (std::abs(z) > 1.0)
            throw DomainError("polylog: series representation does not hold for |z| > 1");
        return series(s, z);
    case PolylogMethod::quadrature:
        return quadrature(s, z);
    case PolylogMethod::automatic:
        break;
    }
    return std::abs(z) <= kSeriesBranchLimit ? series(s, z) : quadrature(s, z);
}

double polylog_partial_sum(double s, double z, std::size_t terms)
{
    require_order(s);
    const InversePower inv(s);
    double sum = 0.0;
    double z_power = 1.0;
    for (std::size_t m = 1; m <= terms; ++m) {
        sum += z_power * inv(static_cast<double>(m));
        z_power *= z;
    }
    return sum;
}

} // namespace qfp::specfun
