#include "qfp/equilibrium.hpp"
#include "qfp/errors.hpp"
#include "qfp/specfun.hpp"

#include <doctest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <array>
#include <cmath>
#include <numbers>
#include <random>

using namespace qfp::equilibrium;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

template <class F>
double radial_integral(F&& f)
{
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, 14.0, 20,
                                                                          1e-14);
}

double surface(int n) { return 2.0 * std::pow(kPi, 0.5 * n) / std::tgamma(0.5 * n); }

// Total density of M_C by direct radial quadrature of the velocity integral.
double density_oracle(const ModelParams& p, double C)
{
    return p.volume * surface(p.n) * radial_integral([&](double r) {
        const double g = C * std::exp(-0.5 * r * r);
        return std::pow(r, p.n - 1) * g / (1.0 - p.k * g);
    });
}

double energy_oracle(const ModelParams& p, double C)
{
    return 0.5 * p.volume * surface(p.n) * C * radial_integral([&](double r) {
        const double e = std::exp(-0.5 * r * r);
        return std::pow(r, p.n + 1) * e / (1.0 - p.k * C * e);
    });
}

// -V int Phi(M_k) dv with Phi(M_k) = M (1 + log g) + log(1 - k g) / k.
double entropy_oracle(const ModelParams& p, double C)
{
    return -p.volume * surface(p.n) * radial_integral([&](double r) {
        const double log_g = std::log(C) - 0.5 * r * r;
        const double g = std::exp(log_g);
        const double m = g / (1.0 - p.k * g);
        return std::pow(r, p.n - 1) * (m * (1.0 + log_g) + std::log1p(-p.k * g) / p.k);
    });
}

double bisect_density(const ModelParams& p)
{
    double lo = 0.0;
    double hi = 1.0;
    while (density_oracle(p, hi) < p.rho)
        hi *= 2.0;
    while (hi - lo > 1e-13 * hi) {
        const double mid = 0.5 * (lo + hi);
        (density_oracle(p, mid) < p.rho ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

TEST_CASE("classical reference")
{
    const auto one = classical_reference({0.0, 1, 1.0, 1.0});
    CHECK(one.C0 == Approx(1.0 / std::sqrt(2.0 * kPi)).epsilon(1e-15));
    CHECK(one.C0 == Approx(0.398942).epsilon(1e-6));

    CHECK(classical_reference({0.0, 3, 1.0, 2.0}).energy == 3.0);

    const auto two = classical_reference({0.0, 2, 1.0, 1.0});
    CHECK(two.entropy == Approx(1.0 + std::log(2.0 * kPi)).epsilon(1e-14));
    CHECK(two.entropy == Approx(2.8379).epsilon(1e-4));
    CHECK(two.free_energy == Approx(two.entropy - two.energy));

    CHECK_THROWS_AS(classical_reference({0.0, 0, 1.0, 1.0}), qfp::PreconditionError);
    CHECK_THROWS_AS(classical_reference({0.0, 1, -1.0, 1.0}), qfp::PreconditionError);
    CHECK_THROWS_AS(classical_reference({0.0, 1, 1.0, 0.0}), qfp::PreconditionError);
}

TEST_CASE("classical solve returns C_0 exactly")
{
    for (int n : {1, 2, 3, 5}) {
        const ModelParams p{0.0, n, 0.7, 1.9};
        const auto sol = solve_normalization(p);
        CHECK(sol.C == classical_reference(p).C0);
        CHECK(sol.energy == 0.5 * n * 1.9);
        CHECK(sol.entropy == Approx(sol.classical.entropy).epsilon(1e-15));
    }
}

TEST_CASE("fermion root for k = -1, n = 1 matches a bisection oracle")
{
    const ModelParams p{-1.0, 1, 1.0, 1.0};
    const auto sol = solve_normalization(p);
    const double oracle = bisect_density(p);
    CHECK(sol.C == Approx(oracle).epsilon(1e-11));
    CHECK(sol.C == Approx(0.5454387949369155).epsilon(1e-12));
    CHECK(std::abs(sol.residual) <= 1e-10);
    CHECK(sol.kC == Approx(-sol.C));
}

TEST_CASE("supercritical boson input is rejected")
{
    const double zeta32 = qfp::specfun::zeta(1.5);
    const double critical_k = std::pow(2.0 * kPi, 1.5) * zeta32;
    CHECK_THROWS_AS(solve_normalization({critical_k, 3, 1.0, 1.0}), qfp::SupercriticalDensity);
    CHECK_THROWS_AS(solve_normalization({2.0 * critical_k, 3, 1.0, 1.0}),
                    qfp::SupercriticalDensity);
    try {
        solve_normalization({critical_k, 3, 1.0, 1.0});
    } catch (const qfp::SupercriticalDensity& e) {
        CHECK(std::string(e.what()).find("kC = 1") != std::string::npos);
        CHECK(e.threshold() == Approx(critical_k).epsilon(1e-14));
    }
    // Just below the threshold a solution exists, close to the critical point.
    const auto sol = solve_normalization({0.99 * critical_k, 3, 1.0, 1.0});
    CHECK(sol.kC < 1.0);
    CHECK(sol.kC > 0.5);
    // n = 1, 2 bosons have no density bound.
    CHECK(solve_normalization({50.0, 1, 1.0, 1.0}).kC < 1.0);
    CHECK(solve_normalization({5.0, 2, 1.0, 1.0}).kC < 1.0);
}

TEST_CASE("maxwellian value")
{
    const std::array<double, 1> origin{0.0};
    CHECK(maxwellian_value({1.0, 0.0}, origin) == 1.0);
    CHECK(maxwellian_value({1.0, -1.0}, origin) == 0.5);

    const MaxwellianSpec boson{0.3, 2.0};
    double previous = maxwellian_value_sq(boson, 0.0);
    for (int i = 1; i <= 60; ++i) {
        const double speed = 0.25 * i;
        const std::array<double, 3> v{speed / std::sqrt(3.0), speed / std::sqrt(3.0),
                                      -speed / std::sqrt(3.0)};
        const double value = maxwellian_value(boson, v);
        CHECK(value < previous);
        CHECK(value >= 0.0);
        CHECK(1.0 + boson.k * value > 0.0);
        previous = value;
    }
    CHECK(previous < 1e-48);
    CHECK_THROWS_AS((MaxwellianSpec{2.0, 0.5}).validate(), qfp::PreconditionError);
}

TEST_CASE("energy closed form against radial quadrature")
{
    CHECK(solve_normalization({0.0, 4, 1.0, 1.3}).energy == 0.5 * 4 * 1.3);

    const ModelParams fermion1{-1.0, 1, 1.0, 1.0};
    CHECK(equilibrium_energy(solve_normalization(fermion1)) > 0.5);

    const ModelParams fermion3{-1.0, 3, 1.0, 1.0};
    const auto sol = solve_normalization(fermion3);
    CHECK(sol.energy == Approx(energy_oracle(fermion3, sol.C)).epsilon(1e-8));
    CHECK(sol.energy == Approx(1.516816379344624).epsilon(1e-10));
    CHECK(density_oracle(fermion3, sol.C) == Approx(1.0).epsilon(1e-10));
}

TEST_CASE("entropy closed form against quadrature of the entropy integral")
{
    const ModelParams fermion3{-1.0, 3, 1.0, 1.0};
    const auto sol = solve_normalization(fermion3);
    CHECK(sol.entropy == Approx(entropy_oracle(fermion3, sol.C)).epsilon(1e-8));
    CHECK(sol.entropy == Approx(4.262414426344135).epsilon(1e-10));

    const auto boson = solve_normalization({0.1, 3, 1.0, 1.0});
    CHECK(boson.entropy < boson.classical.entropy);
    CHECK(boson.entropy == Approx(4.256254256784144).epsilon(1e-10));

    // Continuity at k = 0 along a shrinking sequence, from either side.
    for (double sign : {1.0, -1.0}) {
        double previous_gap = std::numeric_limits<double>::infinity();
        for (double k : {1e-1, 1e-2, 1e-3, 1e-4, 1e-5}) {
            const auto s = solve_normalization({sign * k, 3, 1.0, 1.0});
            const double gap = std::abs(s.entropy - s.classical.entropy);
            CHECK(gap < previous_gap);
            previous_gap = gap;
        }
        CHECK(previous_gap < 1e-6);
    }
}

TEST_CASE("free energy ordering near k = 0")
{
    const auto classical = solve_normalization({0.0, 3, 1.0, 1.0});
    CHECK(classical.free_energy == Approx(classical.entropy - classical.energy));
    CHECK(solve_normalization({-0.01, 3, 1.0, 1.0}).free_energy < classical.free_energy);
    CHECK(solve_normalization({0.01, 3, 1.0, 1.0}).free_energy > classical.free_energy);
}

TEST_CASE("asymptotic slopes")
{
    CHECK(asymptotic_predictions({0.0, 2, 1.0, 1.0}).entropy == 0.0);

    const double c0 = std::pow(2.0 * kPi, -1.5);
    CHECK(asymptotic_predictions({0.0, 3, 1.0, 1.0}).free_energy ==
          Approx(c0 / (2.0 * std::pow(2.0, 1.5))).epsilon(1e-15));

    const ModelParams base{0.0, 1, 1.0, 1.0};
    const double h = 1e-4;
    const double slope = (solve_normalization(base.with_k(h)).energy -
                          solve_normalization(base.with_k(-h)).energy) /
                         (2.0 * h);
    const double predicted = asymptotic_predictions(base).energy;
    CHECK(std::abs(slope - predicted) <= 0.005 * std::abs(predicted));
}

TEST_CASE("asymptotic consistency of one-sided quotients")
{
    for (int n : {1, 2, 3}) {
        const ModelParams base{0.0, n, 1.0, 1.0};
        const auto slopes = asymptotic_predictions(base);
        for (double k : {1e-3, -1e-3, 1e-4, -1e-4}) {
            const auto sol = solve_normalization(base.with_k(k));
            const auto& c = sol.classical;
            auto bound = [&](double slope) {
                return 0.01 * std::abs(slope) + 10.0 * std::abs(k) * std::abs(slope);
            };
            CHECK(std::abs((sol.energy - c.energy) / k - slopes.energy) <=
                  bound(slopes.energy));
            CHECK(std::abs((sol.free_energy - c.free_energy) / k - slopes.free_energy) <=
                  bound(slopes.free_energy));
            if (n != 2)
                CHECK(std::abs((sol.entropy - c.entropy) / k - slopes.entropy) <=
                      bound(slopes.entropy));
        }
    }
}

TEST_CASE("root residual and uniqueness over random parameters")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> k_dist(-4.0, 4.0);
    std::uniform_real_distribution<double> vol_dist(0.3, 3.0);
    std::uniform_real_distribution<double> rho_dist(0.1, 5.0);
    int solved = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const ModelParams p{k_dist(rng), 1 + trial % 3, vol_dist(rng), rho_dist(rng)};
        if (p.k > 0.0 && !(p.k * p.rho < critical_k_rho(p)))
            continue;
        const auto a = solve_normalization(p);
        const auto b = solve_normalization(p);
        CHECK(a.C > 0.0);
        CHECK(a.kC < 1.0);
        CHECK(std::abs(a.residual) <= 1e-10 * p.rho);
        CHECK(a.C == Approx(b.C).epsilon(1e-12));
        CHECK(density_oracle(p, a.C) == Approx(p.rho).epsilon(1e-9));
        ++solved;
    }
    CHECK(solved > 40);
}

TEST_CASE("normalization map is increasing in C")
{
    for (double k : {-3.0, -1.0, 0.5, 2.0}) {
        const ModelParams p{k, 2, 1.0, 1.0};
        const double upper = k > 0.0 ? 1.0 / k : 10.0;
        double previous = 0.0;
        for (int i = 1; i < 100; ++i) {
            const double value = normalization_map(p, upper * i / 100.0);
            CHECK(value > previous);
            previous = value;
        }
    }
}

TEST_CASE("sweep rows and verdicts")
{
    const ModelParams base{0.0, 3, 1.0, 1.0};
    {
        const std::array<double, 1> grid{0.0};
        const auto rows = sweep(base, grid);
        REQUIRE(rows.size() == 1);
        CHECK(rows[0].solution.has_value());
        CHECK(rows[0].energy_order == Verdict::holds);
        CHECK(rows[0].entropy_order == Verdict::holds);
        CHECK(rows[0].free_energy_order == Verdict::holds);
        CHECK(rows[0].lemma_bounds == Verdict::holds);
    }

    // k from the fermion critical point kC = -1 to well past the boson limit.
    const double c0 = classical_reference(base).C0;
    std::vector<double> grid;
    for (int i = 0; i <= 40; ++i)
        grid.push_back(-qfp::specfun::polylog(1.5, -1.0) / c0 * (1.0 - i / 20.0));
    grid.push_back(1e6);
    const auto rows = sweep(base, grid);
    CHECK(count_violations(rows) == 0);
    CHECK_FALSE(rows.back().solution.has_value());
    CHECK(rows.back().error.find("supercritical") != std::string::npos);

    for (const auto& row : rows) {
        if (!row.solution || row.k == 0.0)
            continue;
        if (row.solution->kC >= -1.0 - 1e-9)
            CHECK(row.energy_order == Verdict::holds);
        if (row.k < 0.0)
            CHECK(row.solution->C > row.solution->classical.C0);
        if (row.k > 0.0 && row.k * c0 < 1.0)
            CHECK(row.solution->C < row.solution->classical.C0);
    }
}
