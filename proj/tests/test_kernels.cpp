// OpenMP kernels against the serial reference.

#include "qfp/errors.hpp"
#include "qfp/kinetics/diagnostics.hpp"
#include "qfp/kinetics/initial.hpp"
#include "qfp/kinetics/reference.hpp"
#include "qfp/kinetics/solver.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace qfp::kinetics;
using doctest::Approx;

namespace {

double max_abs_difference(const DistributionField& a, const DistributionField& b)
{
    double worst = 0.0;
    for (std::size_t idx = 0; idx < a.values().size(); ++idx)
        worst = std::max(worst, std::abs(a.values()[idx] - b.values()[idx]));
    return worst;
}

struct ThreadScope {
    explicit ThreadScope(int threads)
    {
#ifdef _OPENMP
        previous = omp_get_max_threads();
        omp_set_num_threads(threads);
#else
        (void)threads;
#endif
    }
    ~ThreadScope()
    {
#ifdef _OPENMP
        omp_set_num_threads(previous);
#endif
    }
    int previous = 1;
};

DistributionField noisy_maxwellian(const PhaseGrid& g, double k, std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> jitter(0.6, 1.0);
    DistributionField f = modulated_maxwellian(g, k, 1.0, 0.4);
    for (double& value : f.values())
        value *= jitter(rng);
    return f;
}

} // namespace

TEST_CASE("parallel step matches the serial reference")
{
    const PhaseGrid g(24, 1.0, 48, 8.0);
    std::mt19937_64 rng(2024);
    for (int threads : {1, 4}) {
        ThreadScope scope(threads);
        for (double k : {-1.0, -0.3, 0.0, 0.5}) {
            std::vector<BoundaryCondition> conditions{BoundaryCondition::bounce_back(),
                                                      BoundaryCondition::periodic()};
            std::vector<double> left(g.v_nodes()), right(g.v_nodes());
            for (std::size_t j = 0; j < g.v_nodes(); ++j) {
                left[j] = 0.3 * std::exp(-0.5 * g.v(j) * g.v(j));
                right[j] = 0.1 * std::exp(-0.3 * g.v(j) * g.v(j));
            }
            conditions.push_back(BoundaryCondition::inflow(left, right));

            for (const auto& bc : conditions) {
                CAPTURE(threads);
                CAPTURE(k);
                CAPTURE(to_string(bc.kind));
                DistributionField parallel = noisy_maxwellian(g, k, rng);
                DistributionField serial = parallel;
                Solver solver(g, k, bc);
                for (int n = 0; n < 20; ++n) {
                    const double dt = max_stable_dt(g, k, parallel.max_value());
                    const StepStats ps = solver.advance(parallel, dt);
                    StepStats ss;
                    serial = reference::step(serial, dt, bc, &ss);
                    CHECK(ps.density_outflow == Approx(ss.density_outflow).epsilon(1e-12));
                    CHECK(ps.energy_flux == Approx(ss.energy_flux).epsilon(1e-12));
                    CHECK(ps.entropy_flow == Approx(ss.entropy_flow).epsilon(1e-12));
                }
                CHECK(max_abs_difference(parallel, serial) <= 1e-13 * parallel.max_value());
            }
        }
    }
}

TEST_CASE("parallel reductions match the serial reference")
{
    const PhaseGrid g(37, 2.0, 64, 8.0);
    std::mt19937_64 rng(99);
    for (int threads : {1, 3}) {
        ThreadScope scope(threads);
        for (double k : {-0.7, 0.0, 0.4}) {
            const DistributionField f = noisy_maxwellian(g, k, rng);
            CHECK(total_density(f) == Approx(reference::total_density(f)).epsilon(1e-13));
            CHECK(total_energy(f) == Approx(reference::total_energy(f)).epsilon(1e-13));
            CHECK(entropy(f) == Approx(reference::entropy(f)).epsilon(1e-13));
            CHECK(moments(f).total_density == Approx(reference::total_density(f)).epsilon(1e-13));
            CHECK(free_energy(f) ==
                  Approx(reference::entropy(f) - reference::total_energy(f)).epsilon(1e-13));
        }
    }
}

TEST_CASE("reference step enforces the same contract")
{
    const PhaseGrid g(8, 1.0, 32, 8.0);
    const DistributionField f = modulated_maxwellian(g, -0.5, 1.0, 0.2);
    const double dt_max = max_stable_dt(g, -0.5, f.max_value());
    CHECK_THROWS_AS(reference::step(f, 1.1 * dt_max, BoundaryCondition::periodic()),
                    qfp::StepSizeError);
    DistributionField over = f;
    over(2, 16) = 2.5;
    CHECK_THROWS_AS(reference::step(over, 1e-4, BoundaryCondition::periodic()),
                    qfp::AdmissibilityError);
}
