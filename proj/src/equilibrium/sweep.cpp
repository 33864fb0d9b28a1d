#include "qfp/equilibrium.hpp"

#include "qfp/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace qfp::equilibrium {

namespace {

// Root-solve noise around the fermion critical point kC = -1.
constexpr double kCriticalSlack = 1e-9;

Verdict check(bool holds) { return holds ? Verdict::holds : Verdict::violated; }

void fill_verdicts(SweepRow& row, const SweepOptions& options)
{
    const EquilibriumSolution& sol = *row.solution;
    const double k = row.k;
    const auto& c = sol.classical;
    if (k == 0.0) {
        row.energy_order = row.entropy_order = row.free_energy_order = row.lemma_bounds =
            Verdict::holds;
        return;
    }

    if (sol.kC >= -1.0 - kCriticalSlack)
        row.energy_order = check(k > 0.0 ? sol.energy < c.energy : sol.energy > c.energy);

    const bool small = std::abs(k) <= options.small_k;
    if (small && sol.params.n > 2)
        row.entropy_order = check(k > 0.0 ? sol.entropy < c.entropy : sol.entropy > c.entropy);
    if (small)
        row.free_energy_order =
            check(k > 0.0 ? sol.free_energy > c.free_energy : sol.free_energy < c.free_energy);

    const double kc0 = k * c.C0;
    if (k < 0.0) {
        bool holds = sol.C > c.C0;
        if (2.0 * kc0 > -1.0)
            holds = holds && sol.C < 2.0 * c.C0;
        row.lemma_bounds = check(holds);
    } else if (kc0 < 1.0) {
        row.lemma_bounds = check(sol.C < c.C0);
    }
}

} // namespace

const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::holds:
        return "1";
    case Verdict::violated:
        return "0";
    case Verdict::not_asserted:
        break;
    }
    return "na";
}

Verdict verdict_from_string(const std::string& text)
{
    if (text == "1")
        return Verdict::holds;
    if (text == "0")
        return Verdict::violated;
    if (text == "na")
        return Verdict::not_asserted;
    throw std::invalid_argument("unknown verdict '" + text + "'");
}

std::size_t SweepRow::violations() const
{
    std::size_t count = 0;
    for (Verdict v : {energy_order, entropy_order, free_energy_order, lemma_bounds})
        count += v == Verdict::violated ? 1 : 0;
    return count;
}

std::vector<SweepRow> sweep(const ModelParams& base, std::span<const double> k_grid,
                            const SweepOptions& options)
{
    base.validate();
    std::vector<SweepRow> rows(k_grid.size());
    const auto count = static_cast<long>(k_grid.size());

#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
        SweepRow& row = rows[static_cast<std::size_t>(i)];
        row.k = k_grid[static_cast<std::size_t>(i)];
        try {
            row.solution = solve_normalization(base.with_k(row.k));
            fill_verdicts(row, options);
        } catch (const SupercriticalDensity& e) {
            row.error = e.what();
        } catch (const std::exception& e) {
            row.error = e.what();
        }
    }
    return rows;
}

std::size_t count_violations(std::span<const SweepRow> rows)
{
    std::size_t total = 0;
    for (const SweepRow& row : rows)
        total += row.violations();
    return total;
}

} // namespace qfp::equilibrium
