#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qfp::equilibrium {

/// Physical setting of a global Maxwellian: statistics k (k > 0 bosons,
/// k < 0 fermions, k = 0 classical), velocity dimension n, volume of the
/// spatial domain and the prescribed total density.
struct ModelParams {
    double k = 0.0;
    int n = 1;
    double volume = 1.0;
    double rho = 1.0;

    /// Throws PreconditionError unless n >= 1, volume > 0, rho > 0 and k finite.
    void validate() const;
    ModelParams with_k(double new_k) const
    {
        ModelParams copy = *this;
        copy.k = new_k;
        return copy;
    }
};

/// C = e^{-mu} and k of M_k(v) = C e^{-|v|^2/2} / (1 - k C e^{-|v|^2/2}).
struct MaxwellianSpec {
    double C = 1.0;
    double k = 0.0;

    /// Throws PreconditionError unless C > 0 and 1 - kC > 0.
    void validate() const;
};

struct ClassicalReference {
    double C0;
    double energy;
    double entropy;
    double free_energy;
};

struct EquilibriumSolution {
    ModelParams params;
    double C;
    double kC;
    double energy;
    double entropy;
    double free_energy;
    ClassicalReference classical;
    /// (2 pi)^{n/2} V C L_{n/2}(kC) - rho at the returned C.
    double residual;

    MaxwellianSpec maxwellian() const { return {C, params.k}; }
};

/// C_0 = (2 pi)^{-n/2} rho / V together with E_c = n rho / 2,
/// S_c = E_c - rho log C_0 and F_c = S_c - E_c.
ClassicalReference classical_reference(const ModelParams& params);

/// Total density (2 pi)^{n/2} V C L_{n/2}(kC) of the Maxwellian with constant C.
double normalization_map(const ModelParams& params, double C);

/// Supremum of k*rho for which a boson solution exists:
/// (2 pi)^{n/2} V zeta(n/2) for n > 2, +inf for n <= 2.
double critical_k_rho(const ModelParams& params);

/// Unique C_k > 0 with k C_k < 1 reproducing the prescribed density, with all
/// derived thermodynamic quantities. Throws SupercriticalDensity for boson
/// input above critical_k_rho() (or beyond what double precision can reach
/// near the critical point kC = 1).
EquilibriumSolution solve_normalization(const ModelParams& params);

/// g / (1 - k g) with g = C exp(-|v|^2 / 2).
double maxwellian_value(const MaxwellianSpec& spec, std::span<const double> velocity);
double maxwellian_value_sq(const MaxwellianSpec& spec, double speed_squared);

double equilibrium_energy(const ModelParams& params, double C);
double equilibrium_entropy(const ModelParams& params, double C);
double equilibrium_free_energy(const ModelParams& params, double C);

inline double equilibrium_energy(const EquilibriumSolution& sol)
{
    return equilibrium_energy(sol.params, sol.C);
}
inline double equilibrium_entropy(const EquilibriumSolution& sol)
{
    return equilibrium_entropy(sol.params, sol.C);
}
inline double equilibrium_free_energy(const EquilibriumSolution& sol)
{
    return equilibrium_free_energy(sol.params, sol.C);
}

/// First-order coefficients of X_q - X_c = k * slope + O(k^2).
struct AsymptoticSlopes {
    double energy;
    double entropy;
    double free_energy;
};

AsymptoticSlopes asymptotic_predictions(const ModelParams& params);

/// Outcome of one ordering check in a sweep row.
enum class Verdict { holds, violated, not_asserted };

const char* to_string(Verdict v);
Verdict verdict_from_string(const std::string& text);

struct SweepRow {
    double k;
    std::optional<EquilibriumSolution> solution;
    /// Error text for rows without a solution (supercritical input).
    std::string error;
    /// E_{q,B} < E_c < E_{q,F}, asserted for -1 <= kC < 1.
    Verdict energy_order = Verdict::not_asserted;
    /// S_{q,B} < S_c < S_{q,F}, asserted for n > 2 and |k| <= small_k.
    Verdict entropy_order = Verdict::not_asserted;
    /// F_{q,F} < F_c < F_{q,B}, asserted for |k| <= small_k.
    Verdict free_energy_order = Verdict::not_asserted;
    /// C_k > C_0 (k < 0), C_k < 2 C_0 (-1 < 2kC_0 < 0), C_k < C_0 (0 < kC_0 < 1).
    Verdict lemma_bounds = Verdict::not_asserted;

    std::size_t violations() const;
};

struct SweepOptions {
    /// |k| below which the small-k orderings of entropy and free energy are asserted.
    double small_k = 0.05;
};

/// One row per k; rows are independent and computed in parallel.
std::vector<SweepRow> sweep(const ModelParams& base, std::span<const double> k_grid,
                            const SweepOptions& options = {});

std::size_t count_violations(std::span<const SweepRow> rows);

} // namespace qfp::equilibrium
