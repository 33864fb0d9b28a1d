#pragma once

#include "qfp/equilibrium.hpp"
#include "qfp/kinetics/diagnostics.hpp"
#include "qfp/kinetics/grid.hpp"

#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qfp::kinetics {

/// Largest admissible step, 0.9 min(dx / V_max, dv^2 / 2, dv / (V_max (1 + |k| f_max))).
double max_stable_dt(const PhaseGrid& grid, double k, double f_max);

/// Boundary bookkeeping of one split step, integrated over the transport substeps.
struct StepStats {
    /// int B dt: density that left through the walls.
    double density_outflow = 0.0;
    /// int A dt.
    double energy_flux = 0.0;
    /// int U dt.
    double entropy_flow = 0.0;
    /// Mass added (positive) or removed by the admissibility clamp.
    double clamp_mass = 0.0;
};

/// Strang-split integrator for
///     f_t + v f_x = (f_v + v f (1 + k f))_v
/// on a PhaseGrid. Transport is first-order upwind; the collision operator
/// uses an exponentially fitted two-point flux whose potential
/// v^2/2 - log(1 + k f) is frozen at the start of the step, solved linearly
/// implicitly. Discrete global Maxwellians are steady states of both parts.
///
/// One Solver instance owns scratch storage and must not be shared between
/// threads; its kernels are OpenMP-parallel internally.
class Solver {
public:
    Solver(PhaseGrid grid, double k, BoundaryCondition bc);

    const PhaseGrid& grid() const noexcept { return grid_; }
    double k() const noexcept { return k_; }
    const BoundaryCondition& boundary() const noexcept { return bc_; }

    /// Advances f in place. Throws StepSizeError when dt exceeds
    /// max_stable_dt and AdmissibilityError on fermion overshoot beyond the
    /// clamp tolerance or non-finite values.
    StepStats advance(DistributionField& f, double dt);

private:
    void transport(DistributionField& f, double tau, StepStats& stats);
    void collide(DistributionField& f, double dt);

    PhaseGrid grid_;
    double k_;
    BoundaryCondition bc_;
    std::vector<double> buffer_;
    // exp((v_{j+1}^2 - v_j^2) / 2) per velocity face.
    std::vector<double> face_ratio_;
};

/// One split step on a copy of f; also rejects inadmissible input with
/// AdmissibilityError.
DistributionField step(const DistributionField& f, double dt, const BoundaryCondition& bc);

struct DiagnosticRecord {
    double t = 0.0;
    double rho = 0.0;
    std::vector<std::optional<double>> u_profile;
    double energy = 0.0;
    double entropy = 0.0;
    double free_energy = 0.0;
    /// Present while the total density matches the reference Maxwellian.
    std::optional<double> distance;
    double lyapunov = 0.0;
    double flux_A = 0.0;
    double flux_B = 0.0;
    double flux_U = 0.0;
    /// rho(t) - rho(0) + int B dt: mass not accounted for by boundary fluxes.
    double mass_error = 0.0;
};

struct Classification {
    bool dissipative = false;
    bool conservative = false;
};

/// Dissipative iff A >= -tol on every record, conservative iff |A| <= tol.
/// Throws PreconditionError for an empty series.
Classification classify(std::span<const DiagnosticRecord> series, double tolerance = 1e-10);

struct RunOptions {
    /// 0 selects max_stable_dt for the initial data.
    double dt = 0.0;
    double t_end = 20.0;
    double output_interval = 0.1;
    /// Slack in G~(t+dt) - G~(t) <= int (U - A) dt.
    double tolerance = 1e-8;
};

struct InequalityViolation {
    std::size_t step;
    double t;
    double increase;
    double allowed;
};

struct RunResult {
    explicit RunResult(DistributionField state) : final_state(std::move(state)) {}

    std::vector<DiagnosticRecord> records;
    std::vector<InequalityViolation> violations;
    std::size_t steps = 0;
    double dt = 0.0;
    equilibrium::MaxwellianSpec reference;
    double reference_level = 0.0;
    double clamp_mass = 0.0;
    /// Largest per-step value of G~ increase minus its allowed bound int (U - A) dt.
    double worst_excess = -std::numeric_limits<double>::infinity();
    DistributionField final_state;
    /// Set when a step failed; records then hold the partial series.
    std::optional<std::string> failure;
};

/// Integrates to t_end, checking the entropy inequality after every step
/// and recording diagnostics at t = 0, every output interval and t_end.
/// C~ is the free energy of the discrete Maxwellian carrying the initial mass.
RunResult run(const DistributionField& initial, const BoundaryCondition& bc,
              const RunOptions& options);

DiagnosticRecord diagnose(const DistributionField& f, const BoundaryCondition& bc, double t,
                          const equilibrium::MaxwellianSpec& reference, double level,
                          double initial_density, double outflow);

/// `t,rho,E,S,F,G,Gtilde,A,B,U,mass_error` with 17 significant digits; each
/// comment line is written first, prefixed with '#'.
void write_diagnostics_csv(std::ostream& out, std::span<const DiagnosticRecord> records,
                           std::span<const std::string> comments = {});
/// Inverse of write_diagnostics_csv for the scalar columns (u_profile is not stored).
std::vector<DiagnosticRecord> read_diagnostics_csv(std::istream& in);
/// Rows are x indices, columns v indices.
void write_field_csv(std::ostream& out, const DistributionField& f);

inline constexpr const char* kDiagnosticsHeader = "t,rho,E,S,F,G,Gtilde,A,B,U,mass_error";

} // namespace qfp::kinetics
