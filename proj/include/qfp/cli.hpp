#pragma once

#include "qfp/equilibrium.hpp"
#include "qfp/kinetics/grid.hpp"
#include "qfp/kinetics/solver.hpp"

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qfp::cli {

enum ExitCode : int {
    kOk = 0,
    kVerifyFailed = 1,
    kSupercritical = 2,
    kIoError = 3,
    kSolverError = 4,
    /// Malformed command line or parameters outside a module's domain.
    kUsageError = 64,
};

struct EquilibriumArgs {
    equilibrium::ModelParams params;
    std::optional<std::string> out;
};

struct SweepArgs {
    equilibrium::ModelParams base;
    double k_min = -0.5;
    double k_max = 0.0;
    int steps = 11;
    double small_k = 0.05;
    /// Empty writes the table to stdout.
    std::string out;
};

enum class InitialKind { maxwellian, modulated_maxwellian, shifted_gaussian };

struct SimulateConfig {
    std::size_t x_nodes = 128;
    double length = 1.0;
    std::size_t v_nodes = 128;
    double v_max = 8.0;
    double k = -0.5;
    double rho = 1.0;
    /// 0 picks the largest stable step for the initial data.
    double dt = 0.0;
    double t_end = 20.0;
    double output_interval = 0.1;
    double tolerance = 1e-8;
    kinetics::BoundaryKind boundary = kinetics::BoundaryKind::bounce_back;
    /// Maxwellian inflow data (density, temperature) for each wall.
    double inflow_left_density = 0.0;
    double inflow_left_temperature = 1.0;
    double inflow_right_density = 0.0;
    double inflow_right_temperature = 1.0;
    InitialKind initial = InitialKind::modulated_maxwellian;
    double amplitude = 0.3;
    int mode = 1;
    double shift = 0.0;
    double width = 1.0;
    std::string diagnostics_path = "diagnostics.csv";
    /// Empty skips the final field.
    std::string field_path;

    kinetics::PhaseGrid grid() const;
    kinetics::BoundaryCondition boundary_condition() const;
    kinetics::DistributionField initial_field() const;
    /// `key = value` lines describing every setting, for CSV headers.
    std::vector<std::string> describe() const;
};

/// Reads an INI file with sections [grid], [model], [time], [boundary],
/// [initial] and [output]; absent keys keep their defaults. Throws
/// std::ios_base::failure when unreadable and PreconditionError on bad
/// keys or values.
SimulateConfig load_config(const std::string& path);
SimulateConfig parse_config(std::istream& in);

/// Sweep table, one row per k with verdict columns ("1", "0", "na").
void write_sweep_csv(std::ostream& out, std::span<const equilibrium::SweepRow> rows,
                     std::span<const std::string> comments = {});
std::vector<equilibrium::SweepRow> read_sweep_csv(std::istream& in);

/// Uniform grid from k_min to k_max with `steps` points (one when they coincide).
std::vector<double> k_grid(double k_min, double k_max, int steps);

int cmd_equilibrium(const EquilibriumArgs& args, std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err);
int cmd_simulate(const SimulateConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(bool quick, bool tamper_polylog, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to a subcommand; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace qfp::cli
