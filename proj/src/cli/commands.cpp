#include "qfp/cli.hpp"

#include "qfp/acceptance.hpp"
#include "qfp/errors.hpp"
#include "qfp/specfun.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <ostream>

namespace qfp::cli {

namespace {

std::string g17(double x)
{
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.17g", x);
    return buffer;
}

std::string g10(double x)
{
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.10g", x);
    return buffer;
}

std::vector<std::string> model_comments(const equilibrium::ModelParams& p)
{
    return {"n = " + std::to_string(p.n), "volume = " + g17(p.volume), "rho = " + g17(p.rho)};
}

// Opens `path` for writing or reports the failure on `err`.
bool open_output(const std::string& path, std::ofstream& file, std::ostream& err)
{
    file.open(path);
    if (!file) {
        err << "error: cannot write '" << path << "'\n";
        return false;
    }
    return true;
}

const char* ordering_label(double k)
{
    if (k < 0.0)
        return "fermion > classical";
    if (k > 0.0)
        return "boson < classical";
    return "classical";
}

const char* verdict_word(equilibrium::Verdict v)
{
    switch (v) {
    case equilibrium::Verdict::holds: return "holds";
    case equilibrium::Verdict::violated: return "VIOLATED";
    case equilibrium::Verdict::not_asserted: break;
    }
    return "not asserted";
}

} // namespace

std::vector<double> k_grid(double k_min, double k_max, int steps)
{
    if (!std::isfinite(k_min) || !std::isfinite(k_max))
        throw PreconditionError("k range must be finite");
    if (k_min > k_max)
        throw PreconditionError("k_min must not exceed k_max");
    if (k_min == k_max)
        return {k_min};
    if (steps < 2)
        throw PreconditionError("a k range needs at least 2 steps");
    std::vector<double> ks(static_cast<std::size_t>(steps));
    for (int m = 0; m < steps; ++m)
        ks[static_cast<std::size_t>(m)] = k_min + (k_max - k_min) * m / (steps - 1);
    ks.back() = k_max;
    return ks;
}

int cmd_equilibrium(const EquilibriumArgs& args, std::ostream& out, std::ostream& err)
{
    const auto& p = args.params;
    try {
        p.validate();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    try {
        equilibrium::solve_normalization(p);
    } catch (const SupercriticalDensity& e) {
        err << "error: " << e.what() << '\n'
            << "threshold: k*rho must stay below " << g10(e.threshold()) << " (got "
            << g10(e.k_rho()) << ")\n";
        return kSupercritical;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kSolverError;
    }
    const double ks[] = {p.k};
    const auto rows = equilibrium::sweep(p, ks);
    const auto& row = rows.front();
    const auto& s = *row.solution;
    out << "k = " << g10(p.k) << ", n = " << p.n << ", V = " << g10(p.volume)
        << ", rho = " << g10(p.rho) << '\n'
        << "C_k   = " << g17(s.C) << '\n'
        << "kC_k  = " << g17(s.kC) << '\n'
        << "E_q   = " << g17(s.energy) << "   (classical E_c = " << g17(s.classical.energy)
        << ")\n"
        << "S_q   = " << g17(s.entropy) << "   (classical S_c = " << g17(s.classical.entropy)
        << ")\n"
        << "F_q   = " << g17(s.free_energy) << "   (classical F_c = "
        << g17(s.classical.free_energy) << ")\n"
        << "C_0   = " << g17(s.classical.C0) << '\n'
        << "residual = " << g10(s.residual) << '\n'
        << "energy ordering: " << ordering_label(p.k) << " (" << verdict_word(row.energy_order)
        << ")\n"
        << "entropy ordering: " << verdict_word(row.entropy_order) << '\n'
        << "free energy ordering: " << verdict_word(row.free_energy_order) << '\n'
        << "bounds on C_k: " << verdict_word(row.lemma_bounds) << '\n';

    if (args.out) {
        std::ofstream file;
        if (!open_output(*args.out, file, err))
            return kIoError;
        write_sweep_csv(file, rows, model_comments(p));
        if (!file) {
            err << "error: failed writing '" << *args.out << "'\n";
            return kIoError;
        }
    }
    return kOk;
}

int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err)
{
    std::vector<double> ks;
    try {
        args.base.with_k(0.0).validate();
        ks = k_grid(args.k_min, args.k_max, args.steps);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    equilibrium::SweepOptions options;
    options.small_k = args.small_k;
    const auto rows = equilibrium::sweep(args.base, ks, options);

    auto comments = model_comments(args.base);
    comments.push_back("k_min = " + g17(args.k_min));
    comments.push_back("k_max = " + g17(args.k_max));
    comments.push_back("steps = " + std::to_string(ks.size()));
    comments.push_back("small_k = " + g17(args.small_k));

    if (args.out.empty()) {
        write_sweep_csv(out, rows, comments);
    } else {
        std::ofstream file;
        if (!open_output(args.out, file, err))
            return kIoError;
        write_sweep_csv(file, rows, comments);
        if (!file) {
            err << "error: failed writing '" << args.out << "'\n";
            return kIoError;
        }
    }

    std::size_t unsolved = 0;
    for (const auto& row : rows)
        unsolved += !row.solution;
    // The summary goes to stderr when stdout carries the table.
    std::ostream& summary = args.out.empty() ? err : out;
    summary << rows.size() << " rows, " << equilibrium::count_violations(rows) << " violations, "
            << unsolved << " supercritical\n";
    return kOk;
}

int cmd_simulate(const SimulateConfig& config, std::ostream& out, std::ostream& err)
{
    kinetics::BoundaryCondition bc;
    std::optional<kinetics::DistributionField> initial;
    try {
        bc = config.boundary_condition();
        initial = config.initial_field();
    } catch (const SupercriticalDensity& e) {
        err << "error: " << e.what() << '\n';
        return kSupercritical;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    kinetics::RunOptions options;
    options.dt = config.dt;
    options.t_end = config.t_end;
    options.output_interval = config.output_interval;
    options.tolerance = config.tolerance;

    std::optional<kinetics::RunResult> result;
    try {
        result = kinetics::run(*initial, bc, options);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kSolverError;
    }

    auto comments = config.describe();
    comments.push_back("dt_used = " + g17(result->dt));
    comments.push_back("reference_C = " + g17(result->reference.C));
    comments.push_back("reference_level = " + g17(result->reference_level));
    if (result->failure)
        comments.push_back("failure = " + *result->failure);

    std::ofstream file;
    if (!open_output(config.diagnostics_path, file, err))
        return kIoError;
    kinetics::write_diagnostics_csv(file, result->records, comments);
    file.close();
    if (!file) {
        err << "error: failed writing '" << config.diagnostics_path << "'\n";
        return kIoError;
    }
    if (!config.field_path.empty()) {
        std::ofstream field;
        if (!open_output(config.field_path, field, err))
            return kIoError;
        kinetics::write_field_csv(field, result->final_state);
        if (!field) {
            err << "error: failed writing '" << config.field_path << "'\n";
            return kIoError;
        }
    }

    const auto& last = result->records.back();
    const auto verdict = kinetics::classify(result->records);
    out << "steps = " << result->steps << ", dt = " << g10(result->dt) << ", t = " << g10(last.t)
        << '\n'
        << "final Gtilde = " << g17(last.lyapunov) << " (initial "
        << g17(result->records.front().lyapunov) << ")\n"
        << "monotonicity violations = " << result->violations.size() << '\n'
        << "mass_error = " << g10(last.mass_error) << '\n'
        << "classification: "
        << (verdict.conservative ? "conservative" : verdict.dissipative ? "dissipative" : "neither")
        << '\n';
    if (result->failure) {
        err << "error: " << *result->failure << " (partial diagnostics written)\n";
        return kSolverError;
    }
    return kOk;
}

int cmd_verify(bool quick, bool tamper_polylog, std::ostream& out, std::ostream&)
{
    acceptance::Options options;
    options.quick = quick;
    if (tamper_polylog)
        options.polylog = [](double s, double z) { return 1.01 * specfun::polylog(s, z); };
    const auto results = acceptance::run_all(options);
    acceptance::print_report(out, results);
    if (acceptance::all_passed(results))
        return kOk;
    for (const auto& r : results)
        if (!r.passed)
            out << "failed: criterion " << r.id << " (" << r.name << ")\n";
    return kVerifyFailed;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Quantum Fokker-Planck equilibria and kinetic simulations"};
    app.require_subcommand(1);

    equilibrium::ModelParams params{0.0, 3, 1.0, 1.0};
    auto add_model = [&params](CLI::App* cmd, bool with_k) {
        if (with_k)
            cmd->add_option("--k", params.k, "quantum parameter (k<0 fermions, k>0 bosons)")
                ->required();
        cmd->add_option("--n", params.n, "velocity dimension")->capture_default_str();
        cmd->add_option("--vol", params.volume, "volume of the spatial domain")
            ->capture_default_str();
        cmd->add_option("--rho", params.rho, "total density")->capture_default_str();
    };

    EquilibriumArgs eq_args;
    std::string eq_out;
    auto* eq = app.add_subcommand("equilibrium", "solve for the global Maxwellian of one model");
    add_model(eq, true);
    eq->add_option("--out", eq_out, "also write a one-row CSV");

    SweepArgs sw_args;
    auto* sw = app.add_subcommand("sweep", "tabulate equilibria and orderings over a k range");
    add_model(sw, false);
    sw->add_option("--k-min", sw_args.k_min)->capture_default_str();
    sw->add_option("--k-max", sw_args.k_max)->capture_default_str();
    sw->add_option("--steps", sw_args.steps)->capture_default_str();
    sw->add_option("--small-k", sw_args.small_k, "|k| bound for the small-k orderings")
        ->capture_default_str();
    sw->add_option("--out", sw_args.out, "CSV path (default stdout)");

    std::string config_path, sim_out, field_out;
    auto* sim = app.add_subcommand("simulate", "run the kinetic solver from a config file");
    sim->add_option("config", config_path, "INI configuration")->required();
    sim->add_option("--out", sim_out, "diagnostics CSV path (overrides the config)");
    sim->add_option("--field-out", field_out, "final field CSV path (overrides the config)");

    bool quick = false, tamper = false;
    auto* ver = app.add_subcommand("verify", "run the acceptance suite");
    ver->add_flag("--quick", quick, "skip the long simulation");
    ver->add_flag("--tamper-polylog", tamper)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        if (*eq) {
            eq_args.params = params;
            if (!eq_out.empty())
                eq_args.out = eq_out;
            return cmd_equilibrium(eq_args, out, err);
        }
        if (*sw) {
            sw_args.base = params;
            return cmd_sweep(sw_args, out, err);
        }
        if (*sim) {
            SimulateConfig config;
            try {
                config = load_config(config_path);
            } catch (const std::ios_base::failure& e) {
                err << "error: " << e.what() << '\n';
                return kIoError;
            } catch (const std::exception& e) {
                err << "error: " << e.what() << '\n';
                return kUsageError;
            }
            if (!sim_out.empty())
                config.diagnostics_path = sim_out;
            if (!field_out.empty())
                config.field_path = field_out;
            return cmd_simulate(config, out, err);
        }
        if (*ver)
            return cmd_verify(quick, tamper, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kSolverError;
    }
    return kUsageError;
}

} // namespace qfp::cli
