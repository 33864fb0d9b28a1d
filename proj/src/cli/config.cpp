#include "qfp/cli.hpp"

#include "qfp/errors.hpp"
#include "qfp/kinetics/initial.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <set>

namespace qfp::cli {

namespace pt = boost::property_tree;

namespace {

const std::set<std::string> kKnownKeys{
    "grid.x_nodes",          "grid.length",          "grid.v_nodes",
    "grid.v_max",            "model.k",              "model.rho",
    "time.dt",               "time.t_end",           "time.output_interval",
    "time.tolerance",        "boundary.kind",        "boundary.left_density",
    "boundary.left_temperature", "boundary.right_density", "boundary.right_temperature",
    "initial.type",          "initial.amplitude",    "initial.mode",
    "initial.shift",         "initial.width",        "output.diagnostics",
    "output.field",
};

template <class T>
void read(const pt::ptree& tree, const std::string& key, T& target)
{
    const auto node = tree.get_child_optional(key);
    if (!node)
        return;
    const auto value = node->get_value_optional<T>();
    if (!value)
        throw PreconditionError("config: bad value for '" + key + "'");
    target = *value;
}

void read_count(const pt::ptree& tree, const std::string& key, std::size_t& target)
{
    long long value = static_cast<long long>(target);
    read(tree, key, value);
    if (value < 1)
        throw PreconditionError("config: '" + key + "' must be a positive count");
    target = static_cast<std::size_t>(value);
}

std::string g17(double x)
{
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.17g", x);
    return buffer;
}

const char* initial_name(InitialKind kind)
{
    switch (kind) {
    case InitialKind::maxwellian: return "maxwellian";
    case InitialKind::modulated_maxwellian: return "modulated_maxwellian";
    case InitialKind::shifted_gaussian: return "shifted_gaussian";
    }
    return "unknown";
}

std::vector<double> maxwellian_profile(const kinetics::PhaseGrid& grid, double density,
                                       double temperature)
{
    std::vector<double> profile(grid.v_nodes());
    for (std::size_t j = 0; j < grid.v_nodes(); ++j)
        profile[j] = density / std::sqrt(2.0 * std::numbers::pi * temperature) *
                     std::exp(-0.5 * grid.v(j) * grid.v(j) / temperature);
    return profile;
}

} // namespace

SimulateConfig parse_config(std::istream& in)
{
    pt::ptree tree;
    try {
        pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error& e) {
        throw PreconditionError(std::string("config: ") + e.what());
    }
    for (const auto& [section, body] : tree) {
        if (body.empty())
            throw PreconditionError("config: key '" + section + "' outside a section");
        for (const auto& entry : body)
            if (!kKnownKeys.contains(section + "." + entry.first))
                throw PreconditionError("config: unknown key '" + section + "." + entry.first +
                                        "'");
    }

    SimulateConfig c;
    read_count(tree, "grid.x_nodes", c.x_nodes);
    read(tree, "grid.length", c.length);
    read_count(tree, "grid.v_nodes", c.v_nodes);
    read(tree, "grid.v_max", c.v_max);
    read(tree, "model.k", c.k);
    read(tree, "model.rho", c.rho);
    read(tree, "time.dt", c.dt);
    read(tree, "time.t_end", c.t_end);
    read(tree, "time.output_interval", c.output_interval);
    read(tree, "time.tolerance", c.tolerance);
    if (auto kind = tree.get_optional<std::string>("boundary.kind"))
        c.boundary = kinetics::boundary_kind_from_string(*kind);
    read(tree, "boundary.left_density", c.inflow_left_density);
    read(tree, "boundary.left_temperature", c.inflow_left_temperature);
    read(tree, "boundary.right_density", c.inflow_right_density);
    read(tree, "boundary.right_temperature", c.inflow_right_temperature);
    if (auto type = tree.get_optional<std::string>("initial.type")) {
        if (*type == "maxwellian")
            c.initial = InitialKind::maxwellian;
        else if (*type == "modulated_maxwellian")
            c.initial = InitialKind::modulated_maxwellian;
        else if (*type == "shifted_gaussian")
            c.initial = InitialKind::shifted_gaussian;
        else
            throw PreconditionError("config: unknown initial.type '" + *type + "'");
    }
    read(tree, "initial.amplitude", c.amplitude);
    read(tree, "initial.mode", c.mode);
    read(tree, "initial.shift", c.shift);
    read(tree, "initial.width", c.width);
    read(tree, "output.diagnostics", c.diagnostics_path);
    read(tree, "output.field", c.field_path);

    if (!(c.t_end >= 0.0) || !(c.output_interval > 0.0) || !(c.dt >= 0.0) || !(c.rho > 0.0))
        throw PreconditionError("config: time controls and rho must be positive");
    if (!(c.inflow_left_temperature > 0.0) || !(c.inflow_right_temperature > 0.0) ||
        c.inflow_left_density < 0.0 || c.inflow_right_density < 0.0)
        throw PreconditionError("config: inflow density must be >= 0 and temperature > 0");
    return c;
}

SimulateConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::ios_base::failure("cannot open config file '" + path + "'");
    return parse_config(in);
}

kinetics::PhaseGrid SimulateConfig::grid() const
{
    return {x_nodes, length, v_nodes, v_max};
}

kinetics::BoundaryCondition SimulateConfig::boundary_condition() const
{
    switch (boundary) {
    case kinetics::BoundaryKind::bounce_back: return kinetics::BoundaryCondition::bounce_back();
    case kinetics::BoundaryKind::periodic: return kinetics::BoundaryCondition::periodic();
    case kinetics::BoundaryKind::inflow: {
        const auto g = grid();
        return kinetics::BoundaryCondition::inflow(
            maxwellian_profile(g, inflow_left_density, inflow_left_temperature),
            maxwellian_profile(g, inflow_right_density, inflow_right_temperature));
    }
    }
    throw PreconditionError("unknown boundary kind");
}

kinetics::DistributionField SimulateConfig::initial_field() const
{
    const auto g = grid();
    switch (initial) {
    case InitialKind::maxwellian: return kinetics::maxwellian_initial(g, k, rho);
    case InitialKind::modulated_maxwellian:
        return kinetics::modulated_maxwellian(g, k, rho, amplitude, mode);
    case InitialKind::shifted_gaussian:
        return kinetics::shifted_gaussian(g, k, rho, shift, width, amplitude, mode);
    }
    throw PreconditionError("unknown initial condition");
}

std::vector<std::string> SimulateConfig::describe() const
{
    std::vector<std::string> lines{
        "x_nodes = " + std::to_string(x_nodes),
        "length = " + g17(length),
        "v_nodes = " + std::to_string(v_nodes),
        "v_max = " + g17(v_max),
        "k = " + g17(k),
        "rho = " + g17(rho),
        "dt = " + (dt > 0.0 ? g17(dt) : std::string("cfl")),
        "t_end = " + g17(t_end),
        "output_interval = " + g17(output_interval),
        "tolerance = " + g17(tolerance),
        std::string("boundary = ") + kinetics::to_string(boundary),
        std::string("initial = ") + initial_name(initial),
        "amplitude = " + g17(amplitude),
        "mode = " + std::to_string(mode),
    };
    if (initial == InitialKind::shifted_gaussian) {
        lines.push_back("shift = " + g17(shift));
        lines.push_back("width = " + g17(width));
    }
    if (boundary == kinetics::BoundaryKind::inflow) {
        lines.push_back("left_density = " + g17(inflow_left_density));
        lines.push_back("left_temperature = " + g17(inflow_left_temperature));
        lines.push_back("right_density = " + g17(inflow_right_density));
        lines.push_back("right_temperature = " + g17(inflow_right_temperature));
    }
    return lines;
}

} // namespace qfp::cli
