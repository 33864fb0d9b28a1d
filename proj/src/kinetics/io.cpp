#include "qfp/kinetics/solver.hpp"

#include "qfp/errors.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace qfp::kinetics {

namespace {

std::string format(double value)
{
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

double parse(const std::string& cell)
{
    std::size_t used = 0;
    const double value = std::stod(cell, &used);
    if (used != cell.size())
        throw PreconditionError("malformed number '" + cell + "' in diagnostics CSV");
    return value;
}

} // namespace

void write_diagnostics_csv(std::ostream& out, std::span<const DiagnosticRecord> records,
                           std::span<const std::string> comments)
{
    for (const auto& line : comments)
        out << "# " << line << '\n';
    out << kDiagnosticsHeader << '\n';
    for (const auto& r : records) {
        out << format(r.t) << ',' << format(r.rho) << ',' << format(r.energy) << ','
            << format(r.entropy) << ',' << format(r.free_energy) << ','
            << (r.distance ? format(*r.distance) : std::string("nan")) << ','
            << format(r.lyapunov) << ',' << format(r.flux_A) << ',' << format(r.flux_B) << ','
            << format(r.flux_U) << ',' << format(r.mass_error) << '\n';
    }
}

std::vector<DiagnosticRecord> read_diagnostics_csv(std::istream& in)
{
    std::vector<DiagnosticRecord> records;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        if (!header_seen) {
            if (line != kDiagnosticsHeader)
                throw PreconditionError("unexpected diagnostics header '" + line + "'");
            header_seen = true;
            continue;
        }
        std::vector<std::string> cells;
        std::stringstream row(line);
        std::string cell;
        while (std::getline(row, cell, ','))
            cells.push_back(cell);
        if (cells.size() != 11)
            throw PreconditionError("diagnostics row has " + std::to_string(cells.size()) +
                                    " columns, expected 11");
        DiagnosticRecord r;
        r.t = parse(cells[0]);
        r.rho = parse(cells[1]);
        r.energy = parse(cells[2]);
        r.entropy = parse(cells[3]);
        r.free_energy = parse(cells[4]);
        const double g = parse(cells[5]);
        if (!std::isnan(g))
            r.distance = g;
        r.lyapunov = parse(cells[6]);
        r.flux_A = parse(cells[7]);
        r.flux_B = parse(cells[8]);
        r.flux_U = parse(cells[9]);
        r.mass_error = parse(cells[10]);
        records.push_back(std::move(r));
    }
    if (!header_seen)
        throw PreconditionError("diagnostics CSV has no header");
    return records;
}

void write_field_csv(std::ostream& out, const DistributionField& f)
{
    for (std::size_t i = 0; i < f.grid().x_nodes(); ++i) {
        const auto row = f.row(i);
        for (std::size_t j = 0; j < row.size(); ++j)
            out << (j ? "," : "") << format(row[j]);
        out << '\n';
    }
}

} // namespace qfp::kinetics
