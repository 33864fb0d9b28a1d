#include "qfp/cli.hpp"

#include "qfp/errors.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>

namespace qfp::cli {

namespace {

constexpr const char* kSweepHeader =
    "k,n,volume,rho,C,kC,E,S,F,C0,Ec,Sc,Fc,residual,"
    "energy_order,entropy_order,free_energy_order,lemma_bounds,error";
constexpr std::size_t kSweepColumns = 19;

std::string g17(double x)
{
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.17g", x);
    return buffer;
}

std::string quote(const std::string& text)
{
    if (text.empty())
        return text;
    std::string out = "\"";
    for (char ch : text) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + '"';
}

std::vector<std::string> split_csv(const std::string& line)
{
    std::vector<std::string> cells(1);
    bool quoted = false;
    for (std::size_t p = 0; p < line.size(); ++p) {
        const char ch = line[p];
        if (quoted) {
            if (ch == '"' && p + 1 < line.size() && line[p + 1] == '"') {
                cells.back() += '"';
                ++p;
            } else if (ch == '"') {
                quoted = false;
            } else {
                cells.back() += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            cells.emplace_back();
        } else {
            cells.back() += ch;
        }
    }
    if (quoted)
        throw PreconditionError("sweep CSV: unterminated quote");
    return cells;
}

double parse(const std::string& cell)
{
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(cell, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != cell.size())
        throw PreconditionError("sweep CSV: malformed number '" + cell + "'");
    return value;
}

} // namespace

void write_sweep_csv(std::ostream& out, std::span<const equilibrium::SweepRow> rows,
                     std::span<const std::string> comments)
{
    for (const auto& line : comments)
        out << "# " << line << '\n';
    out << kSweepHeader << '\n';
    for (const auto& row : rows) {
        out << g17(row.k) << ',';
        if (row.solution) {
            const auto& s = *row.solution;
            out << s.params.n << ',' << g17(s.params.volume) << ',' << g17(s.params.rho) << ','
                << g17(s.C) << ',' << g17(s.kC) << ',' << g17(s.energy) << ','
                << g17(s.entropy) << ',' << g17(s.free_energy) << ',' << g17(s.classical.C0)
                << ',' << g17(s.classical.energy) << ',' << g17(s.classical.entropy) << ','
                << g17(s.classical.free_energy) << ',' << g17(s.residual) << ',';
        } else {
            out << "nan,nan,nan,nan,nan,nan,nan,nan,nan,nan,nan,nan,nan,";
        }
        out << to_string(row.energy_order) << ',' << to_string(row.entropy_order) << ','
            << to_string(row.free_energy_order) << ',' << to_string(row.lemma_bounds) << ','
            << quote(row.error) << '\n';
    }
}

std::vector<equilibrium::SweepRow> read_sweep_csv(std::istream& in)
{
    std::vector<equilibrium::SweepRow> rows;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        if (!header_seen) {
            if (line != kSweepHeader)
                throw PreconditionError("sweep CSV: unexpected header '" + line + "'");
            header_seen = true;
            continue;
        }
        const auto cells = split_csv(line);
        if (cells.size() != kSweepColumns)
            throw PreconditionError("sweep CSV: row has " + std::to_string(cells.size()) +
                                    " columns, expected " + std::to_string(kSweepColumns));
        equilibrium::SweepRow row{};
        row.k = parse(cells[0]);
        if (cells[1] != "nan") {
            equilibrium::EquilibriumSolution s{};
            s.params = {row.k, static_cast<int>(parse(cells[1])), parse(cells[2]),
                        parse(cells[3])};
            s.C = parse(cells[4]);
            s.kC = parse(cells[5]);
            s.energy = parse(cells[6]);
            s.entropy = parse(cells[7]);
            s.free_energy = parse(cells[8]);
            s.classical = {parse(cells[9]), parse(cells[10]), parse(cells[11]), parse(cells[12])};
            s.residual = parse(cells[13]);
            row.solution = s;
        }
        try {
            row.energy_order = equilibrium::verdict_from_string(cells[14]);
            row.entropy_order = equilibrium::verdict_from_string(cells[15]);
            row.free_energy_order = equilibrium::verdict_from_string(cells[16]);
            row.lemma_bounds = equilibrium::verdict_from_string(cells[17]);
        } catch (const std::invalid_argument& e) {
            throw PreconditionError(std::string("sweep CSV: ") + e.what());
        }
        row.error = cells[18];
        rows.push_back(std::move(row));
    }
    if (!header_seen)
        throw PreconditionError("sweep CSV: missing header");
    return rows;
}

} // namespace qfp::cli
