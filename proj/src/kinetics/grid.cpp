#include "qfp/kinetics/grid.hpp"

#include "qfp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qfp::kinetics {

PhaseGrid::PhaseGrid(std::size_t x_nodes, double length, std::size_t v_nodes, double v_max)
    : x_nodes_(x_nodes), v_nodes_(v_nodes), length_(length), v_max_(v_max)
{
    if (x_nodes < 1)
        throw PreconditionError("grid needs at least one x node");
    if (v_nodes < 2 || v_nodes % 2 != 0)
        throw PreconditionError("velocity node count must be even and >= 2, got " +
                                std::to_string(v_nodes));
    if (!(length > 0.0) || !std::isfinite(length))
        throw PreconditionError("domain length must be positive");
    if (!std::isfinite(v_max) || !(std::exp(-0.5 * v_max * v_max) < 1e-12))
        throw PreconditionError("V_max must satisfy exp(-V_max^2/2) < 1e-12, got " +
                                std::to_string(v_max));

    velocities_.resize(v_nodes);
    const double step = dv();
    const std::size_t half = v_nodes / 2;
    for (std::size_t j = 0; j < half; ++j)
        velocities_[j] = -v_max + (static_cast<double>(j) + 0.5) * step;
    for (std::size_t j = half; j < v_nodes; ++j)
        velocities_[j] = -velocities_[v_nodes - 1 - j];
}

DistributionField::DistributionField(PhaseGrid grid, double k)
    : grid_(std::move(grid)), k_(k), values_(grid_.size(), 0.0)
{
}

DistributionField::DistributionField(PhaseGrid grid, double k, std::vector<double> values)
    : grid_(std::move(grid)), k_(k), values_(std::move(values))
{
    if (values_.size() != grid_.size())
        throw PreconditionError("field size does not match the grid");
}

void DistributionField::swap_values(std::vector<double>& other)
{
    if (other.size() != values_.size())
        throw PreconditionError("swap_values: size mismatch");
    values_.swap(other);
}

double DistributionField::max_value() const
{
    return values_.empty() ? 0.0 : *std::max_element(values_.begin(), values_.end());
}

void DistributionField::check_admissible(double tolerance) const
{
    for (std::size_t idx = 0; idx < values_.size(); ++idx) {
        const double f = values_[idx];
        const auto where = [&] {
            return " at (i, j) = (" + std::to_string(idx / grid_.v_nodes()) + ", " +
                   std::to_string(idx % grid_.v_nodes()) + ")";
        };
        if (!std::isfinite(f))
            throw AdmissibilityError("non-finite distribution value" + where());
        if (f < -tolerance)
            throw AdmissibilityError("negative distribution value " + std::to_string(f) + where());
        if (1.0 + k_ * f < -tolerance)
            throw AdmissibilityError("1 + k f < 0 (f = " + std::to_string(f) + ")" + where());
    }
}

void BoundaryCondition::validate(const PhaseGrid& grid) const
{
    if (kind != BoundaryKind::inflow)
        return;
    if (inflow_left.size() != grid.v_nodes() || inflow_right.size() != grid.v_nodes())
        throw PreconditionError("inflow profiles need one value per velocity node");
    for (const auto* profile : {&inflow_left, &inflow_right})
        for (double value : *profile)
            if (!std::isfinite(value) || value < 0.0)
                throw PreconditionError("inflow data must be finite and non-negative");
}

const char* to_string(BoundaryKind kind)
{
    switch (kind) {
    case BoundaryKind::bounce_back: return "bounce_back";
    case BoundaryKind::periodic: return "periodic";
    case BoundaryKind::inflow: return "inflow";
    }
    return "unknown";
}

BoundaryKind boundary_kind_from_string(const std::string& text)
{
    if (text == "bounce_back" || text == "bounce-back" || text == "specular")
        return BoundaryKind::bounce_back;
    if (text == "periodic")
        return BoundaryKind::periodic;
    if (text == "inflow")
        return BoundaryKind::inflow;
    throw PreconditionError("unknown boundary condition '" + text + "'");
}

} // namespace qfp::kinetics
