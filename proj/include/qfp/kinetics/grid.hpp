#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace qfp::kinetics {

/// Cell-centred tensor grid over x in [0, L] and v in [-V_max, V_max].
/// The velocity nodes are exactly antisymmetric: v[j] == -v[v_nodes - 1 - j].
class PhaseGrid {
public:
    /// Throws PreconditionError unless x_nodes >= 1, v_nodes is even and >= 2,
    /// length > 0 and exp(-v_max^2 / 2) < 1e-12.
    PhaseGrid(std::size_t x_nodes, double length, std::size_t v_nodes, double v_max);

    std::size_t x_nodes() const noexcept { return x_nodes_; }
    std::size_t v_nodes() const noexcept { return v_nodes_; }
    std::size_t size() const noexcept { return x_nodes_ * v_nodes_; }
    double length() const noexcept { return length_; }
    double v_max() const noexcept { return v_max_; }
    double dx() const noexcept { return length_ / static_cast<double>(x_nodes_); }
    double dv() const noexcept { return 2.0 * v_max_ / static_cast<double>(v_nodes_); }

    double x(std::size_t i) const noexcept { return (static_cast<double>(i) + 0.5) * dx(); }
    double v(std::size_t j) const noexcept { return velocities_[j]; }
    std::span<const double> velocities() const noexcept { return velocities_; }
    /// Index of -v[j].
    std::size_t mirror(std::size_t j) const noexcept { return v_nodes_ - 1 - j; }

private:
    std::size_t x_nodes_;
    std::size_t v_nodes_;
    double length_;
    double v_max_;
    std::vector<double> velocities_;
};

/// Samples f(x_i, v_j) stored row-major by x: values[i * v_nodes + j].
class DistributionField {
public:
    DistributionField(PhaseGrid grid, double k);
    DistributionField(PhaseGrid grid, double k, std::vector<double> values);

    const PhaseGrid& grid() const noexcept { return grid_; }
    double k() const noexcept { return k_; }

    double& operator()(std::size_t i, std::size_t j) noexcept
    {
        return values_[i * grid_.v_nodes() + j];
    }
    double operator()(std::size_t i, std::size_t j) const noexcept
    {
        return values_[i * grid_.v_nodes() + j];
    }
    std::span<double> row(std::size_t i) noexcept
    {
        return {values_.data() + i * grid_.v_nodes(), grid_.v_nodes()};
    }
    std::span<const double> row(std::size_t i) const noexcept
    {
        return {values_.data() + i * grid_.v_nodes(), grid_.v_nodes()};
    }
    std::span<double> values() noexcept { return values_; }
    std::span<const double> values() const noexcept { return values_; }

    /// Exchanges the sample storage with `other`, which must have size() entries.
    void swap_values(std::vector<double>& other);

    double max_value() const;
    /// Throws AdmissibilityError unless every sample is finite, f >= 0 and
    /// 1 + k f >= 0 (each up to `tolerance`).
    void check_admissible(double tolerance = 1e-14) const;

private:
    PhaseGrid grid_;
    double k_;
    std::vector<double> values_;
};

enum class BoundaryKind {
    /// f(t, y, v) = f(t, y, -v) at both walls.
    bounce_back,
    periodic,
    /// Prescribed incoming data: v > 0 at x = 0, v < 0 at x = L.
    inflow,
};

struct BoundaryCondition {
    BoundaryKind kind = BoundaryKind::bounce_back;
    /// Only read for `inflow`; one value per velocity node.
    std::vector<double> inflow_left;
    std::vector<double> inflow_right;

    static BoundaryCondition bounce_back() { return {BoundaryKind::bounce_back, {}, {}}; }
    static BoundaryCondition periodic() { return {BoundaryKind::periodic, {}, {}}; }
    static BoundaryCondition inflow(std::vector<double> left, std::vector<double> right)
    {
        return {BoundaryKind::inflow, std::move(left), std::move(right)};
    }

    void validate(const PhaseGrid& grid) const;
};

const char* to_string(BoundaryKind kind);
BoundaryKind boundary_kind_from_string(const std::string& text);

} // namespace qfp::kinetics
