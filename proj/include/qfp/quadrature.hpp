#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

namespace qfp {

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

// Gauss weights for the odd-indexed Kronrod nodes (1, 3, 5) and the centre.
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class F>
void gauss_kronrod_15(F& f, double a, double b, double& estimate, double& error)
{
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(centre);
    double kronrod = fc * kKronrodWeights[7];
    double gauss = fc * kGaussWeights[3];
    for (std::size_t i = 0; i < 7; ++i) {
        const double dx = half * kKronrodNodes[i];
        const double pair = f(centre - dx) + f(centre + dx);
        kronrod += kKronrodWeights[i] * pair;
        if (i % 2 == 1)
            gauss += kGaussWeights[i / 2] * pair;
    }
    estimate = kronrod * half;
    error = std::abs((kronrod - gauss) * half);
}

struct Segment {
    double a;
    double b;
    double estimate;
    double error;
};

} // namespace detail

/// Globally adaptive 7/15 Gauss-Kronrod integration over [a, b].
/// Starts from `panels` equal pieces and repeatedly bisects the piece with
/// the largest error estimate until the summed estimate is below
/// `rel_tolerance * |I|`, the remaining error is at round-off level, or
/// `max_segments` pieces exist.
template <class F>
double integrate_adaptive(F&& f, double a, double b, double rel_tolerance,
                          int panels = 8, std::size_t max_segments = 4000)
{
    constexpr double kRoundoff = 50.0 * std::numeric_limits<double>::epsilon();
    auto error_less = [](const detail::Segment& x, const detail::Segment& y) {
        return x.error < y.error;
    };
    std::vector<detail::Segment> heap;
    heap.reserve(static_cast<std::size_t>(panels) + 64);

    double total = 0.0;
    double total_error = 0.0;
    double magnitude = 0.0;
    const double width = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        detail::Segment seg{a + p * width, (p + 1 == panels) ? b : a + (p + 1) * width, 0.0, 0.0};
        detail::gauss_kronrod_15(f, seg.a, seg.b, seg.estimate, seg.error);
        total += seg.estimate;
        total_error += seg.error;
        magnitude += std::abs(seg.estimate);
        heap.push_back(seg);
    }
    std::make_heap(heap.begin(), heap.end(), error_less);

    while (heap.size() < max_segments) {
        const double target = std::max(rel_tolerance * std::abs(total), kRoundoff * magnitude);
        if (total_error <= target || heap.front().error <= kRoundoff * magnitude * 1e-3)
            break;
        std::pop_heap(heap.begin(), heap.end(), error_less);
        const detail::Segment worst = heap.back();
        heap.pop_back();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b))
            break;
        detail::Segment left{worst.a, mid, 0.0, 0.0};
        detail::Segment right{mid, worst.b, 0.0, 0.0};
        detail::gauss_kronrod_15(f, left.a, left.b, left.estimate, left.error);
        detail::gauss_kronrod_15(f, right.a, right.b, right.estimate, right.error);
        total += left.estimate + right.estimate - worst.estimate;
        total_error += left.error + right.error - worst.error;
        magnitude += std::abs(left.estimate) + std::abs(right.estimate) - std::abs(worst.estimate);
        heap.push_back(left);
        std::push_heap(heap.begin(), heap.end(), error_less);
        heap.push_back(right);
        std::push_heap(heap.begin(), heap.end(), error_less);
    }
    // Re-sum to shed the drift of the running updates.
    total = 0.0;
    for (const auto& seg : heap)
        total += seg.estimate;
    return total;
}

} // namespace qfp
