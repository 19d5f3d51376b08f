#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "scmap/convergence.hpp"

namespace scmap {

namespace detail {

// 15-point Gauss-Legendre rule on [-1, 1]; positive nodes only, the rule is
// symmetric. Exact through polynomial degree 29.
inline constexpr std::array<double, 8> gl15_nodes = {
    0.0000000000000000, 0.2011940939974345, 0.3941513470775634, 0.5709721726085388,
    0.7244177313601701, 0.8482065834104272, 0.9372733924007060, 0.9879925180204854,
};
inline constexpr std::array<double, 8> gl15_weights = {
    0.2025782419255613, 0.1984314853271116, 0.1861610000155622, 0.1662692058169939,
    0.1395706779261543, 0.1071592204671719, 0.0703660474881081, 0.0307532419961173,
};

template <class F>
double gl15_panel(F&& f, double a, double b, double& peak)
{
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fm = f(mid);
    peak = std::max(peak, std::abs(fm));
    double sum = gl15_weights[0] * fm;
    for (std::size_t i = 1; i < gl15_nodes.size(); ++i) {
        const double dx = half * gl15_nodes[i];
        const double fl = f(mid - dx);
        const double fr = f(mid + dx);
        peak = std::max({peak, std::abs(fl), std::abs(fr)});
        sum += gl15_weights[i] * (fl + fr);
    }
    return half * sum;
}

/// Composite 15-point Gauss on [a, b], doubling the panel count until two
/// successive composites agree to seg_tol (absolute) or to a tight relative
/// tolerance, whichever is looser for the segment at hand.
template <class F>
double gl15_adaptive_segment(F&& f, double a, double b, double seg_tol, double& peak)
{
    double previous = gl15_panel(f, a, b, peak);
    for (int panels = 2; panels <= 4096; panels *= 2) {
        double current = 0.0;
        const double h = (b - a) / panels;
        for (int p = 0; p < panels; ++p)
            current += gl15_panel(f, a + p * h, a + (p + 1) * h, peak);
        if (std::abs(current - previous) <= seg_tol + 1e-13 * std::abs(current))
            return current;
        previous = current;
    }
    throw convergence_error("quadrature: segment refinement did not converge", previous, 12);
}

} // namespace detail

/// Integral of f over (0, inf) for integrands decaying at least exponentially
/// beyond a few decay scales. Segments [0,s], [s,2s], [2s,4s], ... are each
/// integrated by an adaptive composite Gauss rule; the tail is truncated once
/// the integrand has fallen below 1e-18 of its peak and the last segment no
/// longer moves the total. Absolute accuracy target: 1e-10*|result| + 1e-14.
template <class F>
double integrate_semi_infinite(F&& f, double decay_scale)
{
    if (!(decay_scale > 0.0) || !std::isfinite(decay_scale))
        throw std::invalid_argument("integrate_semi_infinite: decay scale must be positive and finite");

    constexpr double rel_tol = 1e-11;
    constexpr double abs_tol = 1e-15;
    constexpr int max_segments = 64;

    double total = 0.0;
    double peak = 0.0;
    double a = 0.0;
    double b = 4.0 * decay_scale;
    for (int seg = 0; seg < max_segments; ++seg) {
        double seg_peak = 0.0;
        const double seg_tol = rel_tol * std::max(std::abs(total), 1e-3 * peak * (b - a)) + abs_tol;
        const double part = detail::gl15_adaptive_segment(f, a, b, seg_tol, seg_peak);
        total += part;
        peak = std::max(peak, seg_peak);

        const bool tail_dead = seg_peak < 1e-18 * peak;
        const bool tail_settled = std::abs(part) <= 0.25 * (rel_tol * std::abs(total) + abs_tol);
        if (seg > 0 && tail_dead && tail_settled)
            return total;

        a = b;
        b = 2.0 * b;
    }
    throw convergence_error("integrate_semi_infinite: tail did not settle within the segment budget", total,
                            max_segments);
}

} // namespace scmap
