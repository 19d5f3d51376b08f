#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace scmap {

/// Uniform radial grid of strictly positive points. The reduced radial
/// equation carries a 1/r^2 term, so r = 0 is never a grid point; Dirichlet
/// walls sit one spacing outside both ends.
struct RadialGrid {
    double r_min = 0.0;
    double r_max = 0.0;
    std::size_t n_points = 0;
    double spacing = 0.0;

    RadialGrid() = default;

    RadialGrid(double r_min_, double r_max_, std::size_t n_points_)
        : r_min(r_min_), r_max(r_max_), n_points(n_points_)
    {
        if (!(r_min > 0.0) || !(r_max > r_min))
            throw std::invalid_argument("RadialGrid: need 0 < r_min < r_max");
        if (n_points < 16)
            throw std::invalid_argument("RadialGrid: need at least 16 points");
        spacing = (r_max - r_min) / static_cast<double>(n_points - 1);
    }

    double point(std::size_t i) const
    {
        return r_min + static_cast<double>(i) * spacing;
    }

    std::vector<double> points() const
    {
        std::vector<double> r(n_points);
        for (std::size_t i = 0; i < n_points; ++i)
            r[i] = point(i);
        return r;
    }
};

/// Interior grid of the box [0, R]: points i*h for i = 1..n with h = R/(n+1),
/// so the Dirichlet boundaries fall exactly on 0 and R.
inline RadialGrid interior_grid(double box_radius, std::size_t n)
{
    if (!(box_radius > 0.0))
        throw std::invalid_argument("interior_grid: box radius must be positive");
    const double h = box_radius / static_cast<double>(n + 1);
    return RadialGrid(h, static_cast<double>(n) * h, n);
}

} // namespace scmap
