#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "scmap/convergence.hpp"

namespace scmap {

struct RootResult2d {
    double x = 0.0;
    double y = 0.0;
    int iterations = 0;
};

namespace detail {

template <class F>
std::array<double, 2> eval2(F&& f, const std::array<double, 2>& p)
{
    return f(p[0], p[1]);
}

inline double norm_inf(const std::array<double, 2>& v)
{
    return std::max(std::abs(v[0]), std::abs(v[1]));
}

inline double norm_2(const std::array<double, 2>& v)
{
    return std::hypot(v[0], v[1]);
}

/// Bisect residual component `comp` along coordinate axis `axis`, expanding
/// around p until a sign change is bracketed. Returns false if no bracket is
/// found.
template <class F>
bool coordinate_bisection(F&& f, std::array<double, 2>& p, int axis, int comp, double tol)
{
    const double f0 = eval2(f, p)[comp];
    if (std::abs(f0) < tol)
        return true;
    const double base = std::max(1.0, std::abs(p[axis]));
    for (int sign = -1; sign <= 1; sign += 2) {
        double step = 1e-3 * base * sign;
        for (int expand = 0; expand < 44; ++expand) {
            std::array<double, 2> q = p;
            q[axis] += step;
            const double f1 = eval2(f, q)[comp];
            if (std::isfinite(f1) && f0 * f1 < 0.0) {
                double lo = p[axis];
                double hi = q[axis];
                double flo = f0;
                for (int it = 0; it < 120; ++it) {
                    const double mid = 0.5 * (lo + hi);
                    std::array<double, 2> m = p;
                    m[axis] = mid;
                    const double fm = eval2(f, m)[comp];
                    if (std::abs(fm) < tol || hi - lo < 1e-15 * std::max(1.0, std::abs(mid))) {
                        p[axis] = mid;
                        return true;
                    }
                    if (flo * fm < 0.0)
                        hi = mid;
                    else {
                        lo = mid;
                        flo = fm;
                    }
                }
                p[axis] = 0.5 * (lo + hi);
                return true;
            }
            step *= 2.0;
        }
    }
    return false;
}

} // namespace detail

/// Root of a smooth 2-d residual near the supplied initial guess. Damped
/// Newton with a forward-difference Jacobian (relative step 1e-7); falls back
/// to per-coordinate bisection whenever the Jacobian is singular or the
/// Newton step stalls.
template <class F>
RootResult2d find_root_2d(F&& residual, std::array<double, 2> initial, double tol)
{
    if (!(tol > 0.0))
        throw std::invalid_argument("find_root_2d: tolerance must be positive");

    std::array<double, 2> p = initial;
    std::array<double, 2> fp = detail::eval2(residual, p);
    constexpr int max_iterations = 200;

    for (int it = 1; it <= max_iterations; ++it) {
        if (std::abs(fp[0]) < tol && std::abs(fp[1]) < tol)
            return {p[0], p[1], it - 1};

        // Forward-difference Jacobian.
        double J[2][2];
        bool jacobian_ok = true;
        for (int j = 0; j < 2; ++j) {
            const double h = 1e-7 * std::max(1.0, std::abs(p[j]));
            std::array<double, 2> q = p;
            q[j] += h;
            const auto fq = detail::eval2(residual, q);
            J[0][j] = (fq[0] - fp[0]) / h;
            J[1][j] = (fq[1] - fp[1]) / h;
            if (!std::isfinite(J[0][j]) || !std::isfinite(J[1][j]))
                jacobian_ok = false;
        }

        bool stepped = false;
        if (jacobian_ok) {
            const double det = J[0][0] * J[1][1] - J[0][1] * J[1][0];
            const double scale =
                std::max(std::abs(J[0][0]), std::abs(J[0][1])) * std::max(std::abs(J[1][0]), std::abs(J[1][1]));
            if (std::abs(det) > 1e-13 * std::max(scale, std::numeric_limits<double>::min())) {
                const double dx = -(fp[0] * J[1][1] - fp[1] * J[0][1]) / det;
                const double dy = -(J[0][0] * fp[1] - J[1][0] * fp[0]) / det;
                const double f_norm = detail::norm_2(fp);
                double damping = 1.0;
                for (int halving = 0; halving < 30; ++halving) {
                    const std::array<double, 2> q = {p[0] + damping * dx, p[1] + damping * dy};
                    const auto fq = detail::eval2(residual, q);
                    if (std::isfinite(fq[0]) && std::isfinite(fq[1]) && detail::norm_2(fq) < f_norm) {
                        p = q;
                        fp = fq;
                        stepped = true;
                        break;
                    }
                    damping *= 0.5;
                }
            }
        }

        if (!stepped) {
            // Singular Jacobian or a stalled Newton step: improve one
            // coordinate at a time by bisection.
            bool improved = false;
            for (int axis = 0; axis < 2 && !improved; ++axis) {
                const int comp = std::abs(fp[axis]) >= std::abs(fp[1 - axis]) ? axis : 1 - axis;
                improved = detail::coordinate_bisection(residual, p, axis, comp, tol);
            }
            if (!improved)
                throw root_find_error("find_root_2d: no progress (singular Jacobian, no bracket)", p, it);
            fp = detail::eval2(residual, p);
        }
    }
    throw root_find_error("find_root_2d: iteration cap reached", p, max_iterations);
}

} // namespace scmap
