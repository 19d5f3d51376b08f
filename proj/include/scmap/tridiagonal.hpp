#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

namespace scmap {

/// Symmetric tridiagonal matrix stored as its diagonal and (one shorter)
/// off-diagonal.
struct TridiagonalSymmetric {
    std::vector<double> diagonal;
    std::vector<double> off_diagonal;

    TridiagonalSymmetric(std::vector<double> diag, std::vector<double> off)
        : diagonal(std::move(diag)), off_diagonal(std::move(off))
    {
        if (diagonal.empty())
            throw std::invalid_argument("TridiagonalSymmetric: empty diagonal");
        if (off_diagonal.size() + 1 != diagonal.size())
            throw std::invalid_argument("TridiagonalSymmetric: off-diagonal must be one shorter than diagonal");
    }

    std::size_t size() const noexcept
    {
        return diagonal.size();
    }
};

namespace detail {

/// Number of eigenvalues strictly below x, from the sign count of the LDL^T
/// pivots (Sturm sequence). pivmin guards the recurrence against division by
/// a vanishing pivot.
inline int sturm_count_below(const TridiagonalSymmetric& m, double x, double pivmin)
{
    int count = 0;
    double t = m.diagonal[0] - x;
    if (std::abs(t) < pivmin)
        t = -pivmin;
    if (t < 0.0)
        ++count;
    for (std::size_t i = 1; i < m.diagonal.size(); ++i) {
        const double e = m.off_diagonal[i - 1];
        t = m.diagonal[i] - x - e * e / t;
        if (std::abs(t) < pivmin)
            t = -pivmin;
        if (t < 0.0)
            ++count;
    }
    return count;
}

} // namespace detail

/// The k smallest eigenvalues of a symmetric tridiagonal matrix, ascending.
/// Bisection on the Sturm count: robust, deterministic, and O(k n log(1/eps))
/// without forming a full decomposition. Each eigenvalue is resolved to a
/// relative width of a few machine epsilons of the Gershgorin bound.
inline std::vector<double> eigenvalues_lowest(const TridiagonalSymmetric& m, std::size_t k)
{
    const std::size_t n = m.size();
    if (k > n)
        throw std::invalid_argument("eigenvalues_lowest: requested more eigenvalues than the matrix dimension");
    if (k == 0)
        return {};

    // Gershgorin enclosure of the full spectrum.
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    double emax2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double radius = 0.0;
        if (i > 0)
            radius += std::abs(m.off_diagonal[i - 1]);
        if (i + 1 < n)
            radius += std::abs(m.off_diagonal[i]);
        lo = std::min(lo, m.diagonal[i] - radius);
        hi = std::max(hi, m.diagonal[i] + radius);
        if (i + 1 < n)
            emax2 = std::max(emax2, m.off_diagonal[i] * m.off_diagonal[i]);
    }
    const double pivmin = std::numeric_limits<double>::min() * std::max(1.0, emax2);

    std::vector<double> eigenvalues(k);
    if (lo == hi) {
        // All Gershgorin discs collapse to one point: diagonal matrix with
        // equal entries.
        std::fill(eigenvalues.begin(), eigenvalues.end(), lo);
        return eigenvalues;
    }

    // Resolve each eigenvalue relative to its own magnitude, with an absolute
    // floor far below anything the spectrum scale makes meaningful. A width
    // tolerance relative to the Gershgorin span would cap small eigenvalues of
    // stiff matrices (fine grids, steep confining tails) at useless accuracy.
    const double eps = std::numeric_limits<double>::epsilon();
    const double width_floor = 1e-18 * (hi - lo);

    double a_floor = lo;
    for (std::size_t j = 0; j < k; ++j) {
        double a = a_floor;
        double b = hi;
        // Invariant: count(a) <= j < count(b).
        while (b - a > 4.0 * eps * std::max(std::abs(a), std::abs(b)) + width_floor) {
            const double mid = 0.5 * (a + b);
            if (mid <= a || mid >= b)
                break; // interval no longer representable
            if (detail::sturm_count_below(m, mid, pivmin) <= static_cast<int>(j))
                a = mid;
            else
                b = mid;
        }
        eigenvalues[j] = 0.5 * (a + b);
        a_floor = a; // later eigenvalues cannot lie below this bracket
    }
    return eigenvalues;
}

} // namespace scmap
