#pragma once

#include <cmath>
#include <stdexcept>

#include "scmap/potentials.hpp"

namespace scmap {

/// Quantum numbers of the radial problem in `dimension` spatial dimensions.
/// The reduced equation depends on (N, ell) only through M = N + 2*ell, so
/// spectra are degenerate across pairs with equal M.
struct QuantumNumbers {
    int dimension = 3;
    int ell = 0;
    int n = 0;

    QuantumNumbers(int dimension_, int ell_, int n_ = 0) : dimension(dimension_), ell(ell_), n(n_)
    {
        if (dimension < 2)
            throw std::invalid_argument("QuantumNumbers: dimension must be >= 2");
        if (ell < 0)
            throw std::invalid_argument("QuantumNumbers: ell must be >= 0");
        if (n < 0)
            throw std::invalid_argument("QuantumNumbers: n must be >= 0");
    }

    int m_index() const noexcept
    {
        return dimension + 2 * ell;
    }
};

/// Target space of the quadratic coordinate map: dimension
/// N' = 2N - 2 - 2*lambda with angular momentum L = 2*ell + lambda. For any
/// admissible lambda the combined index obeys M' = N' + 2L = 2(M - 1).
struct MappedSpace {
    int n_prime = 0;
    int L = 0;
    int lambda = 0;
    int m_prime = 0;
};

/// An oscillator problem equivalent to a bound state of the power-series
/// potential: the potential coefficients, the exact ground energy, and the
/// length scale alpha = 1/sqrt(|E0|) of the substitution r = alpha rho^2 / 2.
struct MappedSystem {
    OscillatorPotential oscillator;
    double e_hat_exact = 0.0;
    double alpha = 0.0;
    double source_energy = 0.0;
};

inline MappedSpace map_space(const QuantumNumbers& q, int lambda)
{
    if (lambda != 0 && lambda != 1)
        throw std::invalid_argument("map_space: lambda must be 0 or 1");
    MappedSpace out;
    out.lambda = lambda;
    out.n_prime = 2 * q.dimension - 2 - 2 * lambda;
    out.L = 2 * q.ell + lambda;
    out.m_prime = out.n_prime + 2 * out.L;
    if (out.m_prime != 2 * (q.m_index() - 1))
        throw std::logic_error("map_space: M' != 2(M-1)");
    return out;
}

inline double map_coordinate(double alpha, double rho)
{
    if (!(alpha > 0.0))
        throw std::invalid_argument("map_coordinate: alpha must be positive");
    if (rho < 0.0)
        throw std::invalid_argument("map_coordinate: rho must be non-negative");
    return 0.5 * alpha * rho * rho;
}

/// Builds the oscillator problem equivalent to the ground state of the
/// power-series potential with (negative, bound) energy E0. Choosing
/// alpha^2 = 1/|E0| fixes the rho^2 coefficient at 1 + A2/|E0| and the exact
/// mapped ground energy at -2 A1 / sqrt(|E0|).
inline MappedSystem map_system(const PowerSeriesPotential& p, double E0)
{
    if (!(E0 < 0.0))
        throw std::domain_error("map_system: defined for bound states, E0 < 0");
    if (p.A6 < 0.0)
        throw std::domain_error("map_system: A6 must be non-negative (confining tail)");

    const double abs_e = -E0;
    const double sqrt_e = std::sqrt(abs_e);

    MappedSystem out;
    out.source_energy = E0;
    out.alpha = 1.0 / sqrt_e;
    out.oscillator.c2 = 1.0 + p.A2 / abs_e;
    out.oscillator.c4 = p.A3 / (2.0 * abs_e * sqrt_e);
    out.oscillator.c6 = p.A4 / (4.0 * abs_e * abs_e);
    out.oscillator.c8 = p.A5 / (8.0 * abs_e * abs_e * sqrt_e);
    out.oscillator.c10 = p.A6 / (16.0 * abs_e * abs_e * abs_e);
    out.e_hat_exact = -2.0 * p.A1 / sqrt_e;
    return out;
}

/// Ratio M'/(M-1) of the mapped and source degeneracy indices. Identically 2
/// for integer lambda in {0, 1}; exposed so the identity can be asserted.
inline double check_lambda_consistency(const QuantumNumbers& q, int lambda)
{
    if (lambda != 0 && lambda != 1)
        throw std::invalid_argument("check_lambda_consistency: lambda must be 0 or 1");
    const int m = q.m_index();
    if (m == 1)
        throw std::domain_error("check_lambda_consistency: M = 1 makes the ratio undefined");
    const double numerator = 2.0 * (q.dimension - 1 - lambda) + 2.0 * (2 * q.ell + lambda);
    return numerator / static_cast<double>(m - 1);
}

} // namespace scmap
