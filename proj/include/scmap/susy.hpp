#pragma once

// Closed-form single bound states from superpotential factorization, for the
// quartic-tailed power-series potential and its oscillator image. Each state
// exists only where the leftover matching constraints tie the potential
// couplings together, so states obtained from different parameter sets belong
// to different potentials and are not mutually orthogonal.

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "scmap/potentials.hpp"
#include "scmap/quadrature.hpp"
#include "scmap/root_find.hpp"

namespace scmap {

/// Thrown when a requested closed-form wavefunction cannot decay at infinity.
class non_normalizable_error : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Thrown when the superpotential matching admits no sign choice with a
/// decaying tail.
class no_valid_ansatz_error : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Superpotential a1/r + a2 + a3 r + a4 r^2 for the power-series system.
/// Valid parameter sets have a4 < 0 (decaying tail) and a1 = (M-1)/2 > 0.
struct SusyCoulombAnsatz {
    double a1 = 0.0;
    double a2 = 0.0;
    double a3 = 0.0;
    double a4 = 0.0;
};

/// Superpotential a rho^5 + b rho^3 + c/rho + d rho for the oscillator
/// system. Valid parameter sets have a < 0 and d < 0, with c = (M'-1)/2.
struct SusyOscillatorAnsatz {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;
};

/// Coefficients of W^2 + W' for the power-series superpotential, ordered by
/// power of r.
struct PartnerCoefficients {
    double inv_r2 = 0.0;
    double inv_r = 0.0;
    double constant = 0.0;
    double r1 = 0.0;
    double r2 = 0.0;
    double r3 = 0.0;
    double r4 = 0.0;
};

/// Coefficients of W^2 + W' for the oscillator superpotential, ordered by
/// power of rho (even powers plus the centrifugal 1/rho^2 term).
struct OscillatorPartnerCoefficients {
    double inv_rho2 = 0.0;
    double constant = 0.0;
    double rho2 = 0.0;
    double rho4 = 0.0;
    double rho6 = 0.0;
    double rho8 = 0.0;
    double rho10 = 0.0;
};

/// A closed-form bound state: energy, unnormalized wavefunction, the factor
/// that normalizes it, and the residuals of the parameter constraints the
/// solution hinges on (near zero iff the solution is physical).
struct ExactSolution {
    double energy = 0.0;
    std::function<double(double)> wavefunction;
    double normalization = 0.0;
    std::array<double, 2> constraint_residuals = {0.0, 0.0};
};

/// Superpotential parameters matched to the quartic-tailed power-series
/// potential with degeneracy index M. The four leading powers of the partner
/// potential fix all four parameters; the negative root of a4 keeps the
/// wavefunction bounded at infinity. M is treated as continuous: the
/// constraint solver varies it as a real unknown.
inline SusyCoulombAnsatz susy_coulomb_params(const PowerSeriesPotential& p, double M)
{
    if (!(p.A6 > 0.0))
        throw std::domain_error("susy_coulomb_params: A6 must be positive (confining tail required)");
    if (!(M >= 2.0))
        throw std::invalid_argument("susy_coulomb_params: M must be >= 2");
    SusyCoulombAnsatz w;
    w.a1 = 0.5 * (M - 1.0);
    w.a2 = 2.0 * p.A1 / (M - 1.0);
    w.a3 = -p.A5 / std::sqrt(2.0 * p.A6);
    w.a4 = -std::sqrt(2.0 * p.A6);
    return w;
}

inline PartnerCoefficients susy_partner_coefficients(const SusyCoulombAnsatz& w)
{
    PartnerCoefficients c;
    c.inv_r2 = w.a1 * (w.a1 - 1.0);
    c.inv_r = 2.0 * w.a1 * w.a2;
    c.constant = w.a2 * w.a2 + w.a3 * (2.0 * w.a1 + 1.0);
    c.r1 = 2.0 * (w.a1 * w.a4 + w.a4 + w.a2 * w.a3);
    c.r2 = 2.0 * w.a2 * w.a4 + w.a3 * w.a3;
    c.r3 = 2.0 * w.a3 * w.a4;
    c.r4 = w.a4 * w.a4;
    return c;
}

/// W^2 + W' evaluated through its coefficient expansion.
inline double susy_partner_potential(const SusyCoulombAnsatz& w, double r)
{
    if (!(r > 0.0))
        throw std::domain_error("susy_partner_potential: r must be positive");
    const auto c = susy_partner_coefficients(w);
    return c.inv_r2 / (r * r) + c.inv_r / r + c.constant + r * (c.r1 + r * (c.r2 + r * (c.r3 + r * c.r4)));
}

/// Ground-state energy of the matched power-series system,
/// A2 - [4 A1^2/(M-1)^2 - A5 M / sqrt(2 A6)] / 2. Physical only where the
/// two leftover matching constraints vanish; computed unconditionally.
inline double susy_coulomb_energy(const PowerSeriesPotential& p, double M)
{
    if (M == 1.0)
        throw std::domain_error("susy_coulomb_energy: M = 1 is singular");
    double screening_term = 0.0;
    if (p.A5 != 0.0) {
        if (!(p.A6 > 0.0))
            throw std::domain_error("susy_coulomb_energy: A6 must be positive when A5 != 0");
        screening_term = p.A5 * M / std::sqrt(2.0 * p.A6);
    }
    const double coulomb_term = 4.0 * p.A1 * p.A1 / ((M - 1.0) * (M - 1.0));
    return p.A2 - 0.5 * (coulomb_term - screening_term);
}

/// Residuals of the two matching conditions left over after the four
/// superpotential parameters are fixed: the r^2 coefficient pins A1, the r
/// coefficient pins A3. Both vanish simultaneously only at special
/// (coupling, screening, M) combinations.
inline std::array<double, 2> susy_coulomb_constraints(const PowerSeriesPotential& p, double M)
{
    if (!(p.A6 > 0.0))
        throw std::domain_error("susy_coulomb_constraints: A6 must be positive");
    if (M == 1.0)
        throw std::domain_error("susy_coulomb_constraints: M = 1 is singular");
    const double root = std::sqrt(2.0 * p.A6);
    const double rhs1 = -(M - 1.0) * (8.0 * p.A6 * p.A4 - 2.0 * p.A5 * p.A5) / (16.0 * p.A6 * root);
    const double rhs2 = -root * (0.5 * (M + 1.0) + p.A1 * p.A5 / ((M - 1.0) * p.A6));
    return {p.A1 - rhs1, p.A3 - rhs2};
}

inline std::array<double, 2> susy_coulomb_constraints(double e2, double delta, double M)
{
    if (!(delta > 0.0))
        throw std::invalid_argument("susy_coulomb_constraints: delta must be positive");
    return susy_coulomb_constraints(truncate_yukawa(e2, delta), M);
}

struct SusyPoint {
    double M = 0.0;
    double delta = 0.0;
    int iterations = 0;
    std::array<double, 2> residuals = {0.0, 0.0};
};

/// The (M, delta) pair at which both matching constraints vanish for the
/// truncated screened-Coulomb coefficients, from a damped 2-d Newton search.
/// M comes out as a real number; its integer part is what a physical
/// dimension/angular-momentum combination could realize.
inline SusyPoint solve_susy_coulomb_point(double e2, std::array<double, 2> initial = {4.0, 0.2})
{
    if (!(e2 > 0.0))
        throw std::invalid_argument("solve_susy_coulomb_point: e2 must be positive");
    // The raw residuals live on very different scales (the first ~e2, the
    // second ~e2 delta^2/2), which makes the damped Newton crawl. Solving in
    // component-scaled variables conditions the search without changing the
    // root.
    auto residual = [e2](double m, double delta) -> std::array<double, 2> {
        if (!(delta > 0.0) || m == 1.0)
            return {1e30, 1e30}; // drive the search back into the admissible region
        const auto raw = susy_coulomb_constraints(e2, delta, m);
        const double scale2 = 0.5 * e2 * std::max(delta * delta, 1e-4);
        return {raw[0] / e2, raw[1] / scale2};
    };
    const auto root = find_root_2d(residual, initial, 1e-12);
    SusyPoint out;
    out.M = root.x;
    out.delta = root.y;
    out.iterations = root.iterations;
    out.residuals = susy_coulomb_constraints(e2, out.delta, out.M);
    return out;
}

/// Closed-form ground state r^{a1} exp(a2 r + a3 r^2/2 + a4 r^3/3) of the
/// power-series system. The potential supplies A2 for the energy and the
/// constraint residuals; quadrature supplies the normalization.
inline ExactSolution susy_coulomb_wavefunction(const SusyCoulombAnsatz& w, const PowerSeriesPotential& p)
{
    if (!(w.a4 < 0.0))
        throw non_normalizable_error("susy_coulomb_wavefunction: a4 must be negative");

    ExactSolution sol;
    sol.wavefunction = [w](double r) {
        return std::pow(r, w.a1) * std::exp(r * (w.a2 + r * (0.5 * w.a3 + r * w.a4 / 3.0)));
    };
    const double m = 2.0 * w.a1 + 1.0;
    sol.energy = susy_coulomb_energy(p, m);
    sol.constraint_residuals = susy_coulomb_constraints(p, m);

    const double cubic_scale = std::cbrt(1.5 / std::abs(w.a4));
    const double scale = std::max(1.0, cubic_scale);
    auto density = [&](double r) {
        const double psi = sol.wavefunction(r);
        return psi * psi;
    };
    sol.normalization = 1.0 / std::sqrt(integrate_semi_infinite(density, scale));
    return sol;
}

/// Superpotential parameters matched to the oscillator image of a bound
/// state with energy E0 < 0 in a space with combined index M'. The negative
/// branch of the rho^5 coefficient is the normalizable one; a valid match
/// must also come out with d < 0.
inline SusyOscillatorAnsatz susy_oscillator_params(const PowerSeriesPotential& p, double E0, double m_prime)
{
    if (!(p.A6 > 0.0))
        throw std::domain_error("susy_oscillator_params: A6 must be positive");
    if (!(E0 < 0.0))
        throw std::domain_error("susy_oscillator_params: E0 must be negative (bound source state)");
    const double abs_e = -E0;
    const double e32 = abs_e * std::sqrt(abs_e);
    const double e52 = e32 * abs_e;

    SusyOscillatorAnsatz out;
    out.a = -std::sqrt(p.A6 / 8.0) / e32;
    out.b = p.A5 / (8.0 * out.a * e52);
    out.c = 0.5 * (m_prime - 1.0);
    out.d = (p.A4 / (2.0 * abs_e * abs_e) - out.b * out.b) / (2.0 * out.a);
    if (out.d >= 0.0)
        throw no_valid_ansatz_error("susy_oscillator_params: no sign choice yields a decaying ansatz (d >= 0)");
    return out;
}

/// Ground-state energy -d (2c + 1)/2 of the oscillator ansatz.
inline double susy_oscillator_energy(const SusyOscillatorAnsatz& w)
{
    return -0.5 * w.d * (2.0 * w.c + 1.0);
}

inline OscillatorPartnerCoefficients susy_oscillator_partner_coefficients(const SusyOscillatorAnsatz& w)
{
    OscillatorPartnerCoefficients out;
    out.inv_rho2 = w.c * (w.c - 1.0);
    out.constant = w.d * (2.0 * w.c + 1.0);
    out.rho2 = 2.0 * w.b * w.c + 3.0 * w.b + w.d * w.d;
    out.rho4 = 2.0 * w.a * w.c + 2.0 * w.b * w.d + 5.0 * w.a;
    out.rho6 = 2.0 * w.a * w.d + w.b * w.b;
    out.rho8 = 2.0 * w.a * w.b;
    out.rho10 = w.a * w.a;
    return out;
}

/// The oscillator potential this ansatz solves exactly: half the partner
/// expansion with the centrifugal term and the constant (energy) removed.
inline OscillatorPotential susy_oscillator_partner_potential(const SusyOscillatorAnsatz& w)
{
    const auto c = susy_oscillator_partner_coefficients(w);
    return {0.5 * c.rho2, 0.5 * c.rho4, 0.5 * c.rho6, 0.5 * c.rho8, 0.5 * c.rho10};
}

/// Closed-form ground state rho^c exp(a rho^6/6 + b rho^4/4 + d rho^2/2) of
/// the oscillator ansatz. When the target potential is supplied, the two
/// leftover matching residuals (rho^4 and rho^2 coefficients) are recorded.
inline ExactSolution susy_oscillator_wavefunction(const SusyOscillatorAnsatz& w,
                                                  const OscillatorPotential* target = nullptr)
{
    if (!(w.a < 0.0))
        throw non_normalizable_error("susy_oscillator_wavefunction: a must be negative");

    ExactSolution sol;
    sol.wavefunction = [w](double rho) {
        const double s = rho * rho;
        return std::pow(rho, w.c) * std::exp(s * (0.5 * w.d + s * (0.25 * w.b + s * w.a / 6.0)));
    };
    sol.energy = susy_oscillator_energy(w);
    if (target != nullptr) {
        const auto c = susy_oscillator_partner_coefficients(w);
        sol.constraint_residuals = {c.rho4 - 2.0 * target->c4, c.rho2 - 2.0 * target->c2};
    }

    double scale = std::pow(6.0 / std::abs(w.a), 1.0 / 6.0);
    if (w.b > 0.0) {
        // A positive quartic term pushes the density hump outward to the
        // outer zero of d + b rho^2 + a rho^4; the first quadrature segment
        // must reach past it.
        const double s2 =
            (w.b + std::sqrt(w.b * w.b + 4.0 * std::abs(w.a) * std::abs(w.d))) / (2.0 * std::abs(w.a));
        scale = std::max(scale, std::sqrt(s2));
    } else if (w.d < 0.0) {
        scale = std::min(scale, std::sqrt(2.0 / std::abs(w.d)));
    }
    auto density = [&](double rho) {
        const double psi = sol.wavefunction(rho);
        return psi * psi;
    };
    sol.normalization = 1.0 / std::sqrt(integrate_semi_infinite(density, std::max(0.5, scale)));
    return sol;
}

} // namespace scmap
