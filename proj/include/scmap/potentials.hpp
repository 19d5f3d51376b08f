#pragma once

#include <cmath>
#include <stdexcept>

namespace scmap {

/// Statically screened Coulomb interaction -e^2 exp(-delta r)/r in atomic
/// units (e^2 in Hartree*Bohr, delta in 1/Bohr).
struct YukawaPotential {
    double e2 = 1.0;
    double delta = 0.0;

    YukawaPotential(double e2_, double delta_) : e2(e2_), delta(delta_)
    {
        if (!(e2 > 0.0))
            throw std::invalid_argument("YukawaPotential: coupling e2 must be positive");
        if (delta < 0.0)
            throw std::invalid_argument("YukawaPotential: screening parameter must be non-negative");
    }
};

/// Power-series potential A1/r + A2 + A3 r + A4 r^2 + A5 r^3 + A6 r^4.
/// When built from a screened-Coulomb expansion with delta > 0 the signs
/// alternate (A1 < 0, A2 > 0, ...) and A6 > 0 makes the tail confining.
struct PowerSeriesPotential {
    double A1 = 0.0;
    double A2 = 0.0;
    double A3 = 0.0;
    double A4 = 0.0;
    double A5 = 0.0;
    double A6 = 0.0;
};

/// Even-power oscillator potential c2 rho^2 + c4 rho^4 + ... + c10 rho^10.
/// A confining tail needs c10 >= 0; the lower coefficients may take any sign.
struct OscillatorPotential {
    double c2 = 0.0;
    double c4 = 0.0;
    double c6 = 0.0;
    double c8 = 0.0;
    double c10 = 0.0;
};

inline double yukawa_eval(const YukawaPotential& p, double r)
{
    if (!(r > 0.0))
        throw std::domain_error("yukawa_eval: r must be positive");
    return -p.e2 * std::exp(-p.delta * r) / r;
}

/// Fifth-order expansion of the screened Coulomb potential in delta*r. The
/// truncation order is fixed: the quartic tail is what the oscillator mapping
/// and the superpotential ansatz are built around.
inline PowerSeriesPotential truncate_yukawa(const YukawaPotential& p)
{
    const double d = p.delta;
    PowerSeriesPotential out;
    out.A1 = -p.e2;
    out.A2 = p.e2 * d;
    out.A3 = -p.e2 * d * d / 2.0;
    out.A4 = p.e2 * d * d * d / 6.0;
    out.A5 = -p.e2 * d * d * d * d / 24.0;
    out.A6 = p.e2 * d * d * d * d * d / 120.0;
    return out;
}

inline PowerSeriesPotential truncate_yukawa(double e2, double delta)
{
    return truncate_yukawa(YukawaPotential(e2, delta));
}

inline double powerseries_eval(const PowerSeriesPotential& p, double r)
{
    if (!(r > 0.0))
        throw std::domain_error("powerseries_eval: r must be positive");
    // Horner form for the polynomial part.
    return p.A1 / r + p.A2 + r * (p.A3 + r * (p.A4 + r * (p.A5 + r * p.A6)));
}

inline double oscillator_eval(const OscillatorPotential& p, double rho)
{
    if (rho < 0.0)
        throw std::domain_error("oscillator_eval: rho must be non-negative");
    const double s = rho * rho;
    return s * (p.c2 + s * (p.c4 + s * (p.c6 + s * (p.c8 + s * p.c10))));
}

} // namespace scmap
