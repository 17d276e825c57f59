#pragma once

// Floating-point frequency-domain engine for the minimally coupled black-hole
// wave equation: the deformed time-Laplacian symbol D(omega, r) with
// principal-branch logarithm, its geometric-series oracle, the multiplied-
// through ODE coefficients, redshift and harmonic-shift predictions, and the
// interregnum layer bookkeeping.

#include <complex>
#include <stdexcept>
#include <utility>

namespace bhnum {

using Complex = std::complex<double>;

struct PhysParams {
    double gamma = 1.0;     // Schwarzschild radius
    double lambda_p = 0.0;  // Planck-scale time; 0 selects the classical branch
    double c = 1.0;         // speed of light
    int l = 0;              // orbital angular momentum

    bool classical() const { return lambda_p == 0.0; }
    void validate() const;
};

/// D(omega,r) = (1/lp^2)[sinh(w lp) + e^{-w lp}(1-gam/r)(1 - e^{w lp}
///              - (gam/r) ln((e^{w lp} r - gam)/(r - gam)))],
/// principal branch (Im ln in (-pi, pi]); exactly real outside the
/// interregnum.  Requires lambda_p > 0 and r away from the singular points
/// r = gamma, r = gamma e^{-w lp}.
Complex dfield(double omega, double r, const PhysParams& p);

/// Classical value omega^2 / (2 (1 - gamma/r)).
double dfield_classical(double omega, double r, const PhysParams& p);

/// r -> infinity value (cosh(w lp) - 1)/lp^2, computed stably for tiny w lp.
double dfield_infinity(double omega, const PhysParams& p);

/// Partial sum of the per-monomial geometric expansion of D: the outer
/// series in gamma/r for r beyond the interregnum, the inner series in
/// r/gamma below it.  Throws std::domain_error outside the disk of
/// convergence of the applicable series.
Complex dfield_series(double omega, double r, const PhysParams& p, int n_terms);

/// scriptD(X) = -X + X^2/2 + (1-gam/r)(X - (gam/r) ln(1 - X/(1-gam/r))),
/// with scriptD(1 - e^{w lp}) = e^{w lp} lp^2 D(omega,r).
Complex script_d(Complex X, double r, const PhysParams& p);

/// Coefficients of a2 psi'' + a1 psi' + a0 psi = 0:
///   a2 = 1 - gam/r, a1 = 2/r - gam/r^2,
///   a0 = (2/(c^2 lp^2)) scriptD(1 - e^{w lp}) - l(l+1)/r^2,
/// and on the classical branch a0 = w^2/(c^2 (1-gam/r)) - l(l+1)/r^2.
struct OdeCoeffs {
    Complex a2, a1, a0;
};
OdeCoeffs ode_coeffs(double omega, double r, const PhysParams& p);

/// 1 + z = sqrt(D(omega,r)/D(omega,inf)); classical branch 1/sqrt(1-gam/r).
/// Rejects r inside the interregnum and radii where D <= 0.
double redshift(double omega, double r, const PhysParams& p);

/// Maximum redshift z_max = sqrt(sinh(w lp)/(cosh(w lp)-1)) - 1, computed
/// stably for tiny w lp; +infinity on the classical branch.
double zmax(double omega, const PhysParams& p);

/// Deficit in distance per base cycle between the redshifted base frequency
/// and the n-th harmonic, both exact (via D ratios; meaningful only when
/// w lp is resolvable in double precision) and to first order in w lp:
///   deficit ~ ((n-1)/3) c lp gam / (r sqrt(1-gam/r)),
/// plus the journey length accumulating one full cycle of phase error:
///   L = (c/omega)^2 / deficit.
struct HarmonicShift {
    double deficit_exact;   // NaN when w lp is below double resolution
    bool exact_resolvable;
    double deficit_approx;
    double accumulation_length;  // from deficit_approx
};
HarmonicShift harmonic_shift(double omega, int n, double r, const PhysParams& p);

/// Open radial interval where Im D != 0: (gam e^{-w lp}, gam) for omega > 0
/// and its reflection (gam, gam e^{-w lp}) for omega < 0.
std::pair<double, double> interregnum_bounds(double omega, const PhysParams& p);

/// Frequency-domain residual of the horizon relation satisfied by solutions
/// regular at r = gamma:
///   (1 - e^{2 w lp})/(c lp) psi - c lp ((1/gam) psi' - l(l+1) psi / gam^2).
Complex horizon_residual(Complex psi, Complex dpsi, double omega, const PhysParams& p);

}  // namespace bhnum
