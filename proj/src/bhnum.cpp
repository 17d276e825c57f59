#include "ncwave/bhnum.hpp"

#include <cmath>
#include <limits>

namespace bhnum {

namespace {

constexpr double kPi = 3.14159265358979323846;

// (cosh(x) - 1), stable near 0.
double cosh_m1(double x) {
    if (std::abs(x) < 1e-4) {
        double x2 = x * x;
        return x2 / 2.0 * (1.0 + x2 / 12.0 * (1.0 + x2 / 30.0));
    }
    return (std::expm1(x) + std::expm1(-x)) / 2.0;
}

void check_exp_range(double x) {
    if (std::abs(x) > 700.0)
        throw std::overflow_error("omega*lambda_p too large: exp overflows");
}

}  // namespace

void PhysParams::validate() const {
    // gamma = 0 is the flat-space limit used by the solver oracle
    if (!(gamma >= 0)) throw std::invalid_argument("PhysParams: gamma must be >= 0");
    if (!(lambda_p >= 0)) throw std::invalid_argument("PhysParams: lambda_p must be >= 0");
    if (!(c > 0)) throw std::invalid_argument("PhysParams: c must be > 0");
    if (l < 0) throw std::invalid_argument("PhysParams: l must be >= 0");
}

Complex dfield(double omega, double r, const PhysParams& p) {
    p.validate();
    if (p.classical()) throw std::domain_error("dfield: lambda_p must be > 0");
    if (!(r > 0)) throw std::domain_error("dfield: r must be > 0");
    const double x = omega * p.lambda_p;
    check_exp_range(x);
    const double g = p.gamma / r;
    if (r == p.gamma || r == p.gamma * std::exp(-x))
        throw std::domain_error("dfield: r at a singular point");
    // log argument (e^x r - gam)/(r - gam) = 1 + expm1(x) r/(r - gam)
    const double q = std::expm1(x) * r / (r - p.gamma);
    const double lp2 = p.lambda_p * p.lambda_p;
    if (1.0 + q > 0.0) {
        // outside the interregnum D is exactly real
        double bracket = std::sinh(x) + std::exp(-x) * (1.0 - g) *
                                            (1.0 - std::exp(x) - g * std::log1p(q));
        return Complex(bracket / lp2, 0.0);
    }
    // interregnum: negative real log argument, principal branch Im = +pi
    Complex L(std::log(-(1.0 + q)), kPi);
    Complex bracket =
        std::sinh(x) + std::exp(-x) * (1.0 - g) * (1.0 - std::exp(x) - g * L);
    return bracket / lp2;
}

double dfield_classical(double omega, double r, const PhysParams& p) {
    if (r == p.gamma) throw std::domain_error("dfield_classical: r at the horizon");
    return omega * omega / (2.0 * (1.0 - p.gamma / r));
}

double dfield_infinity(double omega, const PhysParams& p) {
    p.validate();
    if (p.classical()) return omega * omega / 2.0;
    const double x = omega * p.lambda_p;
    check_exp_range(x);
    return cosh_m1(x) / (p.lambda_p * p.lambda_p);
}

Complex dfield_series(double omega, double r, const PhysParams& p, int n_terms) {
    p.validate();
    if (p.classical()) throw std::domain_error("dfield_series: lambda_p must be > 0");
    if (n_terms < 1) throw std::invalid_argument("dfield_series: n_terms must be >= 1");
    if (!(r > 0)) throw std::domain_error("dfield_series: r must be > 0");
    const double x = omega * p.lambda_p;
    check_exp_range(x);
    const double lp2 = p.lambda_p * p.lambda_p;
    const double zeta = std::exp(-x);
    const Complex i_omega(0.0, omega);
    const Complex lam(0.0, p.lambda_p);  // lam = i lambda_p, lam^2 = -lp^2

    if (r > p.gamma) {
        // Outer series sum_m (gam/r)^m F_m; converges for r > gam max(1, e^{-x}).
        if (!(r > p.gamma * std::max(1.0, zeta)))
            throw std::domain_error("dfield_series: r inside the outer series radius");
        Complex sum = 0.0;
        const double ratio = p.gamma / r;
        double pw = 1.0;
        for (int m = 0; m < n_terms; ++m) {
            Complex Fm;
            if (m == 1) {
                Fm = zeta * (i_omega - (1.0 - 1.0 / zeta) / lam) / lam;
            } else if (m == 2) {
                Fm = ((zeta * zeta - zeta) / lam - i_omega * zeta) / lam;
            } else {
                Fm = (zeta + (1.0 - m) * std::pow(zeta, m - 1) -
                      (2.0 - m) * std::pow(zeta, m)) /
                     (-lp2 * (2.0 - m) * (1.0 - m));
            }
            sum += pw * Fm;
            pw *= ratio;
        }
        return -sum;
    }

    // Inner series sum_{m>=1} (r/gam)^m G_m; converges for r < gam min(1, e^{-x}).
    if (!(r < p.gamma * std::min(1.0, zeta)))
        throw std::domain_error("dfield_series: r outside the inner series radius");
    Complex sum = 0.0;
    const double ratio = r / p.gamma;
    double pw = ratio;
    for (int m = 1; m < n_terms; ++m) {
        Complex Gm = (zeta + (1.0 + m) * std::pow(zeta, -(m + 1)) -
                      (2.0 + m) * std::pow(zeta, -m)) /
                     (-lp2 * (2.0 + m) * (1.0 + m));
        sum += pw * Gm;
        pw *= ratio;
    }
    return sum;
}

Complex script_d(Complex X, double r, const PhysParams& p) {
    p.validate();
    if (!(r > 0) || r == p.gamma) throw std::domain_error("script_d: invalid radius");
    const double g = p.gamma / r;
    const double A = 1.0 - g;
    const Complex arg = 1.0 - X / A;
    Complex L;
    if (arg.imag() == 0.0 && arg.real() <= 0.0) {
        if (arg.real() == 0.0) throw std::domain_error("script_d: log singularity");
        L = Complex(std::log(-arg.real()), kPi);
    } else {
        L = std::log(arg);
    }
    return -X + X * X / 2.0 + A * (X - g * L);
}

OdeCoeffs ode_coeffs(double omega, double r, const PhysParams& p) {
    p.validate();
    if (!(r > 0)) throw std::domain_error("ode_coeffs: r must be > 0");
    OdeCoeffs co;
    co.a2 = 1.0 - p.gamma / r;
    co.a1 = 2.0 / r - p.gamma / (r * r);
    const double cent = p.l * (p.l + 1) / (r * r);
    if (p.classical()) {
        co.a0 = omega * omega / (p.c * p.c * (1.0 - p.gamma / r)) - cent;
    } else {
        const double x = omega * p.lambda_p;
        check_exp_range(x);
        co.a0 = 2.0 * std::exp(x) * dfield(omega, r, p) / (p.c * p.c) - cent;
    }
    return co;
}

double redshift(double omega, double r, const PhysParams& p) {
    p.validate();
    if (omega == 0.0) throw std::domain_error("redshift: omega must be nonzero");
    if (p.classical()) {
        if (!(r > p.gamma))
            throw std::domain_error("redshift: classical redshift needs r > gamma");
        return 1.0 / std::sqrt(1.0 - p.gamma / r);
    }
    auto [lo, hi] = interregnum_bounds(omega, p);
    if (r >= lo && r <= hi)
        throw std::domain_error("redshift: r inside the interregnum (complex D)");
    const double Dr = dfield(omega, r, p).real();
    const double Dinf = dfield_infinity(omega, p);
    if (!(Dr > 0.0) || !(Dinf > 0.0))
        throw std::domain_error("redshift: D must be positive at this radius");
    return std::sqrt(Dr / Dinf);
}

double zmax(double omega, const PhysParams& p) {
    p.validate();
    if (omega == 0.0) throw std::domain_error("zmax: omega must be nonzero");
    if (p.classical()) return std::numeric_limits<double>::infinity();
    const double x = std::abs(omega) * p.lambda_p;
    check_exp_range(x);
    if (x < 1e-4) {
        // sinh(x)/(cosh(x)-1) = (2/x)(1 + x^2/12 + ...)
        return std::sqrt(2.0 / x * (1.0 + x * x / 12.0)) - 1.0;
    }
    return std::sqrt(std::sinh(x) / cosh_m1(x)) - 1.0;
}

HarmonicShift harmonic_shift(double omega, int n, double r, const PhysParams& p) {
    p.validate();
    if (n < 1) throw std::invalid_argument("harmonic_shift: n must be >= 1");
    if (!(r > p.gamma)) throw std::domain_error("harmonic_shift: r must exceed gamma");
    HarmonicShift out{};
    out.exact_resolvable = true;
    if (n == 1 || p.classical()) {
        out.deficit_exact = 0.0;
        out.deficit_approx = 0.0;
        out.accumulation_length = std::numeric_limits<double>::infinity();
        return out;
    }
    const double base_wavelength = p.c / omega;
    out.deficit_approx = (n - 1) / 3.0 * p.c * p.lambda_p * p.gamma /
                         (r * std::sqrt(1.0 - p.gamma / r));
    out.accumulation_length = base_wavelength * base_wavelength / out.deficit_approx;
    if (omega * p.lambda_p < 1e-8) {
        // the first-order shift of the D ratios sits below double precision
        out.exact_resolvable = false;
        out.deficit_exact = std::numeric_limits<double>::quiet_NaN();
        return out;
    }
    // omega' = omega sqrt(Dinf/D(r)); the harmonic shifts with its own D.
    const double D1 = dfield(omega, r, p).real();
    const double Dn = dfield(n * omega, r, p).real();
    const double D1inf = dfield_infinity(omega, p);
    const double Dninf = dfield_infinity(n * omega, p);
    const double omega_base = omega * std::sqrt(D1inf / D1);
    out.deficit_exact =
        (p.c / omega_base) * (1.0 - std::sqrt(Dn * D1inf / (Dninf * D1)));
    return out;
}

std::pair<double, double> interregnum_bounds(double omega, const PhysParams& p) {
    p.validate();
    if (omega == 0.0) throw std::domain_error("interregnum_bounds: omega must be nonzero");
    if (p.classical()) return {p.gamma, p.gamma};
    const double x = omega * p.lambda_p;
    check_exp_range(x);
    const double edge = p.gamma * std::exp(-x);
    if (omega > 0) return {edge, p.gamma};
    return {p.gamma, edge};
}

Complex horizon_residual(Complex psi, Complex dpsi, double omega, const PhysParams& p) {
    p.validate();
    if (p.classical()) throw std::domain_error("horizon_residual: lambda_p must be > 0");
    const double x = omega * p.lambda_p;
    check_exp_range(2.0 * x);
    const double clp = p.c * p.lambda_p;
    return -std::expm1(2.0 * x) / clp * psi -
           clp * (dpsi / p.gamma - double(p.l * (p.l + 1)) * psi / (p.gamma * p.gamma));
}

}  // namespace bhnum
