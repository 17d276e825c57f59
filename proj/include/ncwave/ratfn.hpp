#pragma once

// Exact rational functions of r over Q with the formal parameters gam and K.
// Polynomials are sparse maps over (r,gam,K) exponents; rational functions
// are kept gcd-reduced with the denominator's leading coefficient normalized
// to 1, so equality is structural.

#include "ncwave/algebra.hpp"  // Rational

#include <map>
#include <string>

namespace clgeom {

using ncalg::Rational;

struct PolyKey {
    int r = 0;
    int gam = 0;
    int K = 0;
    auto operator<=>(const PolyKey&) const = default;
};

class Poly {
  public:
    Poly() = default;
    explicit Poly(Rational c);
    Poly(Rational c, PolyKey k);

    static Poly r();
    static Poly gam();
    static Poly K();

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    bool operator==(const Poly&) const = default;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;
    Poly scaled(const Rational& s) const;

    /// Formal d/dr.
    Poly derivative_r() const;

    /// Degree in variable v (0 = r, 1 = gam, 2 = K); -1 for the zero poly.
    int degree(int v) const;
    /// Leading coefficient wrt v: the sub-polynomial multiplying v^deg.
    Poly leading_coeff(int v) const;
    /// Coefficient sub-polynomial of v^e.
    Poly coeff_of(int v, int e) const;
    /// Multiply by v^e.
    Poly times_var_pow(int v, int e) const;

    /// Leading rational coefficient in map order.
    Rational leading_rational() const;

    const std::map<PolyKey, Rational>& terms() const { return t_; }

  private:
    std::map<PolyKey, Rational> t_;
};

/// Exact division; throws std::logic_error if q does not divide p.
Poly divide_exact(const Poly& p, const Poly& q);

/// Gcd over Q[r,gam,K], normalized with leading rational 1 (1 for coprime).
Poly poly_gcd(Poly a, Poly b);

class RationalFunction {
  public:
    RationalFunction() : num_(), den_(Rational(1)) {}
    explicit RationalFunction(Rational c) : num_(std::move(c)), den_(Rational(1)) {}
    RationalFunction(Poly num, Poly den);

    static RationalFunction r();
    static RationalFunction gam();
    static RationalFunction K();

    bool is_zero() const { return num_.is_zero(); }
    bool operator==(const RationalFunction&) const = default;

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    /// Throws std::domain_error on division by the zero function.
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction operator-() const;

    /// Formal d/dr.
    RationalFunction derivative() const;

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    /// Numeric evaluation at (r, gam, K).
    double eval(double r, double gam, double K = 0.0) const;

    std::string str() const;

  private:
    void reduce();
    Poly num_, den_;
};

/// Parse a rational-function expression in r, gam, K with + - * / ^ and
/// parentheses.  Throws std::runtime_error with position info on bad input.
RationalFunction parse_ratfn(const std::string& text);

}  // namespace clgeom
