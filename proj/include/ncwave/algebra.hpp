#pragma once

// Exact normal-ordered arithmetic for the coordinate algebra of the flat
// bicrossproduct model: mutually commuting spatial generators x1,x2,x3,r
// (with r invertible and r^2 = x1^2+x2^2+x3^2) extended by a time variable t
// with [x_i,t] = lam*x_i and [r,t] = lam*r.  Coefficients live in the
// polynomial ring Q[lam,gam] with arbitrary-precision rationals: there is no
// rounding anywhere in this module.

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ncalg {

using Rational = boost::multiprecision::cpp_rational;

Rational binomial(int n, int k);

/// Exponents of the formal parameters lam (deformation) and gam
/// (Schwarzschild radius).
struct ParamPow {
    int lam = 0;
    int gam = 0;
    auto operator<=>(const ParamPow&) const = default;
};

/// Polynomial in lam and gam over Q.  Zero <=> empty term map.
class Coefficient {
  public:
    Coefficient() = default;
    explicit Coefficient(Rational c);
    Coefficient(Rational c, int lam_pow, int gam_pow);

    static Coefficient one() { return Coefficient(Rational(1)); }
    static Coefficient lam(int p = 1) { return Coefficient(Rational(1), p, 0); }
    static Coefficient gam(int p = 1) { return Coefficient(Rational(1), 0, p); }

    bool is_zero() const { return t_.empty(); }
    bool operator==(const Coefficient&) const = default;

    Coefficient& operator+=(const Coefficient& o);
    Coefficient& operator-=(const Coefficient& o);
    friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
    friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
    friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
    Coefficient operator-() const;
    Coefficient& operator*=(const Rational& s);
    friend Coefficient operator*(Coefficient a, const Rational& s) { return a *= s; }

    /// Multiply by lam^p (p >= 0).
    Coefficient times_lam(int p) const;
    bool divisible_by_lam(int p = 1) const;
    /// Exact division by lam^p; throws std::logic_error on nonzero remainder.
    Coefficient div_lam(int p) const;
    /// Keep only the lam^0 part.
    Coefficient at_lam_zero() const;

    const std::map<ParamPow, Rational>& terms() const { return t_; }

  private:
    std::map<ParamPow, Rational> t_;
};

/// Canonical monomial x1^a1 x2^a2 x3^a3 r^k t^n with a3 in {0,1}
/// (even powers of x3 are eliminated through x3^2 = r^2 - x1^2 - x2^2).
struct Monomial {
    int a1 = 0;
    int a2 = 0;
    int a3 = 0;
    int k = 0;  // r exponent, may be negative
    int n = 0;  // t exponent
    auto operator<=>(const Monomial&) const = default;

    /// Spatial homogeneity degree a1+a2+a3+k.  Invariant under the
    /// x3^2 -> r^2 - x1^2 - x2^2 reduction.
    int spatial_degree() const { return a1 + a2 + a3 + k; }
};

/// Finite Coefficient-linear combination of canonical monomials, kept in
/// normal order (all t-dependence conceptually to the right of x,r).
/// Immutable in spirit: every operation returns a fresh value.
class AlgebraElement {
  public:
    AlgebraElement() = default;

    static AlgebraElement zero() { return {}; }
    static AlgebraElement one() { return from_rational(1); }
    static AlgebraElement from_rational(Rational c);
    static AlgebraElement from_coefficient(Coefficient c);
    static AlgebraElement x(int i);  // i in {1,2,3}
    static AlgebraElement r_pow(int k);
    static AlgebraElement t_pow(int n);
    static AlgebraElement monomial(Monomial m, Coefficient c = Coefficient::one());

    bool is_zero() const { return t_.empty(); }
    bool operator==(const AlgebraElement&) const = default;

    /// Add c * m, reducing even x3 powers; accepts non-canonical a3.
    void add_term(const Monomial& m, const Coefficient& c);

    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    AlgebraElement operator-() const;
    AlgebraElement scaled(const Coefficient& c) const;
    AlgebraElement scaled(const Rational& s) const;

    /// Substitute t -> t + shift*lam (normal-ordering shift).
    AlgebraElement shifted_t(const Rational& shift) const;

    bool t_free() const;
    bool x_free() const;
    int max_t_power() const;
    /// Formal derivative in t of the normal-ordered t-dependence.
    AlgebraElement dt_formal() const;

    bool divisible_by_lam(int p = 1) const;
    AlgebraElement div_lam(int p) const;
    AlgebraElement at_lam_zero() const;

    const std::map<Monomial, Coefficient>& terms() const { return t_; }

  private:
    std::map<Monomial, Coefficient> t_;
};

/// Normal-ordered product: t^n * (x^b r^l) = (x^b r^l) (t - (|b|+l) lam)^n.
AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b);

/// Canonicalize a raw term list (idempotent on canonical input).
AlgebraElement canonicalize(const std::vector<std::pair<Monomial, Coefficient>>& raw);

/// Degree operator r d/dr on the spatial part; t untouched.
AlgebraElement tau(const AlgebraElement& f);

/// Commutative spatial partial derivatives with dr/dx_i = x_i/r.
/// Any t-dependence rides along unchanged.
std::array<AlgebraElement, 3> spatial_gradient(const AlgebraElement& f);

/// Flat Euclidean Laplacian on R^3 \ {0} applied to the spatial part.
AlgebraElement laplacian_flat(const AlgebraElement& f);

/// d/dr = r^{-1} tau on the spatial part.
AlgebraElement radial_derivative(const AlgebraElement& f);

}  // namespace ncalg
