#pragma once

// Degree-1 forms over the bicrossproduct model algebra.  Canonical form
// keeps every algebra coefficient on the LEFT of the basis forms
// {dx1, dx2, dx3, dt, th}; dr is derived, never a basis element:
// r dr = x_i dx_i + lam th.

#include "ncwave/algebra.hpp"

#include <optional>
#include <tuple>

namespace ncalg {

enum class BasisForm { dx1 = 0, dx2 = 1, dx3 = 2, dt = 3, theta_prime = 4 };

inline constexpr std::array<BasisForm, 5> kBasisForms = {
    BasisForm::dx1, BasisForm::dx2, BasisForm::dx3, BasisForm::dt, BasisForm::theta_prime};

/// Five left algebra coefficients, one per basis 1-form.
class FormSum {
  public:
    FormSum() = default;

    static FormSum basis(BasisForm b);
    /// dr expanded on the basis: r^{-1} x_i dx_i + lam r^{-1} th.
    static FormSum dr();

    AlgebraElement& operator[](BasisForm b) { return c_[static_cast<int>(b)]; }
    const AlgebraElement& operator[](BasisForm b) const { return c_[static_cast<int>(b)]; }

    bool is_zero() const;
    bool operator==(const FormSum&) const = default;

    FormSum& operator+=(const FormSum& o);
    FormSum& operator-=(const FormSum& o);
    friend FormSum operator+(FormSum a, const FormSum& b) { return a += b; }
    friend FormSum operator-(FormSum a, const FormSum& b) { return a -= b; }
    FormSum operator-() const;
    FormSum scaled(const Coefficient& c) const;
    FormSum scaled(const Rational& s) const;

  private:
    std::array<AlgebraElement, 5> c_;
};

/// Calculus data: the parameter beta (t- and x-free Laurent polynomial in r),
/// the conformal factor alpha (1 for the radial conformal Killing vector),
/// and optionally a radial drift q(r) = beta'/(2 beta) used when assembling
/// wave operators.
struct ModelConfig {
    AlgebraElement beta;
    Rational alpha{1};
    std::optional<AlgebraElement> drift;

    static ModelConfig with_beta(AlgebraElement b);
    static ModelConfig with_beta_and_drift(AlgebraElement b, AlgebraElement q);
    void validate() const;
};

/// Left module action a * phi.
FormSum mul_left(const AlgebraElement& a, const FormSum& phi);

/// Right action phi * g, pushing g left past the basis forms:
///   dx_i x_j = x_j dx_i + lam delta_ij th
///   dx_i t   = t dx_i
///   dx_i r^k = r^k dx_i + lam k x_i r^{k-2} th
///   dt f     = f dt - lam d(f)                (t-free f)
///   dt t     = t dt + lam beta th - lam dt
///   th x_i = x_i th,  th r^k = r^k th,  th t = (t + alpha lam) th
FormSum mul_right(const FormSum& phi, const AlgebraElement& g, const ModelConfig& model);

/// Normalize a sum of (left coeff) * basis * (right coeff) terms.
FormSum form_normalize(
    const std::vector<std::tuple<AlgebraElement, BasisForm, AlgebraElement>>& terms,
    const ModelConfig& model);

/// Commutator [phi, g] = phi*g - g*phi.
FormSum commutator(const FormSum& phi, const AlgebraElement& g, const ModelConfig& model);

/// Classical exterior derivative and flat Laplacian of a t-free element:
/// (sum_i (d_i f) dx_i, lap f).  Rejects t-dependent input.
std::pair<FormSum, AlgebraElement> classical_d_and_laplacian(const AlgebraElement& f);

}  // namespace ncalg
