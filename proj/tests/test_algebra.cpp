#include "ncwave/expr.hpp"
#include "ncwave/symchecks.hpp"

#include <doctest.h>

using namespace ncalg;

namespace {
const ModelConfig kUnit = ModelConfig::with_beta(AlgebraElement::one());

AlgebraElement E(const std::string& s) { return parse_element(s, kUnit); }
}  // namespace

TEST_CASE("canonicalization of x3 powers") {
    // x3^2 -> r^2 - x1^2 - x2^2
    AlgebraElement e = canonicalize({{Monomial{0, 0, 2, 0, 0}, Coefficient::one()}});
    CHECK(e == E("r^2 - x1^2 - x2^2"));

    // x1^2 + x2^2 + x3^2 -> r^2
    AlgebraElement sum = canonicalize({{Monomial{2, 0, 0, 0, 0}, Coefficient::one()},
                                       {Monomial{0, 2, 0, 0, 0}, Coefficient::one()},
                                       {Monomial{0, 0, 2, 0, 0}, Coefficient::one()}});
    CHECK(sum == AlgebraElement::r_pow(2));

    // r * r^-1 -> 1
    CHECK(mul(AlgebraElement::r_pow(1), AlgebraElement::r_pow(-1)) == AlgebraElement::one());

    // idempotent
    std::vector<std::pair<Monomial, Coefficient>> raw(e.terms().begin(), e.terms().end());
    CHECK(canonicalize(raw) == e);
}

TEST_CASE("normal-ordered products") {
    CHECK(mul(E("t"), E("x1")) == E("x1*t - lam*x1"));
    CHECK(mul(E("t"), E("r")) == E("r*t - lam*r"));
    // t^2 r^-1 = r^-1 (t + lam)^2
    CHECK(mul(E("t^2"), E("r^-1")) == E("r^-1*t^2 + 2*lam*r^-1*t + lam^2*r^-1"));
    // x and r commute
    CHECK(mul(E("x1"), E("r")) == mul(E("r"), E("x1")));
}

TEST_CASE("degree operator") {
    CHECK(tau(E("x1")) == E("x1"));
    CHECK(tau(E("r^-2")) == E("-2*r^-2"));
    // degree 2 - 1 = 1, t untouched
    CHECK(tau(E("x1*x2*r^-1*t^3")) == E("x1*x2*r^-1*t^3"));
    CHECK(tau(AlgebraElement::one()).is_zero());
}

TEST_CASE("classical gradient and Laplacian") {
    auto [dr2, lap_r2] = classical_d_and_laplacian(E("r^2"));
    for (int i = 0; i < 3; ++i)
        CHECK(dr2[static_cast<BasisForm>(i)] ==
              AlgebraElement::x(i + 1).scaled(Rational(2)));
    CHECK(lap_r2 == AlgebraElement::from_rational(6));

    // 1/r is harmonic away from the origin
    auto [drm1, lap_rm1] = classical_d_and_laplacian(E("r^-1"));
    CHECK(lap_rm1.is_zero());
    CHECK(drm1[BasisForm::dx1] == E("-1*x1*r^-3"));

    auto [dx1, lap_x1] = classical_d_and_laplacian(E("x1"));
    CHECK(lap_x1.is_zero());
    CHECK(dx1[BasisForm::dx1] == AlgebraElement::one());
    CHECK(dx1[BasisForm::dx2].is_zero());

    CHECK_THROWS_AS(classical_d_and_laplacian(E("t")), std::invalid_argument);
}

TEST_CASE("form normalization rules") {
    ModelConfig model = ModelConfig::with_beta(AlgebraElement::r_pow(-2));

    // dx1 x1 = x1 dx1 + lam th
    FormSum lhs = mul_right(FormSum::basis(BasisForm::dx1), E("x1"), model);
    FormSum rhs;
    rhs[BasisForm::dx1] = E("x1");
    rhs[BasisForm::theta_prime] = AlgebraElement::from_coefficient(Coefficient::lam());
    CHECK(lhs == rhs);

    // th t = (t + lam) th
    FormSum tht = mul_right(FormSum::basis(BasisForm::theta_prime), E("t"), model);
    FormSum tht_expect;
    tht_expect[BasisForm::theta_prime] = E("t + lam");
    CHECK(tht == tht_expect);

    // dt t = t dt + lam beta th - lam dt
    FormSum dtt = mul_right(FormSum::basis(BasisForm::dt), E("t"), model);
    FormSum dtt_expect;
    dtt_expect[BasisForm::dt] = E("t - lam");
    dtt_expect[BasisForm::theta_prime] = E("lam*r^-2");
    CHECK(dtt == dtt_expect);

    // dx_i r^k = r^k dx_i + lam k x_i r^{k-2} th
    FormSum dxr = mul_right(FormSum::basis(BasisForm::dx2), E("r^-3"), model);
    FormSum dxr_expect;
    dxr_expect[BasisForm::dx2] = E("r^-3");
    dxr_expect[BasisForm::theta_prime] = E("-3*lam*x2*r^-5");
    CHECK(dxr == dxr_expect);
}

TEST_CASE("form_normalize assembles left*basis*right lists") {
    ModelConfig model = ModelConfig::with_beta(AlgebraElement::one());
    FormSum out = form_normalize({{E("x1"), BasisForm::dx1, E("x1")},
                                  {E("2"), BasisForm::theta_prime, E("t")}},
                                 model);
    FormSum expect;
    expect[BasisForm::dx1] = E("x1^2");
    expect[BasisForm::theta_prime] = E("lam*x1 + 2*t + 2*lam");
    CHECK(out == expect);
}

TEST_CASE("randomized algebra properties") {
    symchecks::Rng rng(7);
    CHECK(symchecks::associativity(rng, 200).pass);
    CHECK(symchecks::distributivity(rng, 80).pass);
    CHECK(symchecks::lambda_zero_commutative(rng, 80).pass);
    CHECK(symchecks::relation_compatibility().pass);
    CHECK(symchecks::tau_derivation(rng, 200).pass);
    CHECK(symchecks::right_module(rng, 40).pass);
}
