#include "ncwave/expr.hpp"
#include "ncwave/symchecks.hpp"

#include <doctest.h>

using namespace ncalg;

namespace {
const ModelConfig kUnit = ModelConfig::with_beta(AlgebraElement::one());
}

TEST_CASE("parse basic expressions") {
    // products are normal-ordered while parsing
    CHECK(std::get<AlgebraElement>(parse("t*x1", kUnit)) ==
          std::get<AlgebraElement>(parse("x1*t - lam*x1", kUnit)));

    FormSum f = std::get<FormSum>(parse("dx1*x1", kUnit));
    FormSum expect;
    expect[BasisForm::dx1] = AlgebraElement::x(1);
    expect[BasisForm::theta_prime] = AlgebraElement::from_coefficient(Coefficient::lam());
    CHECK(f == expect);

    AlgebraElement two_terms = std::get<AlgebraElement>(parse("x1^2 + 2*r^-1", kUnit));
    CHECK(two_terms.terms().size() == 2);
    CHECK(two_terms == mul(AlgebraElement::x(1), AlgebraElement::x(1)) +
                           AlgebraElement::r_pow(-1).scaled(Rational(2)));

    CHECK(std::get<AlgebraElement>(parse("3/2", kUnit)) ==
          AlgebraElement::from_rational(Rational(3, 2)));
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse("x1 + ", kUnit), ParseError);
    CHECK_THROWS_AS(parse("x9", kUnit), ParseError);
    CHECK_THROWS_AS(parse("x1 ++ x2", kUnit), ParseError);
    try {
        parse("x1 * (x2", kUnit);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.pos == 8);
    }

    // degree-2 products rejected
    CHECK_THROWS_WITH_AS(parse("dx1*dx2", kUnit), doctest::Contains("wedge not supported"),
                         ParseError);
    CHECK_THROWS_AS(parse("dt*th", kUnit), ParseError);

    // negative exponents only on r; basis forms only ^1
    CHECK_THROWS_AS(parse("x1^-1", kUnit), ParseError);
    CHECK_THROWS_AS(parse("t^-2", kUnit), ParseError);
    CHECK_THROWS_AS(parse("dx1^2", kUnit), ParseError);
    CHECK(std::get<AlgebraElement>(parse("r^-3", kUnit)) == AlgebraElement::r_pow(-3));

    // mixing degrees in a sum is ill-typed
    CHECK_THROWS_AS(parse("x1 + dx1", kUnit), ParseError);
}

TEST_CASE("format round-trips") {
    symchecks::Rng rng(99);
    ModelConfig model = ModelConfig::with_beta(AlgebraElement::r_pow(-1));
    for (int i = 0; i < 50; ++i) {
        AlgebraElement e = symchecks::random_element(rng);
        CHECK(std::get<AlgebraElement>(parse(format(e), model)) == e);
    }
    // forms round-trip too
    for (int i = 0; i < 20; ++i) {
        FormSum f;
        f[BasisForm::dx2] = symchecks::random_element(rng, 2, 2);
        f[BasisForm::dt] = symchecks::random_element(rng, 1, 1);
        f[BasisForm::theta_prime] = symchecks::random_element(rng, 2, 2);
        if (f.is_zero()) continue;
        CHECK(std::get<FormSum>(parse(format(f), model)) == f);
    }
    CHECK(format(AlgebraElement::zero()) == "0");
}
