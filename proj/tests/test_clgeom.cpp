#include "ncwave/clgeom.hpp"
#include "ncwave/expr.hpp"
#include "ncwave/symchecks.hpp"
#include "ncwave/waveops.hpp"

#include <doctest.h>

#include <random>

using namespace clgeom;
using ncalg::Rational;

namespace {

const RationalFunction kOne{Rational(1)};
RationalFunction RF(const std::string& s) { return parse_ratfn(s); }

// Convert a rational function with monomial denominator r^j (no gam, K in
// the denominator) to a Laurent AlgebraElement; used as a bridge oracle.
ncalg::AlgebraElement to_laurent(const RationalFunction& f) {
    const Poly& den = f.den();
    REQUIRE(den.terms().size() == 1);
    const auto& [dk, dc] = *den.terms().begin();
    REQUIRE(dk.gam == 0);
    REQUIRE(dk.K == 0);
    ncalg::AlgebraElement out;
    for (const auto& [k, c] : f.num().terms()) {
        REQUIRE(k.K == 0);
        out.add_term(ncalg::Monomial{0, 0, 0, k.r - dk.r, 0},
                     ncalg::Coefficient(c / dc, 0, k.gam));
    }
    return out;
}

}  // namespace

TEST_CASE("rational function arithmetic") {
    // d/dr (1 - gam/r) = gam/r^2
    CHECK(RF("1 - gam/r").derivative() == RF("gam/r^2"));
    // (1 - gam/r) * 1/(1 - gam/r) = 1
    CHECK(RF("1 - gam/r") * (kOne / RF("1 - gam/r")) == kOne);
    // gcd normalization: (r^2 - gam*r) / (r^2 (1 - gam/r)) = 1
    RationalFunction q = RF("r^2 - gam*r") / (RF("r^2") * RF("1 - gam/r"));
    CHECK(q == kOne);
    CHECK(q.str() == "1");

    CHECK_THROWS_AS(kOne / RationalFunction{}, std::domain_error);
}

TEST_CASE("rational function field axioms (randomized)") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> coeff(-3, 3), deg(0, 2);
    auto random_poly = [&]() {
        Poly p;
        for (int i = 0; i < 3; ++i) {
            int c = coeff(rng);
            if (c == 0) continue;
            p += Poly(Rational(c), PolyKey{deg(rng), deg(rng), 0});
        }
        return p;
    };
    auto random_rf = [&]() {
        Poly den;
        while (den.is_zero()) den = random_poly();
        return RationalFunction(random_poly(), den);
    };
    for (int i = 0; i < 40; ++i) {
        RationalFunction a = random_rf(), b = random_rf(), c = random_rf();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a - a == RationalFunction{});
        if (!a.is_zero()) CHECK(a / a == kOne);
    }
}

TEST_CASE("static Ricci components") {
    RationalFunction F = RF("1 - gam/r");
    RicciComponents schw = ricci_static4(F, kOne / F);
    CHECK(schw.c_ang.is_zero());
    CHECK(schw.c_rr.is_zero());
    CHECK(schw.c_tt.is_zero());

    RicciComponents flat = ricci_static4(kOne, kOne);
    CHECK(flat.all_zero());

    // constant-curvature spatial family: F = 1, H = 1/(1+K r^2)
    RationalFunction H = kOne / RF("1 + K*r^2");
    RicciComponents cc = ricci_static4(kOne, H);
    CHECK(cc.c_tt.is_zero());
    CHECK(cc.c_ang == RF("K"));
    CHECK(cc.c_rr == RF("K") * H);
}

TEST_CASE("3-geometry Einstein condition") {
    RationalFunction H = kOne / RF("1 + K*r^2");
    CHECK(einstein_residual(H).is_zero());
    Ricci3 r3 = ricci_3(H);
    CHECK(r3.c_rr == RF("K") * H);
    CHECK(r3.c_ang == RF("K"));

    CHECK(einstein_residual(kOne).is_zero());
    CHECK_FALSE(einstein_residual(kOne / RF("1 - gam/r")).is_zero());
}

TEST_CASE("classical wave coefficients") {
    WaveCoeffs flat = classical_wave_coeffs(kOne, kOne, 0);
    CHECK(flat.a_tt == -kOne);
    CHECK(flat.a_r == RF("2/r"));
    CHECK(flat.a_rr == kOne);
    CHECK(flat.a_ang.is_zero());

    RationalFunction F = RF("1 - gam/r");
    WaveCoeffs schw = classical_wave_coeffs(F, kOne / F, 0);
    CHECK(schw.a_r == RF("2/r - gam/r^2"));
    CHECK(schw.a_rr == F);
    CHECK(schw.a_tt == -(kOne / F));

    CHECK(classical_wave_coeffs(kOne, kOne, 2).a_ang == RF("-6/r^2"));
}

TEST_CASE("cross-module oracle: wave coefficients vs symbolic operator") {
    using ncalg::AlgebraElement;
    // Flat data: the lam = 0 wave operator with beta = -1 must match
    // a_tt d^2/dt^2 + a_r d/dr + a_rr d^2/dr^2 on radial monomials.
    WaveCoeffs flat = classical_wave_coeffs(kOne, kOne, 0);
    ncalg::ModelConfig model =
        ncalg::ModelConfig::with_beta(-AlgebraElement::one());
    AlgebraElement a_r = to_laurent(flat.a_r);
    AlgebraElement a_rr = to_laurent(flat.a_rr);
    for (int k = -2; k <= 2; ++k) {
        for (int n = 0; n <= 3; ++n) {
            AlgebraElement psi = mul(AlgebraElement::r_pow(k), AlgebraElement::t_pow(n));
            AlgebraElement lhs = waveops::wave_extract(psi, model).wave_op().at_lam_zero();
            AlgebraElement rhs =
                -psi.dt_formal().dt_formal() +
                mul(a_r, ncalg::radial_derivative(psi)) +
                mul(a_rr, ncalg::radial_derivative(ncalg::radial_derivative(psi)));
            CHECK(lhs == rhs);
        }
    }

    // Schwarzschild spatial coefficients applied to r^-1 reproduce the
    // symbolic assembled operator's value -gam/r^4.
    RationalFunction F = RF("1 - gam/r");
    WaveCoeffs schw = classical_wave_coeffs(F, kOne / F, 0);
    RationalFunction rm1 = kOne / RF("r");
    RationalFunction spatial = schw.a_r * rm1.derivative() +
                               schw.a_rr * rm1.derivative().derivative();
    CHECK(spatial == RF("-gam/r^4"));
}

TEST_CASE("projector identities") {
    ProjectorReport rep = projector_identities();
    for (const auto& [name, ok] : rep.checks) {
        INFO(name);
        CHECK(ok);
    }
    CHECK(rep.all_pass());
}

TEST_CASE("ricci parser") {
    CHECK(RF("(1-gam/r)^2") == RF("1 - 2*gam/r + gam^2/r^2"));
    CHECK(RF("r^-2") == kOne / RF("r^2"));
    CHECK_THROWS(parse_ratfn("1 +"));
    CHECK_THROWS(parse_ratfn("x1"));
}
