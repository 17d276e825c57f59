#include "ncwave/symchecks.hpp"

#include "ncwave/clgeom.hpp"

#include <sstream>

namespace symchecks {

using ncalg::AlgebraElement;
using ncalg::BasisForm;
using ncalg::Coefficient;
using ncalg::FormSum;
using ncalg::ModelConfig;
using ncalg::Monomial;
using ncalg::Rational;
using ncalg::mul;

namespace {

ModelConfig beta_rpow(int m) { return ModelConfig::with_beta(AlgebraElement::r_pow(-m)); }

AlgebraElement lam_times(const AlgebraElement& e) {
    return e.scaled(Coefficient::lam());
}

std::vector<ModelConfig> table_models() {
    std::vector<ModelConfig> ms;
    ms.push_back(beta_rpow(0));
    ms.push_back(beta_rpow(1));
    ms.push_back(beta_rpow(2));
    ms.push_back(beta_rpow(3));
    AlgebraElement b = AlgebraElement::one() +
                       AlgebraElement::r_pow(-1).scaled(Coefficient::gam());
    ms.push_back(ModelConfig::with_beta(b));
    return ms;
}

}  // namespace

AlgebraElement random_element(Rng& rng, int max_terms, int tmax) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> xexp(0, 2), x3exp(0, 1), rexp(-2, 2), texp(0, tmax);
    std::uniform_int_distribution<int> numer(-4, 4), denom(1, 3), ppow(0, 1);
    AlgebraElement e;
    int terms = nterms(rng);
    for (int i = 0; i < terms; ++i) {
        int num = numer(rng);
        if (num == 0) num = 1;
        Monomial m{xexp(rng), xexp(rng), x3exp(rng), rexp(rng), texp(rng)};
        e.add_term(m, Coefficient(Rational(num, denom(rng)), ppow(rng), ppow(rng)));
    }
    return e;
}

AlgebraElement random_spatial(Rng& rng, int max_terms) {
    AlgebraElement e = random_element(rng, max_terms, 0);
    return e;
}

CheckResult associativity(Rng& rng, int cases) {
    for (int i = 0; i < cases; ++i) {
        AlgebraElement a = random_element(rng), b = random_element(rng),
                       c = random_element(rng);
        if (!(mul(mul(a, b), c) == mul(a, mul(b, c))))
            return {"associativity", false, i, "counterexample found"};
    }
    return {"associativity", true, cases, ""};
}

CheckResult distributivity(Rng& rng, int cases) {
    for (int i = 0; i < cases; ++i) {
        AlgebraElement a = random_element(rng), b = random_element(rng),
                       c = random_element(rng);
        if (!(mul(a, b + c) == mul(a, b) + mul(a, c)))
            return {"distributivity", false, i, "left distributivity failed"};
        if (!(mul(lam_times(a), b) == lam_times(mul(a, b))))
            return {"distributivity", false, i, "lam-linearity failed"};
    }
    return {"distributivity + lam-linearity", true, cases, ""};
}

CheckResult lambda_zero_commutative(Rng& rng, int cases) {
    for (int i = 0; i < cases; ++i) {
        AlgebraElement a = random_element(rng), b = random_element(rng);
        if (!(mul(a, b).at_lam_zero() == mul(b, a).at_lam_zero()))
            return {"lam=0 commutativity", false, i, "specialization not commutative"};
    }
    return {"lam=0 commutativity", true, cases, ""};
}

CheckResult relation_compatibility() {
    AlgebraElement rr = mul(AlgebraElement::r_pow(1), AlgebraElement::r_pow(1));
    AlgebraElement sum;
    for (int i = 1; i <= 3; ++i) sum += mul(AlgebraElement::x(i), AlgebraElement::x(i));
    bool ok = rr == sum;
    // and r * r^-1 = 1
    ok = ok && mul(AlgebraElement::r_pow(1), AlgebraElement::r_pow(-1)) ==
                   AlgebraElement::one();
    return {"r^2 = sum x_i^2 and r r^-1 = 1", ok, 2, ""};
}

CheckResult tau_derivation(Rng& rng, int cases) {
    for (int i = 0; i < cases; ++i) {
        AlgebraElement f = random_element(rng), g = random_element(rng);
        if (!(ncalg::tau(mul(f, g)) == mul(ncalg::tau(f), g) + mul(f, ncalg::tau(g))))
            return {"tau is a derivation", false, i, "Leibniz failed for tau"};
    }
    return {"tau is a derivation", true, cases, ""};
}

CheckResult right_module(Rng& rng, int cases) {
    ModelConfig model = beta_rpow(2);
    for (int i = 0; i < cases; ++i) {
        FormSum phi;
        phi[BasisForm::dx1] = random_element(rng, 2, 2);
        phi[BasisForm::dt] = random_element(rng, 1, 2);
        phi[BasisForm::theta_prime] = random_element(rng, 1, 2);
        AlgebraElement f = random_element(rng, 2, 2), g = random_element(rng, 2, 2);
        FormSum lhs = mul_right(mul_right(phi, f, model), g, model);
        FormSum rhs = mul_right(phi, mul(f, g), model);
        if (!(lhs == rhs)) return {"right module associativity", false, i, ""};
    }
    return {"right module associativity", true, cases, ""};
}

CheckResult leibniz(Rng& rng, int cases) {
    ModelConfig model = beta_rpow(2);
    for (int i = 0; i < cases; ++i) {
        AlgebraElement f = random_element(rng, 2, 2), g = random_element(rng, 2, 2);
        FormSum lhs = waveops::exterior_d(mul(f, g), model);
        FormSum rhs = mul_right(waveops::exterior_d(f, model), g, model) +
                      mul_left(f, waveops::exterior_d(g, model));
        if (!(lhs == rhs)) return {"Leibniz rule for d", false, i, ""};
        if (!lhs[BasisForm::theta_prime].divisible_by_lam(1))
            return {"Leibniz rule for d", false, i, "theta' coefficient not divisible by lam"};
    }
    return {"Leibniz rule for d (+ theta' divisibility)", true, cases, ""};
}

CheckResult delta0_table() {
    using waveops::delta0;
    int checked = 0;
    for (const ModelConfig& model : table_models()) {
        const AlgebraElement& beta = model.beta;
        if (!delta0(AlgebraElement::one(), model).is_zero())
            return {"Delta0 table", false, checked, "Delta0 1 != 0"};
        if (!delta0(AlgebraElement::t_pow(1), model).is_zero())
            return {"Delta0 table", false, checked, "Delta0 t != 0"};
        if (!(delta0(AlgebraElement::t_pow(2), model) == beta))
            return {"Delta0 table", false, checked, "Delta0 t^2 != beta"};
        // Delta0 t^3 = 3 beta t - 2 lam tau(beta) at alpha = 1
        AlgebraElement expect = mul(beta, AlgebraElement::t_pow(1)).scaled(Rational(3)) -
                                lam_times(ncalg::tau(beta)).scaled(Rational(2));
        if (!(delta0(AlgebraElement::t_pow(3), model) == expect))
            return {"Delta0 table", false, checked, "Delta0 t^3 mismatch"};
        checked += 4;
    }
    return {"Delta0 table (5 betas)", true, checked, ""};
}

CheckResult delta0_closed_vs_recursion() {
    int checked = 0;
    for (int m = -3; m <= 5; ++m) {
        ModelConfig model = beta_rpow(m);
        for (int n = 0; n <= 6; ++n) {
            AlgebraElement tn = AlgebraElement::t_pow(n);
            if (!(waveops::delta0_closed(tn, m) == waveops::delta0(tn, model))) {
                std::ostringstream os;
                os << "mismatch at m=" << m << " n=" << n;
                return {"Delta0 closed forms", false, checked, os.str()};
            }
            ++checked;
        }
    }
    return {"Delta0 closed forms = recursion (m=-3..5, n<=6)", true, checked, ""};
}

CheckResult dt_tn_commutator() {
    ModelConfig model = beta_rpow(2);
    const FormSum dt = FormSum::basis(BasisForm::dt);
    for (int n = 0; n <= 6; ++n) {
        AlgebraElement tn = AlgebraElement::t_pow(n);
        FormSum lhs = commutator(dt, tn, model);
        // ((t-lam)^n - t^n) dt + lam (Delta0 t^{n+1} - t Delta0 t^n) theta',
        // with (t-lam)^n - t^n = -lam partial0 t^n
        FormSum rhs;
        rhs[BasisForm::dt] = -lam_times(waveops::partial0(tn));
        rhs[BasisForm::theta_prime] =
            lam_times(waveops::delta0(AlgebraElement::t_pow(n + 1), model) -
                      mul(AlgebraElement::t_pow(1), waveops::delta0(tn, model)));
        if (!(lhs == rhs)) return {"[dt, t^n] identity", false, n, ""};
    }
    return {"[dt, t^n] identity (n<=6)", true, 7, ""};
}

CheckResult classical_limit(Rng& rng, int cases) {
    ModelConfig model = beta_rpow(1);
    for (int i = 0; i < cases; ++i) {
        AlgebraElement psi = random_element(rng, 3, 4);
        AlgebraElement box = waveops::wave_extract(psi, model).wave_op();
        AlgebraElement classical =
            ncalg::laplacian_flat(psi) + mul(model.beta, psi.dt_formal().dt_formal());
        if (!(box.at_lam_zero() == classical.at_lam_zero()))
            return {"classical limit of box", false, i, ""};
    }
    return {"classical limit of box", true, cases, ""};
}

CheckResult inner_element() {
    int checked = 0;
    for (int m : {-2, 0, 3, 4}) {
        ModelConfig model = beta_rpow(m);
        waveops::InnerElement ie = waveops::inner_theta(m);
        // defining first-order equations for mu, nu at alpha = 1
        if (!(ncalg::tau(ie.mu) == model.beta - ie.mu.scaled(Rational(2))))
            return {"inner element", false, checked, "tau(mu) equation failed"};
        if (!(ncalg::tau(ie.nu) == ie.mu - ie.nu))
            return {"inner element", false, checked, "tau(nu) equation failed"};
        // [theta, f] = -lam d f on monomials of total degree <= 3
        for (int a1 = 0; a1 <= 3; ++a1)
            for (int a2 = 0; a1 + a2 <= 3; ++a2)
                for (int a3 = 0; a3 <= 1 && a1 + a2 + a3 <= 3; ++a3)
                    for (int k = -3; k <= 3; ++k)
                        for (int n = 0; a1 + a2 + a3 + std::abs(k) + n <= 3; ++n) {
                            AlgebraElement f =
                                AlgebraElement::monomial(Monomial{a1, a2, a3, k, n});
                            FormSum lhs = commutator(ie.theta, f, model);
                            FormSum rhs = -waveops::exterior_d(f, model).scaled(
                                Coefficient::lam());
                            if (!(lhs == rhs)) {
                                std::ostringstream os;
                                os << "failed at m=" << m << " monomial (" << a1 << ","
                                   << a2 << "," << a3 << "," << k << "," << n << ")";
                                return {"inner element", false, checked, os.str()};
                            }
                            ++checked;
                        }
    }
    return {"inner element [theta,f] = -lam df", true, checked, ""};
}

CheckResult gauge_shift_checks() {
    ModelConfig model = beta_rpow(2);
    // h = r^-1: beta' = beta + tau(h) + 2h = beta + r^-1
    ModelConfig s1 = waveops::gauge_shift(AlgebraElement::r_pow(-1), model);
    bool ok = s1.beta == model.beta + AlgebraElement::r_pow(-1);
    // h = -mu for monomial beta: beta' = beta - tau(mu) - 2 mu
    waveops::InnerElement ie = waveops::inner_theta(3);
    ModelConfig model3 = beta_rpow(3);
    ModelConfig s2 = waveops::gauge_shift(-ie.mu, model3);
    ok = ok && s2.beta == model3.beta - ncalg::tau(ie.mu) - ie.mu.scaled(Rational(2));
    // h = 0 is the identity
    ModelConfig s3 = waveops::gauge_shift(AlgebraElement::zero(), model);
    ok = ok && s3.beta == model.beta;
    return {"gauge shift dt -> dt + h theta'", ok, 3, ""};
}

CheckResult d_relation_compatibility() {
    ModelConfig model = beta_rpow(1);
    AlgebraElement rr = mul(AlgebraElement::r_pow(1), AlgebraElement::r_pow(1));
    AlgebraElement sum;
    for (int i = 1; i <= 3; ++i) sum += mul(AlgebraElement::x(i), AlgebraElement::x(i));
    bool ok = waveops::exterior_d(rr, model) == waveops::exterior_d(sum, model);
    return {"d(r*r) = d(x1^2+x2^2+x3^2)", ok, 1, ""};
}

CheckResult projector_checks() {
    clgeom::ProjectorReport rep = clgeom::projector_identities();
    return {"projector identities", rep.all_pass(), int(rep.checks.size()), ""};
}

CheckResult ricci_flatness() {
    using clgeom::RationalFunction;
    RationalFunction one{Rational(1)};
    RationalFunction F = one - RationalFunction::gam() / RationalFunction::r();
    clgeom::RicciComponents ric = clgeom::ricci_static4(F, one / F);
    bool ok = ric.all_zero();
    clgeom::RicciComponents flat = clgeom::ricci_static4(one, one);
    ok = ok && flat.all_zero();
    return {"Ricci = 0 for F = 1 - gam/r, H = 1/F", ok, 2, ""};
}

CheckResult einstein_family() {
    using clgeom::RationalFunction;
    RationalFunction one{Rational(1)};
    RationalFunction H =
        one / (one + RationalFunction::K() * RationalFunction::r() * RationalFunction::r());
    bool ok = clgeom::einstein_residual(H).is_zero();
    ok = ok && clgeom::einstein_residual(one).is_zero();
    // Schwarzschild spatial slice is not Einstein
    RationalFunction Hs = one / (one - RationalFunction::gam() / RationalFunction::r());
    ok = ok && !clgeom::einstein_residual(Hs).is_zero();
    return {"Einstein residual family", ok, 3, ""};
}

std::vector<CheckResult> run_all(unsigned seed) {
    Rng rng(seed);
    std::vector<CheckResult> out;
    out.push_back(associativity(rng, 200));
    out.push_back(distributivity(rng, 100));
    out.push_back(lambda_zero_commutative(rng, 100));
    out.push_back(relation_compatibility());
    out.push_back(tau_derivation(rng, 200));
    out.push_back(right_module(rng, 60));
    out.push_back(leibniz(rng, 200));
    out.push_back(delta0_table());
    out.push_back(delta0_closed_vs_recursion());
    out.push_back(dt_tn_commutator());
    out.push_back(classical_limit(rng, 50));
    out.push_back(inner_element());
    out.push_back(gauge_shift_checks());
    out.push_back(d_relation_compatibility());
    out.push_back(projector_checks());
    out.push_back(ricci_flatness());
    out.push_back(einstein_family());
    return out;
}

}  // namespace symchecks
