#include "ncwave/waveops.hpp"

namespace waveops {

using ncalg::BasisForm;
using ncalg::Coefficient;
using ncalg::Monomial;
using ncalg::Rational;

AlgebraElement partial0(const AlgebraElement& psi) {
    AlgebraElement diff = psi - psi.shifted_t(Rational(-1));
    return diff.div_lam(1);
}

namespace {

// Tables of partial0 t^j and Delta0 t^j up to the largest t power needed.
std::vector<AlgebraElement> delta0_table(int nmax, const ModelConfig& model) {
    std::vector<AlgebraElement> d0(nmax + 1), p0(nmax + 1);
    d0[0] = AlgebraElement::zero();
    p0[0] = AlgebraElement::zero();
    const AlgebraElement t_plus_alpha =
        AlgebraElement::t_pow(1).shifted_t(model.alpha);  // t + alpha lam
    for (int n = 1; n <= nmax; ++n) {
        p0[n] = partial0(AlgebraElement::t_pow(n));
        d0[n] = mul(d0[n - 1], t_plus_alpha) + mul(p0[n - 1], model.beta);
    }
    return d0;
}

// Split psi into sum_n f_n t^n and map each t^n through op (left-linearly).
AlgebraElement apply_tpow_table(const AlgebraElement& psi,
                                const std::vector<AlgebraElement>& table) {
    AlgebraElement out;
    for (const auto& [m, c] : psi.terms()) {
        Monomial spatial = m;
        spatial.n = 0;
        out += mul(AlgebraElement::monomial(spatial, c), table[m.n]);
    }
    return out;
}

}  // namespace

AlgebraElement delta0(const AlgebraElement& psi, const ModelConfig& model) {
    model.validate();
    return apply_tpow_table(psi, delta0_table(psi.max_t_power(), model));
}

AlgebraElement delta0_closed(const AlgebraElement& psi, int m) {
    AlgebraElement out;
    const AlgebraElement beta = AlgebraElement::r_pow(-m);
    for (const auto& [mon, c] : psi.terms()) {
        Monomial spatial = mon;
        spatial.n = 0;
        const AlgebraElement g = AlgebraElement::t_pow(mon.n);
        AlgebraElement val;
        if (m == 1) {
            AlgebraElement h = g.shifted_t(Rational(1));
            val = mul(beta, (h.dt_formal() - partial0(h)).div_lam(1));
        } else if (m == 2) {
            AlgebraElement h2 = g.shifted_t(Rational(2));
            AlgebraElement h1 = g.shifted_t(Rational(1));
            val = mul(beta, (partial0(h2) - h1.dt_formal()).div_lam(1));
        } else {
            AlgebraElement num = g.shifted_t(Rational(1)) +
                                 g.shifted_t(Rational(m - 1)).scaled(Rational(1 - m)) -
                                 g.shifted_t(Rational(m)).scaled(Rational(2 - m));
            val = mul(beta, num.div_lam(2)).scaled(Rational(1) / Rational((2 - m) * (1 - m)));
        }
        out += mul(AlgebraElement::monomial(spatial, c), val);
    }
    return out;
}

FormSum exterior_d(const AlgebraElement& psi, const ModelConfig& model) {
    model.validate();
    FormSum d;
    const Rational half(1, 2);
    for (const auto& [m, c] : psi.terms()) {
        Monomial spatial = m;
        spatial.n = 0;
        const AlgebraElement s = AlgebraElement::monomial(spatial, c);
        auto grad = spatial_gradient(s);
        const AlgebraElement tn = AlgebraElement::t_pow(m.n);
        for (int i = 0; i < 3; ++i)
            d[static_cast<BasisForm>(i)] += mul(grad[i], tn);
        // (lam/2) th (lap psi) = (lam/2)(lap s)(t + alpha lam)^n th
        AlgebraElement lap = laplacian_flat(s);
        if (!lap.is_zero())
            d[BasisForm::theta_prime] +=
                mul(lap, tn.shifted_t(model.alpha)).scaled(Coefficient::lam() * half);
    }
    d[BasisForm::dt] += partial0(psi);
    d[BasisForm::theta_prime] += delta0(psi, model).scaled(Coefficient::lam());
    return d;
}

AlgebraElement WaveDecomposition::wave_op() const {
    return theta_coeff.div_lam(1).scaled(Rational(2));
}

WaveDecomposition wave_extract(const AlgebraElement& psi, const ModelConfig& model) {
    FormSum d = exterior_d(psi, model);
    WaveDecomposition w;
    for (int i = 0; i < 3; ++i) {
        BasisForm b = static_cast<BasisForm>(i);
        w.spatial[b] = d[b];
    }
    w.dt_coeff = d[BasisForm::dt];
    w.theta_coeff = d[BasisForm::theta_prime];
    if (!w.theta_coeff.divisible_by_lam(1))
        throw std::logic_error(
            "wave_extract: theta' coefficient not divisible by lam (rewriting bug)");
    return w;
}

AlgebraElement angular_laplacian(const AlgebraElement& psi) {
    AlgebraElement t = tau(psi);
    AlgebraElement t2 = tau(t);
    return laplacian_flat(psi) - mul(AlgebraElement::r_pow(-2), t2 + t);
}

AlgebraElement wave_assembled(const AlgebraElement& psi, const ModelConfig& model,
                              Geometry geometry) {
    model.validate();
    AlgebraElement spatial;
    switch (geometry) {
        case Geometry::flat:
            spatial = laplacian_flat(psi);
            break;
        case Geometry::flat_drift: {
            if (!model.drift)
                throw std::invalid_argument("wave_assembled: drift q(r) required");
            spatial = laplacian_flat(psi) - mul(*model.drift, radial_derivative(psi));
            break;
        }
        case Geometry::schwarzschild_laurent: {
            const AlgebraElement gam_term =
                AlgebraElement::r_pow(-2).scaled(Coefficient::gam());
            AlgebraElement dr = radial_derivative(psi);
            AlgebraElement drr = radial_derivative(dr);
            spatial = mul(AlgebraElement::r_pow(-1).scaled(Rational(2)) - gam_term, dr) +
                      mul(AlgebraElement::one() -
                              AlgebraElement::r_pow(-1).scaled(Coefficient::gam()),
                          drr) +
                      angular_laplacian(psi);
            break;
        }
    }
    return delta0(psi, model).scaled(Rational(2)) + spatial.shifted_t(model.alpha);
}

InnerElement inner_theta(int m) {
    if (m == 1 || m == 2)
        throw std::invalid_argument(
            "inner_theta: m = 1, 2 need log r in mu, nu, outside the Laurent ring");
    InnerElement ie;
    ie.mu = AlgebraElement::r_pow(-m).scaled(Rational(1) / Rational(2 - m));
    ie.nu = AlgebraElement::r_pow(-m).scaled(Rational(1) / Rational((2 - m) * (1 - m)));
    ie.theta = FormSum::basis(BasisForm::dt);
    ie.theta[BasisForm::theta_prime] = -(ie.mu + ie.nu);
    return ie;
}

ModelConfig gauge_shift(const AlgebraElement& h, const ModelConfig& model) {
    if (!h.t_free() || !h.x_free())
        throw std::invalid_argument("gauge_shift: h must be a t-free Laurent polynomial in r");
    ModelConfig shifted;
    shifted.alpha = model.alpha;
    shifted.beta = model.beta + tau(h) + h.scaled(model.alpha + Rational(1));
    shifted.validate();

    // The image of dt is dt' - h th; its commutator with t in the shifted
    // calculus must equal the image of [dt, t] = lam beta th - lam dt.
    FormSum phi_dt = FormSum::basis(BasisForm::dt);
    phi_dt[BasisForm::theta_prime] = -h;
    FormSum lhs = commutator(phi_dt, AlgebraElement::t_pow(1), shifted);
    FormSum rhs = -phi_dt.scaled(Coefficient::lam());
    rhs[BasisForm::theta_prime] += model.beta.scaled(Coefficient::lam());
    if (!(lhs == rhs))
        throw std::logic_error("gauge_shift: bimodule consistency check failed");
    return shifted;
}

}  // namespace waveops
