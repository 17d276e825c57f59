#include "ncwave/forms.hpp"

namespace ncalg {

FormSum FormSum::basis(BasisForm b) {
    FormSum f;
    f[b] = AlgebraElement::one();
    return f;
}

FormSum FormSum::dr() {
    FormSum f;
    for (int i = 1; i <= 3; ++i)
        f[static_cast<BasisForm>(i - 1)] = mul(AlgebraElement::r_pow(-1), AlgebraElement::x(i));
    f[BasisForm::theta_prime] = AlgebraElement::r_pow(-1).scaled(Coefficient::lam());
    return f;
}

bool FormSum::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

FormSum& FormSum::operator+=(const FormSum& o) {
    for (int i = 0; i < 5; ++i) c_[i] += o.c_[i];
    return *this;
}

FormSum& FormSum::operator-=(const FormSum& o) {
    for (int i = 0; i < 5; ++i) c_[i] -= o.c_[i];
    return *this;
}

FormSum FormSum::operator-() const {
    FormSum out;
    for (int i = 0; i < 5; ++i) out.c_[i] = -c_[i];
    return out;
}

FormSum FormSum::scaled(const Coefficient& c) const {
    FormSum out;
    for (int i = 0; i < 5; ++i) out.c_[i] = c_[i].scaled(c);
    return out;
}

FormSum FormSum::scaled(const Rational& s) const {
    return scaled(Coefficient(s));
}

ModelConfig ModelConfig::with_beta(AlgebraElement b) {
    ModelConfig m;
    m.beta = std::move(b);
    m.validate();
    return m;
}

ModelConfig ModelConfig::with_beta_and_drift(AlgebraElement b, AlgebraElement q) {
    ModelConfig m;
    m.beta = std::move(b);
    m.drift = std::move(q);
    m.validate();
    return m;
}

void ModelConfig::validate() const {
    if (!beta.t_free() || !beta.x_free())
        throw std::invalid_argument("ModelConfig: beta must be a t-free Laurent polynomial in r");
    if (drift && (!drift->t_free() || !drift->x_free()))
        throw std::invalid_argument("ModelConfig: drift must be a t-free Laurent polynomial in r");
}

FormSum mul_left(const AlgebraElement& a, const FormSum& phi) {
    FormSum out;
    for (BasisForm b : kBasisForms) out[b] = mul(a, phi[b]);
    return out;
}

namespace {

// dt * t^m in canonical form, via dt t = t dt + lam beta th - lam dt.
FormSum dt_times_tpow(int m, const ModelConfig& model) {
    FormSum cur = FormSum::basis(BasisForm::dt);
    const AlgebraElement t = AlgebraElement::t_pow(1);
    for (int j = 1; j <= m; ++j) {
        FormSum next = mul_left(t, cur) - cur.scaled(Coefficient::lam());
        // lam beta th t^{j-1} = lam beta (t + alpha lam)^{j-1} th
        next[BasisForm::theta_prime] +=
            mul(model.beta, AlgebraElement::t_pow(j - 1).shifted_t(model.alpha))
                .scaled(Coefficient::lam());
        cur = next;
    }
    return cur;
}

// Push one basis form past a single monomial term c * s(x,r) * t^n.
FormSum push_basis(BasisForm b, const Monomial& m, const Coefficient& c,
                   const ModelConfig& model) {
    Monomial spatial = m;
    spatial.n = 0;
    const AlgebraElement s = AlgebraElement::monomial(spatial, c);
    const AlgebraElement st = AlgebraElement::monomial(m, c);

    switch (b) {
        case BasisForm::theta_prime: {
            FormSum out;
            out[BasisForm::theta_prime] = st.shifted_t(model.alpha);
            return out;
        }
        case BasisForm::dx1:
        case BasisForm::dx2:
        case BasisForm::dx3: {
            // dx_i s = s dx_i + lam (d_i s) th, and dx_i commutes with t.
            FormSum out;
            out[b] = st;
            const int i = static_cast<int>(b);
            AlgebraElement di = spatial_gradient(s)[i];
            if (!di.is_zero()) {
                AlgebraElement tail = mul(di, AlgebraElement::t_pow(m.n).shifted_t(model.alpha));
                out[BasisForm::theta_prime] += tail.scaled(Coefficient::lam());
            }
            return out;
        }
        case BasisForm::dt: {
            // dt s = s dt - lam dbar(s) - (lam^2/2)(lap s) th for t-free s,
            // then push the remaining dt past t^n.
            FormSum out = mul_left(s, dt_times_tpow(m.n, model));
            auto [ds, lap] = classical_d_and_laplacian(s);
            if (!ds.is_zero() || !lap.is_zero()) {
                const AlgebraElement tn = AlgebraElement::t_pow(m.n);
                for (int i = 0; i < 3; ++i) {
                    BasisForm bi = static_cast<BasisForm>(i);
                    out[bi] -= mul(ds[bi], tn).scaled(Coefficient::lam());
                }
                AlgebraElement tail = mul(lap, tn.shifted_t(model.alpha));
                out[BasisForm::theta_prime] -=
                    tail.scaled(Coefficient::lam(2) * Rational(1, 2));
            }
            return out;
        }
    }
    throw std::logic_error("push_basis: unreachable");
}

}  // namespace

FormSum mul_right(const FormSum& phi, const AlgebraElement& g, const ModelConfig& model) {
    FormSum out;
    for (BasisForm b : kBasisForms) {
        if (phi[b].is_zero()) continue;
        for (const auto& [m, c] : g.terms())
            out += mul_left(phi[b], push_basis(b, m, c, model));
    }
    return out;
}

FormSum form_normalize(
    const std::vector<std::tuple<AlgebraElement, BasisForm, AlgebraElement>>& terms,
    const ModelConfig& model) {
    FormSum out;
    for (const auto& [left, b, right] : terms)
        out += mul_left(left, mul_right(FormSum::basis(b), right, model));
    return out;
}

FormSum commutator(const FormSum& phi, const AlgebraElement& g, const ModelConfig& model) {
    return mul_right(phi, g, model) - mul_left(g, phi);
}

std::pair<FormSum, AlgebraElement> classical_d_and_laplacian(const AlgebraElement& f) {
    if (!f.t_free())
        throw std::invalid_argument("classical_d_and_laplacian: input must be t-free");
    FormSum d;
    auto grad = spatial_gradient(f);
    for (int i = 0; i < 3; ++i) d[static_cast<BasisForm>(i)] = grad[i];
    return {d, laplacian_flat(f)};
}

}  // namespace ncalg
