#include "ncwave/clgeom.hpp"

namespace clgeom {

using ncalg::AlgebraElement;
using ncalg::Rational;

namespace {

const RationalFunction kOne{Rational(1)};
const RationalFunction kTwo{Rational(2)};

RationalFunction half(const RationalFunction& x) {
    return x * RationalFunction(Rational(1, 2));
}

// F'H'/(4FH) - F''/(2F) + F'^2/(4F^2), the square-root-free form of
// (f'h' - f''h)/(fh).
RationalFunction cross_term(const RationalFunction& F, const RationalFunction& H) {
    RationalFunction Fp = F.derivative(), Fpp = Fp.derivative(), Hp = H.derivative();
    RationalFunction four{Rational(4)};
    return Fp * Hp / (four * F * H) - Fpp / (kTwo * F) + Fp * Fp / (four * F * F);
}

}  // namespace

RicciComponents ricci_static4(const RationalFunction& F, const RationalFunction& H) {
    if (F.is_zero() || H.is_zero())
        throw std::domain_error("ricci_static4: F and H must be nonzero");
    const RationalFunction r = RationalFunction::r();
    RationalFunction Fp = F.derivative(), Hp = H.derivative();
    RationalFunction X = cross_term(F, H);

    RicciComponents out;
    out.c_ang = half(kOne / r) *
                (Fp / (kTwo * F * H) - Hp / (kTwo * H * H) - (kOne / r) * (kOne - kOne / H));
    out.c_rr = -half(X) - Hp / (kTwo * H * r);
    out.c_tt = half(F / H) * X - Fp / (kTwo * H * r);
    return out;
}

Ricci3 ricci_3(const RationalFunction& H) {
    RicciComponents full = ricci_static4(kOne, H);
    return Ricci3{full.c_ang, full.c_rr};
}

RationalFunction einstein_residual(const RationalFunction& H) {
    if (H.is_zero()) throw std::domain_error("einstein_residual: H must be nonzero");
    return RationalFunction::r() * H.derivative() - kTwo * H * (H - kOne);
}

WaveCoeffs classical_wave_coeffs(const RationalFunction& F, const RationalFunction& H,
                                 int l) {
    if (F.is_zero() || H.is_zero())
        throw std::domain_error("classical_wave_coeffs: F and H must be nonzero");
    if (l < 0) throw std::invalid_argument("classical_wave_coeffs: l must be >= 0");
    const RationalFunction r = RationalFunction::r();
    WaveCoeffs out;
    out.a_tt = -(kOne / F);
    out.a_r = (kOne / H) *
              (kTwo / r - H.derivative() / (kTwo * H) + F.derivative() / (kTwo * F));
    out.a_rr = kOne / H;
    out.a_ang = -(RationalFunction(Rational(l * (l + 1))) / (r * r));
    return out;
}

ProjectorReport projector_identities() {
    using ncalg::BasisForm;
    using ncalg::FormSum;

    // e_ij = delta_ij - x_i x_j / r^2 over the t-free sector of the algebra.
    std::array<std::array<AlgebraElement, 3>, 3> e;
    const AlgebraElement rm2 = AlgebraElement::r_pow(-2);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            AlgebraElement xx = mul(AlgebraElement::x(i + 1), AlgebraElement::x(j + 1));
            e[i][j] = -mul(xx, rm2);
            if (i == j) e[i][j] += AlgebraElement::one();
        }

    ProjectorReport rep;

    bool idem = true;
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) {
            AlgebraElement s;
            for (int j = 0; j < 3; ++j) s += mul(e[i][j], e[j][k]);
            if (!(s == e[i][k])) idem = false;
        }
    rep.checks.emplace_back("e^2 = e", idem);

    bool annih = true;
    for (int j = 0; j < 3; ++j) {
        AlgebraElement s;
        for (int i = 0; i < 3; ++i) s += mul(AlgebraElement::x(i + 1), e[i][j]);
        if (!s.is_zero()) annih = false;
    }
    rep.checks.emplace_back("x_i e_ij = 0", annih);

    AlgebraElement tr;
    for (int i = 0; i < 3; ++i) tr += e[i][i];
    rep.checks.emplace_back("trace(e) = 2", tr == AlgebraElement::from_rational(2));

    // w_i = e_ik dx_k; x_i w_i = 0 (left multiplications only).
    bool tangent = true;
    AlgebraElement sum_comp[3];
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            sum_comp[k] += mul(AlgebraElement::x(i + 1), e[i][k]);
    for (int k = 0; k < 3; ++k)
        if (!sum_comp[k].is_zero()) tangent = false;
    rep.checks.emplace_back("x_i w_i = 0", tangent);

    return rep;
}

bool ProjectorReport::all_pass() const {
    for (const auto& [name, ok] : checks)
        if (!ok) return false;
    return true;
}

}  // namespace clgeom
