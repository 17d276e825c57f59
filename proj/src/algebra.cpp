#include "ncwave/algebra.hpp"

namespace ncalg {

Rational binomial(int n, int k) {
    if (k < 0 || k > n) return Rational(0);
    boost::multiprecision::cpp_int num = 1, den = 1;
    for (int j = 0; j < k; ++j) {
        num *= n - j;
        den *= j + 1;
    }
    return Rational(num / den);
}

Coefficient::Coefficient(Rational c) {
    if (c != 0) t_[ParamPow{}] = std::move(c);
}

Coefficient::Coefficient(Rational c, int lam_pow, int gam_pow) {
    if (lam_pow < 0 || gam_pow < 0) throw std::invalid_argument("negative parameter power");
    if (c != 0) t_[ParamPow{lam_pow, gam_pow}] = std::move(c);
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
    for (const auto& [p, c] : o.t_) {
        auto it = t_.find(p);
        if (it == t_.end()) {
            t_.emplace(p, c);
        } else {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        }
    }
    return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) {
    for (const auto& [p, c] : o.t_) {
        auto it = t_.find(p);
        if (it == t_.end()) {
            t_.emplace(p, -c);
        } else {
            it->second -= c;
            if (it->second == 0) t_.erase(it);
        }
    }
    return *this;
}

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
    Coefficient out;
    for (const auto& [pa, ca] : a.t_)
        for (const auto& [pb, cb] : b.t_) {
            ParamPow p{pa.lam + pb.lam, pa.gam + pb.gam};
            auto it = out.t_.find(p);
            if (it == out.t_.end()) {
                out.t_.emplace(p, ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second == 0) out.t_.erase(it);
            }
        }
    return out;
}

Coefficient Coefficient::operator-() const {
    Coefficient out;
    for (const auto& [p, c] : t_) out.t_.emplace(p, -c);
    return out;
}

Coefficient& Coefficient::operator*=(const Rational& s) {
    if (s == 0) {
        t_.clear();
        return *this;
    }
    for (auto& [p, c] : t_) c *= s;
    return *this;
}

Coefficient Coefficient::times_lam(int p) const {
    if (p < 0) throw std::invalid_argument("times_lam: negative power");
    Coefficient out;
    for (const auto& [pp, c] : t_) out.t_.emplace(ParamPow{pp.lam + p, pp.gam}, c);
    return out;
}

bool Coefficient::divisible_by_lam(int p) const {
    for (const auto& [pp, c] : t_)
        if (pp.lam < p) return false;
    return true;
}

Coefficient Coefficient::div_lam(int p) const {
    Coefficient out;
    for (const auto& [pp, c] : t_) {
        if (pp.lam < p) throw std::logic_error("div_lam: nonzero remainder");
        out.t_.emplace(ParamPow{pp.lam - p, pp.gam}, c);
    }
    return out;
}

Coefficient Coefficient::at_lam_zero() const {
    Coefficient out;
    for (const auto& [pp, c] : t_)
        if (pp.lam == 0) out.t_.emplace(pp, c);
    return out;
}

AlgebraElement AlgebraElement::from_rational(Rational c) {
    AlgebraElement e;
    e.add_term(Monomial{}, Coefficient(std::move(c)));
    return e;
}

AlgebraElement AlgebraElement::from_coefficient(Coefficient c) {
    AlgebraElement e;
    e.add_term(Monomial{}, std::move(c));
    return e;
}

AlgebraElement AlgebraElement::x(int i) {
    if (i < 1 || i > 3) throw std::invalid_argument("x(i): i must be 1, 2 or 3");
    Monomial m;
    if (i == 1) m.a1 = 1;
    if (i == 2) m.a2 = 1;
    if (i == 3) m.a3 = 1;
    AlgebraElement e;
    e.add_term(m, Coefficient::one());
    return e;
}

AlgebraElement AlgebraElement::r_pow(int k) {
    AlgebraElement e;
    e.add_term(Monomial{0, 0, 0, k, 0}, Coefficient::one());
    return e;
}

AlgebraElement AlgebraElement::t_pow(int n) {
    if (n < 0) throw std::invalid_argument("t_pow: negative power");
    AlgebraElement e;
    e.add_term(Monomial{0, 0, 0, 0, n}, Coefficient::one());
    return e;
}

AlgebraElement AlgebraElement::monomial(Monomial m, Coefficient c) {
    AlgebraElement e;
    e.add_term(m, std::move(c));
    return e;
}

void AlgebraElement::add_term(const Monomial& m, const Coefficient& c) {
    if (c.is_zero()) return;
    if (m.a1 < 0 || m.a2 < 0 || m.a3 < 0 || m.n < 0)
        throw std::invalid_argument("add_term: negative exponent on x or t");
    if (m.a3 >= 2) {
        // x3^2 = r^2 - x1^2 - x2^2
        Monomial rr = m, m1 = m, m2 = m;
        rr.a3 -= 2;
        rr.k += 2;
        m1.a3 -= 2;
        m1.a1 += 2;
        m2.a3 -= 2;
        m2.a2 += 2;
        add_term(rr, c);
        add_term(m1, -c);
        add_term(m2, -c);
        return;
    }
    auto it = t_.find(m);
    if (it == t_.end()) {
        t_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement out;
    for (const auto& [m, c] : t_) out.t_.emplace(m, -c);
    return out;
}

AlgebraElement AlgebraElement::scaled(const Coefficient& c) const {
    AlgebraElement out;
    if (c.is_zero()) return out;
    for (const auto& [m, mc] : t_) {
        Coefficient p = mc * c;
        if (!p.is_zero()) out.t_.emplace(m, std::move(p));
    }
    return out;
}

AlgebraElement AlgebraElement::scaled(const Rational& s) const {
    return scaled(Coefficient(s));
}

AlgebraElement AlgebraElement::shifted_t(const Rational& shift) const {
    if (shift == 0) return *this;
    AlgebraElement out;
    for (const auto& [m, c] : t_) {
        // t^n -> (t + shift*lam)^n
        Rational pw = 1;
        for (int j = m.n; j >= 0; --j) {
            // coefficient of t^j: binom(n,j) * shift^(n-j) * lam^(n-j)
            Monomial mj = m;
            mj.n = j;
            Coefficient cj = c * (binomial(m.n, j) * pw);
            out.add_term(mj, cj.times_lam(m.n - j));
            pw *= shift;
        }
    }
    return out;
}

bool AlgebraElement::t_free() const {
    for (const auto& [m, c] : t_)
        if (m.n != 0) return false;
    return true;
}

bool AlgebraElement::x_free() const {
    for (const auto& [m, c] : t_)
        if (m.a1 || m.a2 || m.a3) return false;
    return true;
}

int AlgebraElement::max_t_power() const {
    int n = 0;
    for (const auto& [m, c] : t_) n = std::max(n, m.n);
    return n;
}

AlgebraElement AlgebraElement::dt_formal() const {
    AlgebraElement out;
    for (const auto& [m, c] : t_) {
        if (m.n == 0) continue;
        Monomial md = m;
        md.n -= 1;
        out.add_term(md, c * Rational(m.n));
    }
    return out;
}

bool AlgebraElement::divisible_by_lam(int p) const {
    for (const auto& [m, c] : t_)
        if (!c.divisible_by_lam(p)) return false;
    return true;
}

AlgebraElement AlgebraElement::div_lam(int p) const {
    AlgebraElement out;
    for (const auto& [m, c] : t_) out.t_.emplace(m, c.div_lam(p));
    return out;
}

AlgebraElement AlgebraElement::at_lam_zero() const {
    AlgebraElement out;
    for (const auto& [m, c] : t_) {
        Coefficient c0 = c.at_lam_zero();
        if (!c0.is_zero()) out.t_.emplace(m, std::move(c0));
    }
    return out;
}

AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement out;
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            Coefficient cab = ca * cb;
            const int shift = mb.spatial_degree();
            // t^{na} x^b r^l = x^b r^l (t - shift*lam)^{na}
            Monomial base;
            base.a1 = ma.a1 + mb.a1;
            base.a2 = ma.a2 + mb.a2;
            base.a3 = ma.a3 + mb.a3;
            base.k = ma.k + mb.k;
            if (shift == 0 || ma.n == 0) {
                base.n = ma.n + mb.n;
                out.add_term(base, cab);
                continue;
            }
            Rational pw = 1;  // (-shift)^(na-j)
            for (int j = ma.n; j >= 0; --j) {
                Monomial mj = base;
                mj.n = j + mb.n;
                Coefficient cj = cab * (binomial(ma.n, j) * pw);
                out.add_term(mj, cj.times_lam(ma.n - j));
                pw *= -shift;
            }
        }
    }
    return out;
}

AlgebraElement canonicalize(const std::vector<std::pair<Monomial, Coefficient>>& raw) {
    AlgebraElement out;
    for (const auto& [m, c] : raw) out.add_term(m, c);
    return out;
}

AlgebraElement tau(const AlgebraElement& f) {
    AlgebraElement out;
    for (const auto& [m, c] : f.terms()) {
        int d = m.spatial_degree();
        if (d != 0) out.add_term(m, c * Rational(d));
    }
    return out;
}

std::array<AlgebraElement, 3> spatial_gradient(const AlgebraElement& f) {
    std::array<AlgebraElement, 3> g;
    for (const auto& [m, c] : f.terms()) {
        const int ax[3] = {m.a1, m.a2, m.a3};
        for (int i = 0; i < 3; ++i) {
            // d/dx_i (x^a r^k) = a_i x^{a-e_i} r^k + k x^{a+e_i} r^{k-2}
            if (ax[i] > 0) {
                Monomial md = m;
                (i == 0 ? md.a1 : i == 1 ? md.a2 : md.a3) -= 1;
                g[i].add_term(md, c * Rational(ax[i]));
            }
            if (m.k != 0) {
                Monomial md = m;
                (i == 0 ? md.a1 : i == 1 ? md.a2 : md.a3) += 1;
                md.k -= 2;
                g[i].add_term(md, c * Rational(m.k));
            }
        }
    }
    return g;
}

AlgebraElement laplacian_flat(const AlgebraElement& f) {
    AlgebraElement out;
    auto g = spatial_gradient(f);
    for (int i = 0; i < 3; ++i) out += spatial_gradient(g[i])[i];
    return out;
}

AlgebraElement radial_derivative(const AlgebraElement& f) {
    return mul(AlgebraElement::r_pow(-1), tau(f));
}

}  // namespace ncalg
