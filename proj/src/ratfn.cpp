#include "ncwave/ratfn.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace clgeom {

namespace {
int key_var(const PolyKey& k, int v) { return v == 0 ? k.r : v == 1 ? k.gam : k.K; }
PolyKey with_var(PolyKey k, int v, int e) {
    (v == 0 ? k.r : v == 1 ? k.gam : k.K) = e;
    return k;
}
}  // namespace

Poly::Poly(Rational c) {
    if (c != 0) t_[PolyKey{}] = std::move(c);
}

Poly::Poly(Rational c, PolyKey k) {
    if (c != 0) t_[k] = std::move(c);
}

Poly Poly::r() { return Poly(Rational(1), PolyKey{1, 0, 0}); }
Poly Poly::gam() { return Poly(Rational(1), PolyKey{0, 1, 0}); }
Poly Poly::K() { return Poly(Rational(1), PolyKey{0, 0, 1}); }

bool Poly::is_constant() const {
    return t_.empty() || (t_.size() == 1 && t_.begin()->first == PolyKey{});
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [k, c] : o.t_) {
        auto it = t_.find(k);
        if (it == t_.end()) {
            t_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        }
    }
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [k, c] : o.t_) {
        auto it = t_.find(k);
        if (it == t_.end()) {
            t_.emplace(k, -c);
        } else {
            it->second -= c;
            if (it->second == 0) t_.erase(it);
        }
    }
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ka, ca] : a.t_)
        for (const auto& [kb, cb] : b.t_) {
            PolyKey k{ka.r + kb.r, ka.gam + kb.gam, ka.K + kb.K};
            auto it = out.t_.find(k);
            if (it == out.t_.end()) {
                out.t_.emplace(k, ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second == 0) out.t_.erase(it);
            }
        }
    return out;
}

Poly Poly::operator-() const {
    Poly out;
    for (const auto& [k, c] : t_) out.t_.emplace(k, -c);
    return out;
}

Poly Poly::scaled(const Rational& s) const {
    Poly out;
    if (s == 0) return out;
    for (const auto& [k, c] : t_) out.t_.emplace(k, c * s);
    return out;
}

Poly Poly::derivative_r() const {
    Poly out;
    for (const auto& [k, c] : t_) {
        if (k.r == 0) continue;
        out.t_.emplace(PolyKey{k.r - 1, k.gam, k.K}, c * Rational(k.r));
    }
    return out;
}

int Poly::degree(int v) const {
    int d = -1;
    for (const auto& [k, c] : t_) d = std::max(d, key_var(k, v));
    return d;
}

Poly Poly::leading_coeff(int v) const { return coeff_of(v, degree(v)); }

Poly Poly::coeff_of(int v, int e) const {
    Poly out;
    for (const auto& [k, c] : t_)
        if (key_var(k, v) == e) out.t_.emplace(with_var(k, v, 0), c);
    return out;
}

Poly Poly::times_var_pow(int v, int e) const {
    Poly out;
    for (const auto& [k, c] : t_)
        out.t_.emplace(with_var(k, v, key_var(k, v) + e), c);
    return out;
}

Rational Poly::leading_rational() const {
    if (t_.empty()) return Rational(0);
    return t_.rbegin()->second;
}

Poly divide_exact(const Poly& p, const Poly& q) {
    if (q.is_zero()) throw std::domain_error("divide_exact: division by zero polynomial");
    Poly rem = p, quot;
    // Eliminate the leading term (map order) of rem by a multiple of q's
    // leading term; exactness fails loudly.
    while (!rem.is_zero()) {
        const auto& [kr, cr] = *rem.terms().rbegin();
        const auto& [kq, cq] = *q.terms().rbegin();
        PolyKey kd{kr.r - kq.r, kr.gam - kq.gam, kr.K - kq.K};
        if (kd.r < 0 || kd.gam < 0 || kd.K < 0)
            throw std::logic_error("divide_exact: not divisible");
        Poly term(cr / cq, kd);
        quot += term;
        rem -= term * q;
    }
    return quot;
}

namespace {

// Lowest variable index occurring in p (3 if none).
int lowest_variable(const Poly& p) {
    int lo = 3;
    for (const auto& [k, c] : p.terms()) {
        if (k.r > 0) lo = std::min(lo, 0);
        if (k.gam > 0) lo = std::min(lo, 1);
        if (k.K > 0) lo = std::min(lo, 2);
    }
    return lo;
}

Poly content(const Poly& p, int v);

// Pseudo-remainder lc(b)^(deg a - deg b + 1) a mod b in variable v.
Poly prem(Poly a, const Poly& b, int v) {
    const int db = b.degree(v);
    const Poly lb = b.leading_coeff(v);
    int e = a.degree(v) - db + 1;
    while (!a.is_zero() && a.degree(v) >= db) {
        Poly la = a.leading_coeff(v);
        a = a * lb - la.times_var_pow(v, a.degree(v) - db) * b;
        --e;
    }
    for (; e > 0; --e) a = a * lb;
    return a;
}

// Subresultant pseudo-remainder sequence in variable v; both inputs have v.
// Contents are extracted once up front and once from the final candidate,
// which keeps the recursive coefficient gcds off the hot path.
Poly gcd_in_var(Poly a, Poly b, int v) {
    Poly ca = content(a, v), cb = content(b, v);
    Poly cg = poly_gcd(ca, cb);
    a = divide_exact(a, ca);
    b = divide_exact(b, cb);
    if (a.degree(v) < b.degree(v)) std::swap(a, b);
    Poly g(Rational(1)), h(Rational(1));
    for (;;) {
        int delta = a.degree(v) - b.degree(v);
        Poly r = prem(a, b, v);
        if (r.is_zero()) break;
        a = b;
        // b <- r / (g h^delta), exact by subresultant theory
        Poly divisor = g;
        for (int i = 0; i < delta; ++i) divisor = divisor * h;
        b = divide_exact(r, divisor);
        g = a.leading_coeff(v);
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            // h <- g^delta / h^{delta-1}
            Poly num(Rational(1)), den(Rational(1));
            for (int i = 0; i < delta; ++i) num = num * g;
            for (int i = 0; i < delta - 1; ++i) den = den * h;
            h = divide_exact(num, den);
        }
        if (b.degree(v) == 0) break;
    }
    Poly res = b.degree(v) == 0 && !b.is_zero() ? Poly(Rational(1))
                                                : divide_exact(b, content(b, v));
    Poly out = cg * res;
    return out.scaled(Rational(1) / out.leading_rational());
}

// Gcd of the coefficient polynomials of p viewed in variable v, normalized.
Poly content(const Poly& p, int v) {
    Poly g;
    for (int e = 0; e <= p.degree(v); ++e) {
        Poly c = p.coeff_of(v, e);
        if (c.is_zero()) continue;
        g = g.is_zero() ? c.scaled(Rational(1) / c.leading_rational()) : poly_gcd(g, c);
        if (g.is_constant()) return Poly(Rational(1));
    }
    if (g.is_zero()) return Poly(Rational(1));
    return g;
}

}  // namespace

Poly poly_gcd(Poly a, Poly b) {
    if (a.is_zero() && b.is_zero()) return Poly(Rational(0));
    if (a.is_zero()) return b.scaled(Rational(1) / b.leading_rational());
    if (b.is_zero()) return a.scaled(Rational(1) / a.leading_rational());
    if (a.is_constant() || b.is_constant()) return Poly(Rational(1));
    int v = std::min(lowest_variable(a), lowest_variable(b));
    // degree(v) == 0 on a nonzero poly means v does not occur in it; the gcd
    // then divides the other operand's content in v.
    if (a.degree(v) == 0) return poly_gcd(a, content(b, v));
    if (b.degree(v) == 0) return poly_gcd(content(a, v), b);
    return gcd_in_var(std::move(a), std::move(b), v);
}

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
    reduce();
}

RationalFunction RationalFunction::r() { return RationalFunction(Poly::r(), Poly(Rational(1))); }
RationalFunction RationalFunction::gam() { return RationalFunction(Poly::gam(), Poly(Rational(1))); }
RationalFunction RationalFunction::K() { return RationalFunction(Poly::K(), Poly(Rational(1))); }

void RationalFunction::reduce() {
    if (num_.is_zero()) {
        den_ = Poly(Rational(1));
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = divide_exact(num_, g);
        den_ = divide_exact(den_, g);
    }
    Rational lead = den_.leading_rational();
    num_ = num_.scaled(Rational(1) / lead);
    den_ = den_.scaled(Rational(1) / lead);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction out = *this;
    out.num_ = -out.num_;
    return out;
}

RationalFunction RationalFunction::derivative() const {
    return RationalFunction(num_.derivative_r() * den_ - num_ * den_.derivative_r(),
                            den_ * den_);
}

namespace {

double poly_eval(const Poly& p, double r, double gam, double K) {
    double s = 0.0;
    for (const auto& [k, c] : p.terms())
        s += static_cast<double>(c) * std::pow(r, k.r) * std::pow(gam, k.gam) *
             std::pow(K, k.K);
    return s;
}

std::string poly_str(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : p.terms()) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::vector<std::string> fs;
        auto pw = [&fs](const char* n, int e) {
            if (e == 0) return;
            fs.push_back(e == 1 ? std::string(n) : std::string(n) + "^" + std::to_string(e));
        };
        pw("r", k.r);
        pw("gam", k.gam);
        pw("K", k.K);
        bool wrote = false;
        if (fs.empty() || mag != 1) {
            os << mag;
            wrote = true;
        }
        for (const auto& f : fs) {
            if (wrote) os << "*";
            os << f;
            wrote = true;
        }
    }
    return os.str();
}

}  // namespace

double RationalFunction::eval(double r, double gam, double K) const {
    double den = poly_eval(den_, r, gam, K);
    if (den == 0.0) throw std::domain_error("RationalFunction::eval: pole");
    return poly_eval(num_, r, gam, K) / den;
}

std::string RationalFunction::str() const {
    if (den_ == Poly(Rational(1))) return poly_str(num_);
    return "(" + poly_str(num_) + ")/(" + poly_str(den_) + ")";
}

namespace {

struct RfToken {
    enum Kind { Number, Symbol, Plus, Minus, Star, Slash, Caret, LParen, RParen, End } kind;
    std::string text;
    std::size_t pos;
};

class RfParser {
  public:
    explicit RfParser(const std::string& s) : s_(s) { next(); }

    RationalFunction parse() {
        RationalFunction v = expr();
        if (tok_.kind != RfToken::End) fail("trailing input");
        return v;
    }

  private:
    [[noreturn]] void fail(const std::string& m) const {
        throw std::runtime_error(m + " (at position " + std::to_string(tok_.pos) + ")");
    }

    void next() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        std::size_t start = i_;
        if (i_ >= s_.size()) {
            tok_ = {RfToken::End, "", start};
            return;
        }
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string n;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
                n += s_[i_++];
            tok_ = {RfToken::Number, n, start};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string id;
            while (i_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_])))
                id += s_[i_++];
            tok_ = {RfToken::Symbol, id, start};
            return;
        }
        ++i_;
        RfToken::Kind k;
        switch (c) {
            case '+': k = RfToken::Plus; break;
            case '-': k = RfToken::Minus; break;
            case '*': k = RfToken::Star; break;
            case '/': k = RfToken::Slash; break;
            case '^': k = RfToken::Caret; break;
            case '(': k = RfToken::LParen; break;
            case ')': k = RfToken::RParen; break;
            default:
                throw std::runtime_error(std::string("unexpected character '") + c +
                                         "' (at position " + std::to_string(start) + ")");
        }
        tok_ = {k, std::string(1, c), start};
    }

    RationalFunction expr() {
        bool neg = false;
        if (tok_.kind == RfToken::Minus) {
            next();
            neg = true;
        }
        RationalFunction v = term();
        if (neg) v = -v;
        while (tok_.kind == RfToken::Plus || tok_.kind == RfToken::Minus) {
            bool minus = tok_.kind == RfToken::Minus;
            next();
            RationalFunction w = term();
            v = minus ? v - w : v + w;
        }
        return v;
    }

    RationalFunction term() {
        RationalFunction v = factor();
        while (tok_.kind == RfToken::Star || tok_.kind == RfToken::Slash) {
            bool div = tok_.kind == RfToken::Slash;
            next();
            RationalFunction w = factor();
            v = div ? v / w : v * w;
        }
        return v;
    }

    RationalFunction factor() {
        RationalFunction v = base();
        if (tok_.kind == RfToken::Caret) {
            next();
            bool neg = false;
            if (tok_.kind == RfToken::Minus) {
                next();
                neg = true;
            }
            if (tok_.kind != RfToken::Number) fail("expected integer exponent");
            int e = std::stoi(tok_.text);
            next();
            RationalFunction out(Rational(1));
            for (int i = 0; i < e; ++i) out = out * v;
            if (neg) out = RationalFunction(Rational(1)) / out;
            v = out;
        }
        return v;
    }

    RationalFunction base() {
        if (tok_.kind == RfToken::Number) {
            RationalFunction v{Rational(tok_.text)};
            next();
            return v;
        }
        if (tok_.kind == RfToken::Symbol) {
            std::string id = tok_.text;
            next();
            if (id == "r") return RationalFunction::r();
            if (id == "gam") return RationalFunction::gam();
            if (id == "K") return RationalFunction::K();
            throw std::runtime_error("unknown symbol '" + id + "'");
        }
        if (tok_.kind == RfToken::LParen) {
            next();
            RationalFunction v = expr();
            if (tok_.kind != RfToken::RParen) fail("expected ')'");
            next();
            return v;
        }
        fail("expected a number, symbol or '('");
    }

    const std::string& s_;
    std::size_t i_ = 0;
    RfToken tok_{RfToken::End, "", 0};
};

}  // namespace

RationalFunction parse_ratfn(const std::string& text) { return RfParser(text).parse(); }

}  // namespace clgeom
