#include "ncwave/expr.hpp"

#include <cctype>
#include <sstream>

namespace ncalg {

namespace {

struct Token {
    enum Kind { Number, Symbol, Plus, Minus, Star, Caret, LParen, RParen, End } kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
  public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

  private:
    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        std::size_t start = i_;
        if (i_ >= s_.size()) {
            tok_ = {Token::End, "", start};
            return;
        }
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
                num += s_[i_++];
            if (i_ < s_.size() && s_[i_] == '/') {
                std::size_t save = i_;
                ++i_;
                std::string den;
                while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
                    den += s_[i_++];
                if (den.empty()) {
                    i_ = save;
                } else {
                    num += '/' + den;
                }
            }
            tok_ = {Token::Number, num, start};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string id;
            while (i_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[i_])))) id += s_[i_++];
            tok_ = {Token::Symbol, id, start};
            return;
        }
        ++i_;
        switch (c) {
            case '+': tok_ = {Token::Plus, "+", start}; return;
            case '-': tok_ = {Token::Minus, "-", start}; return;
            case '*': tok_ = {Token::Star, "*", start}; return;
            case '^': tok_ = {Token::Caret, "^", start}; return;
            case '(': tok_ = {Token::LParen, "(", start}; return;
            case ')': tok_ = {Token::RParen, ")", start}; return;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }

    const std::string& s_;
    std::size_t i_ = 0;
    Token tok_{Token::End, "", 0};
};

// A parsed value of form degree 0 or 1.
struct Value {
    bool is_form = false;
    AlgebraElement a;
    FormSum f;

    static Value element(AlgebraElement e) { return {false, std::move(e), {}}; }
    static Value form(FormSum ff) { return {true, {}, std::move(ff)}; }
};

class Parser {
  public:
    Parser(const std::string& s, const ModelConfig& model) : lex_(s), model_(model) {}

    Value parse_all() {
        Value v = expr();
        if (lex_.peek().kind != Token::End)
            throw ParseError("trailing input", lex_.peek().pos);
        return v;
    }

  private:
    Value expr() {
        bool neg = false;
        if (lex_.peek().kind == Token::Minus) {
            lex_.take();
            neg = true;
        }
        Value v = term();
        if (neg) v = negate(v);
        while (lex_.peek().kind == Token::Plus || lex_.peek().kind == Token::Minus) {
            Token op = lex_.take();
            Value w = term();
            v = add(v, op.kind == Token::Minus ? negate(w) : w, op.pos);
        }
        return v;
    }

    Value term() {
        Value v = factor();
        while (lex_.peek().kind == Token::Star) {
            Token op = lex_.take();
            Value w = factor();
            v = multiply(v, w, op.pos);
        }
        return v;
    }

    Value factor() {
        Token baseTok = lex_.peek();
        Value v = base();
        if (lex_.peek().kind == Token::Caret) {
            lex_.take();
            int e = exponent();
            v = power(v, e, baseTok);
        }
        return v;
    }

    int exponent() {
        bool neg = false;
        if (lex_.peek().kind == Token::Minus) {
            lex_.take();
            neg = true;
        }
        Token t = lex_.peek();
        if (t.kind != Token::Number || t.text.find('/') != std::string::npos)
            throw ParseError("expected integer exponent", t.pos);
        lex_.take();
        int v = std::stoi(t.text);
        return neg ? -v : v;
    }

    Value base() {
        Token t = lex_.peek();
        switch (t.kind) {
            case Token::Number: {
                lex_.take();
                return Value::element(AlgebraElement::from_rational(Rational(t.text)));
            }
            case Token::Symbol: {
                lex_.take();
                return symbol(t);
            }
            case Token::LParen: {
                lex_.take();
                Value v = expr();
                if (lex_.peek().kind != Token::RParen)
                    throw ParseError("expected ')'", lex_.peek().pos);
                lex_.take();
                return v;
            }
            default:
                throw ParseError("expected a number, symbol or '('", t.pos);
        }
    }

    Value symbol(const Token& t) {
        const std::string& s = t.text;
        if (s == "x1") return Value::element(AlgebraElement::x(1));
        if (s == "x2") return Value::element(AlgebraElement::x(2));
        if (s == "x3") return Value::element(AlgebraElement::x(3));
        if (s == "r") return Value::element(AlgebraElement::r_pow(1));
        if (s == "t") return Value::element(AlgebraElement::t_pow(1));
        if (s == "lam")
            return Value::element(AlgebraElement::from_coefficient(Coefficient::lam()));
        if (s == "gam")
            return Value::element(AlgebraElement::from_coefficient(Coefficient::gam()));
        if (s == "dx1") return Value::form(FormSum::basis(BasisForm::dx1));
        if (s == "dx2") return Value::form(FormSum::basis(BasisForm::dx2));
        if (s == "dx3") return Value::form(FormSum::basis(BasisForm::dx3));
        if (s == "dt") return Value::form(FormSum::basis(BasisForm::dt));
        if (s == "th") return Value::form(FormSum::basis(BasisForm::theta_prime));
        throw ParseError("unknown symbol '" + s + "'", t.pos);
    }

    Value negate(Value v) {
        if (v.is_form) v.f = -v.f;
        else v.a = -v.a;
        return v;
    }

    Value add(Value a, const Value& b, std::size_t pos) {
        if (a.is_form != b.is_form)
            throw ParseError("cannot add a function and a 1-form", pos);
        if (a.is_form) a.f += b.f;
        else a.a += b.a;
        return a;
    }

    Value multiply(const Value& a, const Value& b, std::size_t pos) {
        if (a.is_form && b.is_form)
            throw ParseError("wedge not supported", pos);
        if (a.is_form) return Value::form(mul_right(a.f, b.a, model_));
        if (b.is_form) return Value::form(mul_left(a.a, b.f));
        return Value::element(mul(a.a, b.a));
    }

    Value power(const Value& v, int e, const Token& baseTok) {
        if (v.is_form) {
            if (e != 1)
                throw ParseError("exponents on basis forms must be 1", baseTok.pos);
            return v;
        }
        if (e < 0) {
            // Negative exponents only on (powers of) r.
            bool pure_r = !v.a.is_zero();
            for (const auto& [m, c] : v.a.terms())
                if (m.a1 || m.a2 || m.a3 || m.n || c != Coefficient::one()) pure_r = false;
            if (!pure_r || v.a.terms().size() != 1)
                throw ParseError("negative exponents permitted only on r", baseTok.pos);
            int k = v.a.terms().begin()->first.k;
            return Value::element(AlgebraElement::r_pow(k * e));
        }
        AlgebraElement out = AlgebraElement::one();
        for (int i = 0; i < e; ++i) out = mul(out, v.a);
        return Value::element(out);
    }

    Lexer lex_;
    const ModelConfig& model_;
};

std::string rational_str(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

// One scalar term: sign, rational magnitude, factor list.
void append_term(std::ostringstream& os, bool& first, const Rational& q,
                 const std::vector<std::string>& factors) {
    Rational mag = q < 0 ? Rational(-q) : q;
    if (first) {
        if (q < 0) os << "-";
        first = false;
    } else {
        os << (q < 0 ? " - " : " + ");
    }
    bool need_num = factors.empty() || mag != 1;
    bool wrote = false;
    if (need_num) {
        os << rational_str(mag);
        wrote = true;
    }
    for (const auto& f : factors) {
        if (wrote) os << "*";
        os << f;
        wrote = true;
    }
}

std::vector<std::string> monomial_factors(const ParamPow& p, const Monomial& m) {
    std::vector<std::string> fs;
    auto pw = [&fs](const char* name, int e) {
        if (e == 0) return;
        if (e == 1) fs.push_back(name);
        else fs.push_back(std::string(name) + "^" + std::to_string(e));
    };
    pw("lam", p.lam);
    pw("gam", p.gam);
    pw("x1", m.a1);
    pw("x2", m.a2);
    pw("x3", m.a3);
    pw("r", m.k);
    pw("t", m.n);
    return fs;
}

}  // namespace

Parsed parse(const std::string& text, const ModelConfig& model) {
    Value v = Parser(text, model).parse_all();
    if (v.is_form) return v.f;
    return v.a;
}

AlgebraElement parse_element(const std::string& text, const ModelConfig& model) {
    Parsed p = parse(text, model);
    if (std::holds_alternative<FormSum>(p))
        throw ParseError("expected a degree-0 expression", 0);
    return std::get<AlgebraElement>(p);
}

std::string format(const AlgebraElement& e) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : e.terms())
        for (const auto& [p, q] : c.terms())
            append_term(os, first, q, monomial_factors(p, m));
    return os.str();
}

std::string format(const FormSum& f) {
    if (f.is_zero()) return "0";
    static const char* names[5] = {"dx1", "dx2", "dx3", "dt", "th"};
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < 5; ++i) {
        const AlgebraElement& c = f[static_cast<BasisForm>(i)];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << format(c) << ")*" << names[i];
    }
    return os.str();
}

std::string format(const Parsed& p) {
    if (std::holds_alternative<FormSum>(p)) return format(std::get<FormSum>(p));
    return format(std::get<AlgebraElement>(p));
}

}  // namespace ncalg
