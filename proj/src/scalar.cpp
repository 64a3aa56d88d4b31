#include "qch/scalar.hpp"

#include <cctype>
#include <sstream>

#include "qch/error.hpp"
#include "qch/vars.hpp"

namespace qch {

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero())
        throw DivisionByZero();
    canonicalize();
}

Scalar Scalar::variable(const std::string& name)
{
    auto id = Vars::instance().find(name);
    if (!id)
        throw DomainError("undeclared indeterminate '" + name + "'");
    return variable(*id);
}

Scalar Scalar::variable(unsigned var_id)
{
    Scalar s;
    s.num_ = Poly::variable(var_id);
    return s;
}

Scalar Scalar::q()
{
    return variable(Vars::instance().q());
}

Scalar Scalar::lambda()
{
    return q() - q().inverse();
}

void Scalar::canonicalize()
{
    if (num_.is_zero()) {
        den_ = Poly(Rat(1));
        return;
    }
    if (!den_.is_one()) {
        Poly g = poly_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = poly_exact_div(num_, g);
            den_ = poly_exact_div(den_, g);
        }
    }
    const Rat& lc = den_.leading_coeff();
    if (lc != 1) {
        Rat inv = Rat(1) / lc;
        num_ = num_.mul_rat(inv);
        den_ = den_.mul_rat(inv);
    }
}

Scalar Scalar::operator-() const
{
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const
{
    if (is_zero())
        return o;
    if (o.is_zero())
        return *this;
    Scalar r;
    if (den_.is_one() && o.den_.is_one()) {
        r.num_ = num_ + o.num_;
        r.den_ = Poly(Rat(1));
        return r;
    }
    Poly d = poly_gcd(den_, o.den_);
    if (d.is_one()) {
        r.num_ = num_ * o.den_ + o.num_ * den_;
        r.den_ = den_ * o.den_;
        if (r.num_.is_zero())
            r.den_ = Poly(Rat(1));
    } else {
        Poly t = num_ * poly_exact_div(o.den_, d) + o.num_ * poly_exact_div(den_, d);
        if (t.is_zero())
            return Scalar();
        Poly d2 = poly_gcd(t, d);
        r.num_ = d2.is_one() ? std::move(t) : poly_exact_div(t, d2);
        r.den_ = poly_exact_div(den_, d) * (d2.is_one() ? o.den_ : poly_exact_div(o.den_, d2));
    }
    // reduce to monic denominator
    const Rat& lc = r.den_.leading_coeff();
    if (lc != 1) {
        Rat inv = Rat(1) / lc;
        r.num_ = r.num_.mul_rat(inv);
        r.den_ = r.den_.mul_rat(inv);
    }
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const
{
    return *this + (-o);
}

Scalar Scalar::operator*(const Scalar& o) const
{
    if (is_zero() || o.is_zero())
        return Scalar();
    Scalar r;
    Poly an = num_, bd = o.den_, bn = o.num_, ad = den_;
    if (!bd.is_one()) {
        Poly g = poly_gcd(an, bd);
        if (!g.is_one()) {
            an = poly_exact_div(an, g);
            bd = poly_exact_div(bd, g);
        }
    }
    if (!ad.is_one()) {
        Poly g = poly_gcd(bn, ad);
        if (!g.is_one()) {
            bn = poly_exact_div(bn, g);
            ad = poly_exact_div(ad, g);
        }
    }
    r.num_ = an * bn;
    r.den_ = ad * bd;
    const Rat& lc = r.den_.leading_coeff();
    if (lc != 1) {
        Rat inv = Rat(1) / lc;
        r.num_ = r.num_.mul_rat(inv);
        r.den_ = r.den_.mul_rat(inv);
    }
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const
{
    return *this * o.inverse();
}

Scalar Scalar::inverse() const
{
    if (is_zero())
        throw DivisionByZero("inverse of zero");
    Scalar r;
    r.num_ = den_;
    r.den_ = num_;
    const Rat& lc = r.den_.leading_coeff();
    if (lc != 1) {
        Rat inv = Rat(1) / lc;
        r.num_ = r.num_.mul_rat(inv);
        r.den_ = r.den_.mul_rat(inv);
    }
    return r;
}

Scalar Scalar::pow(long e) const
{
    if (e == 0)
        return Scalar(1);
    Scalar base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? -static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
    Scalar r(1);
    while (n) {
        if (n & 1)
            r *= base;
        n >>= 1;
        if (n)
            base *= base;
    }
    return r;
}

namespace {

Scalar eval_poly(const Poly& p, const std::map<unsigned, Scalar>& bindings)
{
    Scalar acc;
    for (auto& [m, c] : p.terms()) {
        Scalar term{Rat(c)};
        for (auto& [v, e] : m.factors) {
            auto it = bindings.find(v);
            Scalar base = it != bindings.end() ? it->second : Scalar::variable(v);
            term *= base.pow(e);
        }
        acc += term;
    }
    return acc;
}

} // namespace

Scalar Scalar::substitute(const std::map<unsigned, Scalar>& bindings) const
{
    Scalar n = eval_poly(num_, bindings);
    Scalar d = eval_poly(den_, bindings);
    if (d.is_zero())
        throw PoleError("denominator vanishes under substitution: " + str());
    return n / d;
}

Scalar Scalar::substitute(const std::string& var, const Scalar& value) const
{
    auto id = Vars::instance().find(var);
    if (!id)
        throw DomainError("undeclared indeterminate '" + var + "'");
    return substitute(std::map<unsigned, Scalar>{{*id, value}});
}

std::string Scalar::str() const
{
    if (den_.is_one())
        return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

Scalar scalar_arith(const Scalar& a, const Scalar& b, ScalarOp op)
{
    switch (op) {
    case ScalarOp::add: return a + b;
    case ScalarOp::sub: return a - b;
    case ScalarOp::mul: return a * b;
    case ScalarOp::div: return a / b;
    }
    throw DomainError("bad ScalarOp");
}

/* ================= parser ================= */

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    Scalar run()
    {
        Scalar v = expr();
        skip_ws();
        if (pos_ != s_.size())
            throw ParseError("unexpected trailing input", pos_);
        return v;
    }

private:
    const std::string& s_;
    size_t pos_ = 0;

    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    char peek()
    {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool accept(char c)
    {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Scalar expr()
    {
        bool neg = accept('-');
        Scalar v = term();
        if (neg)
            v = -v;
        for (;;) {
            if (accept('+'))
                v += term();
            else if (accept('-'))
                v -= term();
            else
                return v;
        }
    }

    Scalar term()
    {
        Scalar v = factor();
        for (;;) {
            if (accept('*'))
                v *= factor();
            else if (accept('/')) {
                size_t at = pos_;
                Scalar d = factor();
                if (d.is_zero())
                    throw ParseError("division by zero", at);
                v /= d;
            } else
                return v;
        }
    }

    Scalar factor()
    {
        Scalar v = base();
        if (accept('^')) {
            long e = signed_int();
            if (e < 0 && v.is_zero())
                throw ParseError("zero to a negative power", pos_);
            v = v.pow(e);
        }
        return v;
    }

    long signed_int()
    {
        skip_ws();
        bool neg = accept('-');
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw ParseError("expected integer exponent", pos_);
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 1000000)
                throw ParseError("exponent too large", pos_);
            ++pos_;
        }
        return neg ? -v : v;
    }

    Scalar base()
    {
        skip_ws();
        if (pos_ >= s_.size())
            throw ParseError("unexpected end of input", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Scalar v = expr();
            if (!accept(')'))
                throw ParseError("expected ')'", pos_);
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int v(0);
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                v = v * 10 + (s_[pos_] - '0');
                ++pos_;
            }
            return Scalar(Rat(v));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            auto id = Vars::instance().find(name);
            if (!id)
                throw ParseError("undeclared indeterminate '" + name + "'", start);
            return Scalar::variable(*id);
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }
};

} // namespace

Scalar parse_scalar(const std::string& text)
{
    return Parser(text).run();
}

} // namespace qch
