#include "qch/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "qch/error.hpp"
#include "qch/vars.hpp"

namespace qch {

/* ================= monomials ================= */

unsigned Monomial::degree() const
{
    unsigned d = 0;
    for (auto& f : factors)
        d += f.second;
    return d;
}

unsigned Monomial::exponent_of(unsigned var) const
{
    for (auto& f : factors)
        if (f.first == var)
            return f.second;
    return 0;
}

int mono_cmp(const Monomial& a, const Monomial& b)
{
    unsigned da = a.degree(), db = b.degree();
    if (da != db)
        return da < db ? -1 : 1;
    // lex on exponent vectors, earliest variable most significant
    size_t i = 0, j = 0;
    while (i < a.factors.size() && j < b.factors.size()) {
        unsigned va = a.factors[i].first, vb = b.factors[j].first;
        if (va != vb)
            return va < vb ? 1 : -1; // positive exponent on an earlier var wins
        if (a.factors[i].second != b.factors[j].second)
            return a.factors[i].second > b.factors[j].second ? 1 : -1;
        ++i;
        ++j;
    }
    if (i < a.factors.size())
        return 1;
    if (j < b.factors.size())
        return -1;
    return 0;
}

Monomial mono_mul(const Monomial& a, const Monomial& b)
{
    Monomial r;
    r.factors.reserve(a.factors.size() + b.factors.size());
    size_t i = 0, j = 0;
    while (i < a.factors.size() && j < b.factors.size()) {
        unsigned va = a.factors[i].first, vb = b.factors[j].first;
        if (va < vb)
            r.factors.push_back(a.factors[i++]);
        else if (vb < va)
            r.factors.push_back(b.factors[j++]);
        else {
            r.factors.emplace_back(va, a.factors[i].second + b.factors[j].second);
            ++i;
            ++j;
        }
    }
    for (; i < a.factors.size(); ++i)
        r.factors.push_back(a.factors[i]);
    for (; j < b.factors.size(); ++j)
        r.factors.push_back(b.factors[j]);
    return r;
}

bool mono_divides(const Monomial& a, const Monomial& b)
{
    size_t j = 0;
    for (auto& f : a.factors) {
        while (j < b.factors.size() && b.factors[j].first < f.first)
            ++j;
        if (j == b.factors.size() || b.factors[j].first != f.first || b.factors[j].second < f.second)
            return false;
    }
    return true;
}

Monomial mono_div(const Monomial& b, const Monomial& a)
{
    Monomial r;
    size_t i = 0;
    for (auto& f : b.factors) {
        unsigned sub = 0;
        while (i < a.factors.size() && a.factors[i].first < f.first)
            ++i;
        if (i < a.factors.size() && a.factors[i].first == f.first)
            sub = a.factors[i].second;
        if (sub > f.second)
            throw EngineError("monomial division not exact");
        if (f.second > sub)
            r.factors.emplace_back(f.first, f.second - sub);
    }
    return r;
}

Monomial mono_gcd(const Monomial& a, const Monomial& b)
{
    Monomial r;
    size_t i = 0, j = 0;
    while (i < a.factors.size() && j < b.factors.size()) {
        unsigned va = a.factors[i].first, vb = b.factors[j].first;
        if (va < vb)
            ++i;
        else if (vb < va)
            ++j;
        else {
            r.factors.emplace_back(va, std::min(a.factors[i].second, b.factors[j].second));
            ++i;
            ++j;
        }
    }
    return r;
}

/* ================= polynomials ================= */

Poly::Poly(const Rat& c)
{
    if (c != 0)
        t_.emplace_back(Monomial{}, c);
}

Poly::Poly(long c)
{
    if (c != 0)
        t_.emplace_back(Monomial{}, Rat(c));
}

Poly Poly::variable(unsigned var, unsigned exp)
{
    Poly p;
    if (exp == 0) {
        p.t_.emplace_back(Monomial{}, Rat(1));
        return p;
    }
    Monomial m;
    m.factors.emplace_back(var, exp);
    p.t_.emplace_back(std::move(m), Rat(1));
    return p;
}

Poly Poly::from_terms(std::vector<Term> terms)
{
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return mono_cmp(a.first, b.first) > 0; });
    Poly p;
    for (auto& t : terms) {
        if (!p.t_.empty() && p.t_.back().first == t.first)
            p.t_.back().second += t.second;
        else
            p.t_.push_back(std::move(t));
        if (p.t_.back().second == 0)
            p.t_.pop_back();
    }
    return p;
}

bool Poly::is_one() const
{
    return t_.size() == 1 && t_[0].first.is_one() && t_[0].second == 1;
}

int Poly::total_degree() const
{
    if (t_.empty())
        return -1;
    return static_cast<int>(t_[0].first.degree()); // grlex: leading term has max degree
}

unsigned Poly::degree_in(unsigned var) const
{
    unsigned d = 0;
    for (auto& t : t_)
        d = std::max(d, t.first.exponent_of(var));
    return d;
}

const Monomial& Poly::leading_monomial() const
{
    if (t_.empty())
        throw EngineError("leading term of zero polynomial");
    return t_[0].first;
}

const Rat& Poly::leading_coeff() const
{
    if (t_.empty())
        throw EngineError("leading term of zero polynomial");
    return t_[0].second;
}

Rat Poly::constant_term() const
{
    if (!t_.empty() && t_.back().first.is_one())
        return t_.back().second;
    return Rat(0);
}

Poly Poly::operator-() const
{
    Poly r = *this;
    for (auto& t : r.t_)
        t.second = -t.second;
    return r;
}

Poly Poly::operator+(const Poly& o) const
{
    Poly r;
    r.t_.reserve(t_.size() + o.t_.size());
    size_t i = 0, j = 0;
    while (i < t_.size() && j < o.t_.size()) {
        int c = mono_cmp(t_[i].first, o.t_[j].first);
        if (c > 0)
            r.t_.push_back(t_[i++]);
        else if (c < 0)
            r.t_.push_back(o.t_[j++]);
        else {
            Rat s = t_[i].second + o.t_[j].second;
            if (s != 0)
                r.t_.emplace_back(t_[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    for (; i < t_.size(); ++i)
        r.t_.push_back(t_[i]);
    for (; j < o.t_.size(); ++j)
        r.t_.push_back(o.t_[j]);
    return r;
}

Poly Poly::operator-(const Poly& o) const
{
    return *this + (-o);
}

Poly Poly::operator*(const Poly& o) const
{
    if (is_zero() || o.is_zero())
        return Poly();
    // monomial fast path
    if (t_.size() == 1)
        return o.mul_term(t_[0].first, t_[0].second);
    if (o.t_.size() == 1)
        return mul_term(o.t_[0].first, o.t_[0].second);

    auto desc = [](const Monomial& a, const Monomial& b) { return mono_cmp(a, b) > 0; };
    std::map<Monomial, Rat, decltype(desc)> acc(desc);
    for (auto& a : t_)
        for (auto& b : o.t_) {
            Monomial m = mono_mul(a.first, b.first);
            Rat c = a.second * b.second;
            auto [it, fresh] = acc.emplace(std::move(m), c);
            if (!fresh) {
                it->second += c;
                if (it->second == 0)
                    acc.erase(it);
            }
        }
    Poly r;
    r.t_.reserve(acc.size());
    for (auto& [m, c] : acc)
        r.t_.emplace_back(m, c);
    return r;
}

Poly Poly::mul_rat(const Rat& c) const
{
    if (c == 0)
        return Poly();
    Poly r = *this;
    for (auto& t : r.t_)
        t.second *= c;
    return r;
}

Poly Poly::mul_term(const Monomial& m, const Rat& c) const
{
    if (c == 0)
        return Poly();
    Poly r;
    r.t_.reserve(t_.size());
    for (auto& t : t_)
        r.t_.emplace_back(mono_mul(t.first, m), t.second * c);
    return r; // order preserved: multiplying by a fixed monomial is monotone in grlex
}

Poly Poly::pow(unsigned e) const
{
    Poly r(Rat(1));
    Poly base = *this;
    while (e) {
        if (e & 1)
            r *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return r;
}

std::vector<unsigned> Poly::variables() const
{
    std::vector<unsigned> vs;
    for (auto& t : t_)
        for (auto& f : t.first.factors)
            vs.push_back(f.first);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

std::string Poly::str() const
{
    if (t_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : t_) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0)
                a = -a;
        }
        first = false;
        bool coeff_shown = false;
        if (a != 1 || m.is_one()) {
            os << a;
            coeff_shown = true;
        }
        bool need_star = coeff_shown;
        for (auto& [v, e] : m.factors) {
            if (need_star)
                os << "*";
            os << Vars::instance().name(v);
            if (e != 1)
                os << "^" << e;
            need_star = true;
        }
    }
    return os.str();
}

/* ================= gcd machinery ================= */

Poly poly_primitive(const Poly& a)
{
    if (a.is_zero())
        return a;
    // lcm of coefficient denominators, gcd of numerators
    Int den_lcm(1), num_gcd(0);
    for (auto& t : a.terms()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.second.get_den().get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.second.get_num().get_mpz_t());
    }
    Rat scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (a.leading_coeff() < 0)
        scale = -scale;
    return a.mul_rat(scale);
}

namespace {

// Common monomial factor of all terms.
Monomial terms_gcd(const Poly& p)
{
    Monomial g = p.terms()[0].first;
    for (auto& t : p.terms()) {
        if (g.is_one())
            break;
        g = mono_gcd(g, t.first);
    }
    return g;
}

// p viewed as a univariate polynomial in `var`: coefficients by ascending degree.
std::vector<Poly> decompose(const Poly& p, unsigned var)
{
    std::vector<std::vector<Poly::Term>> buckets(p.degree_in(var) + 1);
    for (auto& t : p.terms()) {
        unsigned d = t.first.exponent_of(var);
        Monomial rest;
        for (auto& f : t.first.factors)
            if (f.first != var)
                rest.factors.push_back(f);
        buckets[d].emplace_back(std::move(rest), t.second);
    }
    std::vector<Poly> out;
    out.reserve(buckets.size());
    for (auto& b : buckets)
        out.push_back(Poly::from_terms(std::move(b)));
    return out;
}

Poly recompose(const std::vector<Poly>& coeffs, unsigned var)
{
    Poly r;
    for (unsigned d = 0; d < coeffs.size(); ++d)
        r += coeffs[d] * Poly::variable(var, d);
    return r;
}

Poly gcd_list(const std::vector<Poly>& ps)
{
    Poly g;
    for (auto& p : ps) {
        g = poly_gcd(g, p);
        if (g.is_one())
            break;
    }
    return g;
}

// Pseudo-remainder of a by b in variable var (b nonzero in var).
Poly prem(Poly a, const Poly& b, unsigned var)
{
    auto bc = decompose(b, var);
    unsigned db = static_cast<unsigned>(bc.size()) - 1;
    const Poly& lb = bc[db];
    while (!a.is_zero()) {
        auto ac = decompose(a, var);
        unsigned da = static_cast<unsigned>(ac.size()) - 1;
        if (da < db || (da == 0 && ac[0].is_zero()))
            break;
        const Poly& la = ac[da];
        // a := lb*a - la*b*var^(da-db)
        a = a * lb - (b * la) * Poly::variable(var, da - db);
    }
    return a;
}

} // namespace

Poly poly_gcd(const Poly& a, const Poly& b)
{
    if (a.is_zero())
        return poly_primitive(b);
    if (b.is_zero())
        return poly_primitive(a);
    if (a.is_constant() || b.is_constant())
        return Poly(Rat(1));

    // common monomial content
    Monomial ma = terms_gcd(a), mb = terms_gcd(b);
    Monomial mg = mono_gcd(ma, mb);
    Poly pa = ma.is_one() ? a : poly_exact_div(a, Poly::from_terms({{ma, Rat(1)}}));
    Poly pb = mb.is_one() ? b : poly_exact_div(b, Poly::from_terms({{mb, Rat(1)}}));
    Poly mono_part = Poly::from_terms({{mg, Rat(1)}});

    if (pa.is_constant() || pb.is_constant())
        return mono_part;

    auto va = pa.variables(), vb = pb.variables();
    std::vector<unsigned> common;
    std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(common));
    if (common.empty())
        return mono_part;

    if (pa == pb)
        return mono_part * poly_primitive(pa);

    // main variable: the common var of least total spread
    unsigned var = common[0];
    {
        unsigned best = pa.degree_in(var) + pb.degree_in(var);
        for (unsigned v : common) {
            unsigned s = pa.degree_in(v) + pb.degree_in(v);
            if (s < best) {
                best = s;
                var = v;
            }
        }
    }

    auto ca = decompose(pa, var);
    auto cb = decompose(pb, var);
    Poly cont_a = gcd_list(ca);
    Poly cont_b = gcd_list(cb);
    Poly cont_g = poly_gcd(cont_a, cont_b);

    Poly g = poly_primitive(poly_exact_div(pa, cont_a));
    Poly h = poly_primitive(poly_exact_div(pb, cont_b));
    if (g.degree_in(var) < h.degree_in(var))
        std::swap(g, h);

    // primitive PRS
    for (;;) {
        Poly r = prem(g, h, var);
        if (r.is_zero())
            break;
        if (r.degree_in(var) == 0) {
            h = Poly(Rat(1));
            break;
        }
        g = h;
        // primitive part of r w.r.t. var
        auto cr = decompose(r, var);
        Poly cont_r = gcd_list(cr);
        h = poly_primitive(poly_exact_div(r, cont_r));
    }
    return mono_part * poly_primitive(cont_g * h);
}

Poly poly_exact_div(const Poly& a, const Poly& b)
{
    if (b.is_zero())
        throw DivisionByZero("polynomial division by zero");
    if (a.is_zero())
        return Poly();
    if (b.is_constant())
        return a.mul_rat(Rat(1) / b.leading_coeff());
    Poly rem = a;
    std::vector<Poly::Term> quot;
    while (!rem.is_zero()) {
        const Monomial& lm = rem.leading_monomial();
        if (!mono_divides(b.leading_monomial(), lm))
            throw EngineError("polynomial division not exact");
        Monomial qm = mono_div(lm, b.leading_monomial());
        Rat qc = rem.leading_coeff() / b.leading_coeff();
        quot.emplace_back(qm, qc);
        rem = rem - b.mul_term(qm, qc);
    }
    return Poly::from_terms(std::move(quot));
}

} // namespace qch
