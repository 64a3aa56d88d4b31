#include "qch/ncpoly.hpp"

#include <sstream>

#include "qch/error.hpp"

namespace qch {

int word_cmp(const Word& a, const Word& b)
{
    if (a.size() != b.size())
        return a.size() < b.size() ? -1 : 1;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i])
            return a[i] < b[i] ? -1 : 1;
    return 0;
}

NCPoly::NCPoly(const Scalar& c)
{
    if (!c.is_zero())
        t_.emplace(Word{}, c);
}

NCPoly NCPoly::generator(unsigned letter)
{
    NCPoly p;
    p.t_.emplace(Word{static_cast<uint16_t>(letter)}, Scalar(1));
    return p;
}

NCPoly NCPoly::word(Word w, Scalar c)
{
    NCPoly p;
    if (!c.is_zero())
        p.t_.emplace(std::move(w), std::move(c));
    return p;
}

int NCPoly::degree() const
{
    if (t_.empty())
        return -1;
    return static_cast<int>(t_.begin()->first.size());
}

const Word& NCPoly::leading_word() const
{
    if (t_.empty())
        throw EngineError("leading term of zero NCPoly");
    return t_.begin()->first;
}

const Scalar& NCPoly::leading_coeff() const
{
    if (t_.empty())
        throw EngineError("leading term of zero NCPoly");
    return t_.begin()->second;
}

Scalar NCPoly::coeff_of(const Word& w) const
{
    auto it = t_.find(w);
    return it == t_.end() ? Scalar() : it->second;
}

NCPoly NCPoly::operator-() const
{
    NCPoly r = *this;
    for (auto& [w, c] : r.t_)
        c = -c;
    return r;
}

void NCPoly::add_term(const Word& w, const Scalar& c)
{
    if (c.is_zero())
        return;
    auto [it, fresh] = t_.emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero())
            t_.erase(it);
    }
}

NCPoly& NCPoly::operator+=(const NCPoly& o)
{
    for (auto& [w, c] : o.t_)
        add_term(w, c);
    return *this;
}

NCPoly NCPoly::operator+(const NCPoly& o) const
{
    NCPoly r = *this;
    r += o;
    return r;
}

NCPoly NCPoly::operator-(const NCPoly& o) const
{
    NCPoly r = *this;
    r += -o;
    return r;
}

NCPoly NCPoly::operator*(const NCPoly& o) const
{
    NCPoly r;
    for (auto& [w1, c1] : t_)
        for (auto& [w2, c2] : o.t_) {
            Word w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            r.add_term(w, c1 * c2);
        }
    return r;
}

NCPoly NCPoly::scale(const Scalar& c) const
{
    NCPoly r;
    if (c.is_zero())
        return r;
    for (auto& [w, k] : t_)
        r.t_.emplace(w, k * c);
    return r;
}

NCPoly NCPoly::sandwich(const Word& u, const Word& v) const
{
    NCPoly r;
    for (auto& [w, c] : t_) {
        Word nw = u;
        nw.insert(nw.end(), w.begin(), w.end());
        nw.insert(nw.end(), v.begin(), v.end());
        r.t_.emplace(std::move(nw), c); // sandwiching is injective on words
    }
    return r;
}

NCPoly NCPoly::substitute_generators(const std::function<NCPoly(unsigned)>& image) const
{
    NCPoly r;
    for (auto& [w, c] : t_) {
        NCPoly prod{c};
        for (uint16_t letter : w)
            prod = prod * image(letter);
        r += prod;
    }
    return r;
}

NCPoly NCPoly::substitute_scalars(const std::map<unsigned, Scalar>& bindings) const
{
    NCPoly r;
    for (auto& [w, c] : t_)
        r.add_term(w, c.substitute(bindings));
    return r;
}

NCPoly NCPoly::map_letters(const std::function<unsigned(unsigned)>& f) const
{
    NCPoly r;
    for (auto& [w, c] : t_) {
        Word nw;
        nw.reserve(w.size());
        for (uint16_t letter : w)
            nw.push_back(static_cast<uint16_t>(f(letter)));
        r.add_term(nw, c);
    }
    return r;
}

std::string NCPoly::str(const std::vector<std::string>& names) const
{
    if (t_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [w, c] : t_) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (uint16_t letter : w)
            os << "*" << names.at(letter);
    }
    return os.str();
}

std::vector<std::string> matrix_alphabet(unsigned n, const std::string& sym)
{
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(n) * n);
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = 1; j <= n; ++j)
            names.push_back(sym + "^" + std::to_string(i) + "_" + std::to_string(j));
    return names;
}

} // namespace qch
