#pragma once

#include <map>
#include <random>

#include "qch/qcomb.hpp"
#include "qch/scalar.hpp"
#include "qch/vars.hpp"

namespace qch::testutil {

/* Independent Laurent-polynomial-in-q oracle: exponent -> coefficient.
 * Deliberately avoids the Poly/Scalar machinery so expansions computed
 * here are an independent check of it. */
struct Laurent {
    std::map<int, long> c;

    static Laurent from(long v)
    {
        Laurent l;
        if (v != 0)
            l.c[0] = v;
        return l;
    }
    static Laurent qpow(int e, long coeff = 1)
    {
        Laurent l;
        if (coeff != 0)
            l.c[e] = coeff;
        return l;
    }

    Laurent operator+(const Laurent& o) const
    {
        Laurent r = *this;
        for (auto& [e, v] : o.c) {
            r.c[e] += v;
            if (r.c[e] == 0)
                r.c.erase(e);
        }
        return r;
    }
    Laurent operator-(const Laurent& o) const
    {
        Laurent neg;
        for (auto& [e, v] : o.c)
            neg.c[e] = -v;
        return *this + neg;
    }
    Laurent operator*(const Laurent& o) const
    {
        Laurent r;
        for (auto& [e1, v1] : c)
            for (auto& [e2, v2] : o.c) {
                r.c[e1 + e2] += v1 * v2;
                if (r.c[e1 + e2] == 0)
                    r.c.erase(e1 + e2);
            }
        return r;
    }

    Scalar to_scalar() const
    {
        Scalar s;
        for (auto& [e, v] : c)
            s += Scalar(Rat(v)) * Scalar::q().pow(e);
        return s;
    }
};

// r_q as a Laurent polynomial: q^{r-1} + q^{r-3} + ... + q^{1-r}
inline Laurent laurent_qnum(int r)
{
    Laurent l;
    for (int e = r - 1; e >= 1 - r; e -= 2)
        l.c[e] = 1;
    return l;
}

/* Random canonical Scalars over a small variable set, for property tests. */
class ScalarGen {
public:
    explicit ScalarGen(uint32_t seed) : rng_(seed)
    {
        vars_ = {Vars::instance().q(), *Vars::instance().find("x"),
                 *Vars::instance().find("y")};
    }

    Poly random_poly(int max_terms = 4, int max_exp = 3)
    {
        std::uniform_int_distribution<int> nterms(0, max_terms);
        std::uniform_int_distribution<int> coeff(-6, 6);
        std::uniform_int_distribution<int> exp(0, max_exp);
        std::uniform_int_distribution<size_t> pick(0, vars_.size() - 1);
        std::vector<Poly::Term> terms;
        int t = nterms(rng_);
        for (int i = 0; i < t; ++i) {
            Monomial m;
            unsigned v1 = vars_[pick(rng_)];
            int e1 = exp(rng_);
            if (e1 > 0)
                m.factors.emplace_back(v1, static_cast<unsigned>(e1));
            terms.emplace_back(std::move(m), Rat(coeff(rng_)));
        }
        return Poly::from_terms(std::move(terms));
    }

    Scalar random_scalar()
    {
        Poly num = random_poly();
        Poly den;
        do {
            den = random_poly();
        } while (den.is_zero());
        return Scalar(num, den);
    }

    Scalar random_nonzero()
    {
        Scalar s;
        do {
            s = random_scalar();
        } while (s.is_zero());
        return s;
    }

private:
    std::mt19937 rng_;
    std::vector<unsigned> vars_;
};

} // namespace qch::testutil
