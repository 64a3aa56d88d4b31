#include "qch/qcomb.hpp"

#include "qch/error.hpp"
#include "qch/vars.hpp"

namespace qch {

Scalar q_number(long r)
{
    if (r < 0)
        return -q_number(-r);
    if (r == 0)
        return Scalar();
    // r_q = (sum_{i=0}^{r-1} q^{2i}) / q^{r-1}
    unsigned qv = Vars::instance().q();
    std::vector<Poly::Term> terms;
    for (long i = 0; i < r; ++i) {
        Monomial m;
        if (i > 0)
            m.factors.emplace_back(qv, static_cast<unsigned>(2 * i));
        terms.emplace_back(std::move(m), Rat(1));
    }
    return Scalar(Poly::from_terms(std::move(terms)),
                  Poly::variable(qv, static_cast<unsigned>(r - 1)));
}

Scalar q_factorial(long r)
{
    if (r < 0)
        throw DomainError("q_factorial of negative argument");
    Scalar f(1);
    for (long m = 2; m <= r; ++m)
        f *= q_number(m);
    return f;
}

Scalar q_binomial(long p, long k)
{
    if (k < 0 || p < 0 || k > p)
        throw DomainError("q_binomial arguments out of range");
    // product form keeps intermediate objects small
    Scalar r(1);
    for (long i = 1; i <= k; ++i)
        r *= q_number(p - k + i) / q_number(i);
    return r;
}

Scalar binomial(long p, long k)
{
    if (k < 0 || p < 0 || k > p)
        throw DomainError("binomial arguments out of range");
    Int num(1), den(1);
    for (long i = 1; i <= k; ++i) {
        num *= Int(p - k + i);
        den *= Int(i);
    }
    Rat r{Rat(num) / Rat(den)};
    return Scalar(r);
}

bool q_binomial_theorem_check(long p)
{
    if (p < 1)
        throw DomainError("q_binomial_theorem_check needs p >= 1");
    Scalar x = Scalar::variable("x");
    Scalar q = Scalar::q();
    Scalar lhs;
    for (long k = 0; k <= p; ++k)
        lhs += x.pow(k) * q.pow(-k * (p - 1)) * q_binomial(p, k);
    Scalar rhs(1);
    for (long k = 0; k < p; ++k)
        rhs *= Scalar(1) + x * q.pow(-2 * k);
    return lhs == rhs;
}

} // namespace qch
