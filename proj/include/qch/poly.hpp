#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qch {

using Int = mpz_class;
using Rat = mpq_class;

/* Sparse monomial: (var id, exponent) pairs sorted by var id, exponents > 0. */
struct Monomial {
    std::vector<std::pair<unsigned, unsigned>> factors;

    bool is_one() const { return factors.empty(); }
    unsigned degree() const;
    unsigned exponent_of(unsigned var) const;

    bool operator==(const Monomial& o) const { return factors == o.factors; }
};

// Graded lexicographic order (total degree, then lex with the
// earliest-declared variable most significant). Returns <0, 0, >0.
int mono_cmp(const Monomial& a, const Monomial& b);

Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b); // a | b
Monomial mono_div(const Monomial& b, const Monomial& a);  // b / a, must divide
Monomial mono_gcd(const Monomial& a, const Monomial& b);

/* Multivariate polynomial over Q. Terms strictly descending in grlex;
 * no zero coefficients stored. */
class Poly {
public:
    using Term = std::pair<Monomial, Rat>;

    Poly() = default;
    explicit Poly(const Rat& c);
    explicit Poly(long c);
    static Poly variable(unsigned var, unsigned exp = 1);
    static Poly from_terms(std::vector<Term> terms); // unsorted ok, combines

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first.is_one()); }
    bool is_one() const;
    bool is_monomial() const { return t_.size() == 1; }

    int total_degree() const; // -1 for zero
    unsigned degree_in(unsigned var) const;
    const Monomial& leading_monomial() const;
    const Rat& leading_coeff() const;
    Rat constant_term() const;

    const std::vector<Term>& terms() const { return t_; }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    Poly mul_rat(const Rat& c) const;
    Poly mul_term(const Monomial& m, const Rat& c) const;
    Poly pow(unsigned e) const;

    bool operator==(const Poly& o) const { return t_ == o.t_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Set of variable ids appearing with positive exponent.
    std::vector<unsigned> variables() const;

    std::string str() const;

private:
    std::vector<Term> t_;
};

/* gcd over Q[x1..xm], returned primitive over Z with positive leading
 * coefficient; gcd with any constant (or of two nonzero polynomials in
 * disjoint variables) is 1. gcd(0,0) = 0. */
Poly poly_gcd(const Poly& a, const Poly& b);

// Exact quotient a / b; throws EngineError if not divisible.
Poly poly_exact_div(const Poly& a, const Poly& b);

// a scaled to integer coefficients with content 1 and positive leading
// coefficient (the unit-normal associate over Z).
Poly poly_primitive(const Poly& a);

} // namespace qch
