#pragma once

#include <map>
#include <string>

#include "qch/poly.hpp"

namespace qch {

/* Element of the field of rational functions over Q in the declared
 * indeterminates. Canonical form: numerator and denominator coprime,
 * denominator monic under grlex; zero is 0/1. Negative powers of q (or
 * any variable) live in the denominator. Immutable value type. */
class Scalar {
public:
    Scalar() : den_(Rat(1)) {} // zero
    Scalar(long c) : num_(c), den_(Rat(1)) {}
    explicit Scalar(const Rat& c) : num_(c), den_(Rat(1)) {}
    Scalar(Poly num, Poly den);

    static Scalar variable(const std::string& name); // must be declared
    static Scalar variable(unsigned var_id);
    static Scalar q();      // the indeterminate q
    static Scalar lambda(); // q - 1/q

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_rational() const { return num_.is_constant() && den_.is_one(); }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const; // throws DivisionByZero
    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }
    Scalar& operator/=(const Scalar& o) { *this = *this / o; return *this; }

    Scalar inverse() const;
    Scalar pow(long e) const;

    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /* Substitution var -> Scalar applied simultaneously to numerator and
     * denominator of the canonical form. Throws PoleError if the
     * substituted denominator vanishes (a genuine pole; removable
     * singularities are gone after canonical cancellation). */
    Scalar substitute(const std::map<unsigned, Scalar>& bindings) const;
    Scalar substitute(const std::string& var, const Scalar& value) const;

    // Canonical printing; parse(str()) == *this.
    std::string str() const;

private:
    void canonicalize();
    Poly num_, den_;
};

/* Recursive-descent parser for the expression grammar
 *   expr   := ['-'] term (('+'|'-') term)*
 *   term   := factor (('*'|'/') factor)*
 *   factor := base ('^' signed-int)?
 *   base   := integer | identifier | '(' expr ')'
 * Identifiers must be declared indeterminates. Throws ParseError with
 * position, DivisionByZero on division by the zero polynomial. */
Scalar parse_scalar(const std::string& text);

enum class ScalarOp { add, sub, mul, div };
Scalar scalar_arith(const Scalar& a, const Scalar& b, ScalarOp op);

} // namespace qch
