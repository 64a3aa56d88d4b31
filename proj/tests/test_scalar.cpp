#include <doctest.h>

#include "qch/error.hpp"
#include "qch/qcomb.hpp"
#include "qch/scalar.hpp"
#include "qch/vars.hpp"
#include "testutil.hpp"

using namespace qch;
using namespace qch::testutil;

TEST_CASE("parse: lambda has numerator q^2-1 and denominator q")
{
    Scalar lam = parse_scalar("q - 1/q");
    CHECK(lam == Scalar::lambda());
    CHECK(lam.num().str() == "q^2 - 1");
    CHECK(lam.den().str() == "q");
}

TEST_CASE("parse: zero and gcd cancellation")
{
    CHECK(parse_scalar("0").is_zero());
    CHECK(parse_scalar("(q^2-1)/(q-1)") == parse_scalar("q+1"));
    CHECK(parse_scalar("(q^2 - 2*q + 1)/(q - 1)") == parse_scalar("q - 1"));
}

TEST_CASE("parse: negative exponents and rational constants")
{
    CHECK(parse_scalar("q^-2") == Scalar::q().pow(-2));
    CHECK(parse_scalar("2^-1") == Scalar(Rat(1, 2)));
    CHECK(parse_scalar("-q") == -Scalar::q());
}

TEST_CASE("parse: errors carry positions")
{
    CHECK_THROWS_AS(parse_scalar("q +"), ParseError);
    CHECK_THROWS_AS(parse_scalar("(q"), ParseError);
    CHECK_THROWS_AS(parse_scalar("q ^ x"), ParseError);
    CHECK_THROWS_AS(parse_scalar("undeclared_name_xyz"), ParseError);
    CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
    CHECK_THROWS_AS(parse_scalar("1/(q - q)"), ParseError);
    try {
        parse_scalar("q + @");
    } catch (const ParseError& e) {
        CHECK(e.pos == 4);
    }
}

TEST_CASE("arith: field identities")
{
    Scalar lam = Scalar::lambda();
    CHECK(scalar_arith(lam, lam.inverse(), ScalarOp::mul) == Scalar(1));
    CHECK(scalar_arith(Scalar::q(), -Scalar::q(), ScalarOp::add).is_zero());
    CHECK_THROWS_AS(scalar_arith(Scalar(1), Scalar(), ScalarOp::div), DivisionByZero);
}

TEST_CASE("arith: lambda * 2_q = q^2 - q^-2 against the Laurent oracle")
{
    Laurent expect = (Laurent::qpow(1) - Laurent::qpow(-1)) * laurent_qnum(2);
    CHECK(expect.to_scalar() == Scalar::lambda() * q_number(2));
    CHECK(expect.to_scalar() == Scalar::q().pow(2) - Scalar::q().pow(-2));
}

TEST_CASE("substitute: q -> 1 on q-numbers, lambda, and poles")
{
    CHECK(q_number(3).substitute("q", Scalar(1)) == Scalar(3));
    CHECK(Scalar::lambda().substitute("q", Scalar(1)).is_zero());
    CHECK_THROWS_AS(Scalar::lambda().inverse().substitute("q", Scalar(1)), PoleError);
}

TEST_CASE("substitute: removable singularities cancel before substitution")
{
    // (q^2 - 1)/(q - 1) = q + 1 has no pole at q = 1
    Scalar s = parse_scalar("(q^2-1)/(q-1)");
    CHECK(s.substitute("q", Scalar(1)) == Scalar(2));
}

TEST_CASE("q_number basics")
{
    CHECK(q_number(0).is_zero());
    CHECK(q_number(1) == Scalar(1));
    CHECK(q_number(2) == Scalar::q() + Scalar::q().inverse());
    CHECK(q_number(-3) == -q_number(3));
    // definition check: r_q (q - 1/q) = q^r - q^-r
    for (long r = 0; r <= 8; ++r)
        CHECK(q_number(r) * Scalar::lambda() == Scalar::q().pow(r) - Scalar::q().pow(-r));
}

TEST_CASE("q_factorial and q_binomial")
{
    CHECK(q_factorial(0) == Scalar(1));
    CHECK(q_factorial(3) == q_number(2) * q_number(3));
    CHECK(q_binomial(4, 2) == q_number(4) * q_number(3) / (q_number(2) * q_number(1)));

    // frozen expansion derived from the Laurent oracle: 4_q 3_q / 2_q
    Laurent l42 = laurent_qnum(4) * laurent_qnum(3);
    Scalar expect = l42.to_scalar() / laurent_qnum(2).to_scalar();
    CHECK(q_binomial(4, 2) == expect);
    CHECK(q_binomial(4, 2) == parse_scalar("(q^8 + q^6 + 2*q^4 + q^2 + 1)/(q^4)"));

    CHECK_THROWS_AS(q_binomial(2, 3), DomainError);
    CHECK_THROWS_AS(q_factorial(-1), DomainError);
}

TEST_CASE("q_binomial is Laurent in q and symmetric")
{
    for (long p = 0; p <= 8; ++p)
        for (long k = 0; k <= p; ++k) {
            Scalar b = q_binomial(p, k);
            CHECK(b == q_binomial(p, p - k));
            // denominator is a pure power of q
            CHECK(b.den().terms().size() == 1);
            for (auto& f : b.den().leading_monomial().factors)
                CHECK(f.first == Vars::instance().q());
        }
}

TEST_CASE("q-binomial theorem holds for p = 1..6")
{
    for (long p = 1; p <= 6; ++p)
        CHECK(q_binomial_theorem_check(p));
}

TEST_CASE("round-trip: parse(print(s)) == s on random scalars")
{
    ScalarGen gen(20240811);
    for (int i = 0; i < 200; ++i) {
        Scalar s = gen.random_scalar();
        CHECK(parse_scalar(s.str()) == s);
    }
}

TEST_CASE("field laws on random triples")
{
    ScalarGen gen(987654);
    for (int i = 0; i < 60; ++i) {
        Scalar a = gen.random_scalar(), b = gen.random_scalar(), c = gen.random_scalar();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        Scalar nz = gen.random_nonzero();
        CHECK(a / nz * nz == a);
    }
}

TEST_CASE("canonical form: denominator monic, coprime num/den")
{
    Scalar s = Scalar(Poly::from_terms({{Monomial{}, Rat(2)}}),
                      Poly::from_terms({{Monomial{{{Vars::instance().q(), 1}}}, Rat(4)}}));
    // 2/(4q) -> (1/2)/q
    CHECK(s.den().leading_coeff() == 1);
    CHECK(s == parse_scalar("1/(2*q)"));
}
