#include <doctest.h>

#include <random>

#include "qch/cayley.hpp"
#include "qch/presentations.hpp"
#include "qch/rewrite.hpp"
#include "testutil.hpp"

using namespace qch;
using namespace qch::testutil;

namespace {

RewriteSystem re_system(unsigned n, unsigned bound = 0)
{
    HeckeSymmetry h = standard_R(n);
    return complete(relations_RE(h), n * n, matrix_alphabet(n, "l"), bound ? bound : n + 2);
}

RewriteSystem ugl_system(unsigned n, unsigned bound = 0)
{
    return complete(relations_Ugl(n), n * n, matrix_alphabet(n, "a"), bound ? bound : n + 2);
}

NCPoly random_ncpoly(std::mt19937& rng, unsigned alphabet, int max_deg)
{
    std::uniform_int_distribution<int> nterms(1, 4);
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> letter(0, static_cast<int>(alphabet) - 1);
    std::uniform_int_distribution<int> coeff(-5, 5);
    NCPoly p;
    int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
        Word w;
        int d = deg(rng);
        for (int j = 0; j < d; ++j)
            w.push_back(static_cast<uint16_t>(letter(rng)));
        long c = coeff(rng);
        if (c == 0)
            c = 1;
        Scalar s = Scalar(c);
        if (i % 3 == 0)
            s = s * Scalar::q(); // mix in the deformation parameter
        p.add_term(w, s);
    }
    return p;
}

Word random_word(std::mt19937& rng, unsigned alphabet, int len)
{
    std::uniform_int_distribution<int> letter(0, static_cast<int>(alphabet) - 1);
    Word w;
    for (int j = 0; j < len; ++j)
        w.push_back(static_cast<uint16_t>(letter(rng)));
    return w;
}

} // namespace

TEST_CASE("relations_RE at q = 1 span the commutator ideal")
{
    HeckeSymmetry flip = make_hecke(TensorOp::flip(2), Scalar());
    auto rels = relations_RE(flip);
    CHECK(!rels.empty());
    // every relation reduces to zero modulo plain commutators, and every
    // commutator reduces to zero modulo the relations
    std::vector<NCPoly> comms;
    for (unsigned a = 0; a < 4; ++a)
        for (unsigned b = 0; b < a; ++b)
            comms.push_back(NCPoly::generator(a) * NCPoly::generator(b) -
                            NCPoly::generator(b) * NCPoly::generator(a));
    RewriteSystem comm_sys = complete(comms, 4, matrix_alphabet(2, "l"), 4);
    for (auto& r : rels)
        CHECK(comm_sys.normal_form(r).is_zero());
    RewriteSystem rel_sys = complete(rels, 4, matrix_alphabet(2, "l"), 4);
    for (auto& c : comms)
        CHECK(rel_sys.normal_form(c).is_zero());
}

TEST_CASE("relations_RE for the standard n=2 symmetry: 6 independent quadratics")
{
    HeckeSymmetry h = standard_R(2);
    auto rels = relations_RE(h);
    // coefficient matrix over the 16 degree-2 words
    std::vector<Word> words;
    for (uint16_t a = 0; a < 4; ++a)
        for (uint16_t b = 0; b < 4; ++b)
            words.push_back({a, b});
    unsigned dim = std::max(words.size(), rels.size());
    DenseMat<Scalar> m(dim);
    for (unsigned r = 0; r < rels.size(); ++r)
        for (unsigned wIdx = 0; wIdx < words.size(); ++wIdx)
            m.at(r, wIdx) = rels[r].coeff_of(words[wIdx]);
    CHECK(matrix_rank(m) == 6);
}

TEST_CASE("relations_RE is empty for n = 1")
{
    TensorOp R(1, 2);
    R.at(0, 0) = Scalar::q();
    HeckeSymmetry h = make_hecke(R, Scalar::lambda());
    CHECK(h.rank_p() == 1);
    CHECK(relations_RE(h).empty());
}

TEST_CASE("relations_REqh degenerates to relations_RE at hbar = 0")
{
    HeckeSymmetry h = standard_R(2);
    auto rqh = relations_REqh(h);
    auto re = relations_RE(h);
    REQUIRE(rqh.size() == re.size());
    unsigned hb = *Vars::instance().find("hbar");
    for (size_t i = 0; i < rqh.size(); ++i)
        CHECK(rqh[i].substitute_scalars({{hb, Scalar()}}) == re[i]);
}

TEST_CASE("relations_REqh at q = 1 presents the same ideal as relations_Ugl")
{
    HeckeSymmetry h = standard_R(2);
    unsigned qv = Vars::instance().q();
    std::vector<NCPoly> at1;
    for (auto& r : relations_REqh(h)) {
        NCPoly s = r.substitute_scalars({{qv, Scalar(1)}});
        if (!s.is_zero())
            at1.push_back(s);
    }
    auto ugl = relations_Ugl(2);
    RewriteSystem sys1 = complete(at1, 4, matrix_alphabet(2, "lb"), 4);
    RewriteSystem sys2 = complete(ugl, 4, matrix_alphabet(2, "a"), 4);
    for (auto& r : ugl)
        CHECK(sys1.normal_form(r).is_zero());
    for (auto& r : at1)
        CHECK(sys2.normal_form(r).is_zero());
}

TEST_CASE("relations_REqh is empty for a single generator")
{
    TensorOp R(1, 2);
    R.at(0, 0) = Scalar::q();
    HeckeSymmetry h = make_hecke(R, Scalar::lambda());
    CHECK(relations_REqh(h).empty());
}

TEST_CASE("relations_Ugl basics")
{
    CHECK(relations_Ugl(1).empty());

    auto rels = relations_Ugl(2);
    Scalar hb = Scalar::variable("hbar");
    // [a^1_1, a^1_2] = hbar a^1_2  (letters: a^1_1 = 0, a^1_2 = 1)
    NCPoly expect = NCPoly::generator(0) * NCPoly::generator(1) -
                    NCPoly::generator(1) * NCPoly::generator(0) -
                    NCPoly::generator(1).scale(hb);
    bool found = false;
    for (auto& r : rels)
        found = found || (r == expect) || (r == -expect);
    CHECK(found);

    // hbar -> 0 leaves plain commutators
    unsigned hbv = *Vars::instance().find("hbar");
    for (auto& r : rels) {
        NCPoly c = r.substitute_scalars({{hbv, Scalar()}});
        CHECK(c.degree() == 2);
        CHECK(c.term_count() == 2);
    }
}

TEST_CASE("complete: PBW counts for U(gl(2)) and the RE algebra")
{
    RewriteSystem ugl = ugl_system(2, 3);
    CHECK(ugl.status == CompletionStatus::closed);
    size_t expect[] = {1, 4, 10, 20};
    for (unsigned d = 0; d <= 3; ++d)
        CHECK(ugl.normal_word_count(d) == expect[d]);

    RewriteSystem re = re_system(2, 4);
    CHECK(re.status == CompletionStatus::closed);
    for (unsigned d = 0; d <= 3; ++d)
        CHECK(re.normal_word_count(d) == expect[d]);

    // n = 3: commutative dimensions in 9 variables are 1, 9, 45, 165
    RewriteSystem re3 = re_system(3, 4);
    size_t expect3[] = {1, 9, 45, 165};
    for (unsigned d = 0; d <= 3; ++d)
        CHECK(re3.normal_word_count(d) == expect3[d]);
}

TEST_CASE("complete: two commuting generators")
{
    NCPoly comm = NCPoly::generator(0) * NCPoly::generator(1) -
                  NCPoly::generator(1) * NCPoly::generator(0);
    RewriteSystem rs = complete({comm}, 2, {"u", "v"}, 4);
    CHECK(rs.status == CompletionStatus::closed);
    CHECK(rs.rules.size() == 1);
    for (unsigned d = 0; d <= 4; ++d)
        CHECK(rs.normal_word_count(d) == d + 1);
}

TEST_CASE("complete: bound below the relation degree is rejected")
{
    HeckeSymmetry h = standard_R(2);
    CHECK_THROWS_AS(complete(relations_RE(h), 4, matrix_alphabet(2, "l"), 1), DomainError);
}

TEST_CASE("truncated systems refuse out-of-bound reductions")
{
    RewriteSystem rs = re_system(2, 2); // ambiguities at degree 3 unexamined
    CHECK(rs.status == CompletionStatus::truncated);
    NCPoly cube = NCPoly::generator(0) * NCPoly::generator(1) * NCPoly::generator(2);
    CHECK_THROWS_AS(rs.normal_form(cube), DomainError);
}

TEST_CASE("normal_form: relations vanish, reduction is idempotent and degree-monotone")
{
    HeckeSymmetry h = standard_R(2);
    auto rels = relations_RE(h);
    RewriteSystem rs = re_system(2);
    for (auto& r : rels)
        CHECK(rs.normal_form(r).is_zero());

    std::mt19937 rng(777);
    for (int i = 0; i < 30; ++i) {
        NCPoly p = random_ncpoly(rng, 4, 3);
        NCPoly nf = rs.normal_form(p);
        CHECK(rs.normal_form(nf) == nf);
        CHECK(nf.degree() <= p.degree());
    }

    // every degree-2 word is irreducible or rewrites strictly below
    for (uint16_t a = 0; a < 4; ++a)
        for (uint16_t b = 0; b < 4; ++b) {
            Word w{a, b};
            NCPoly nf = rs.normal_form(NCPoly::word(w));
            if (!(nf == NCPoly::word(w)))
                CHECK(word_cmp(nf.leading_word(), w) < 0);
        }
    CHECK(rs.normal_word_count(2) == 10);
}

TEST_CASE("normal_form: the gl(2) commutator identity reduces to zero")
{
    RewriteSystem rs = ugl_system(2);
    Scalar hb = Scalar::variable("hbar");
    NCPoly p = NCPoly::generator(0) * NCPoly::generator(1) -
               NCPoly::generator(1) * NCPoly::generator(0) -
               NCPoly::generator(1).scale(hb);
    CHECK(rs.normal_form(p).is_zero());
}

TEST_CASE("commutes_mod: units, central elements, non-commuting pairs")
{
    RewriteSystem re = re_system(2);
    std::mt19937 rng(31337);
    for (int i = 0; i < 10; ++i)
        CHECK(commutes_mod(NCPoly(1), random_ncpoly(rng, 4, 2), re));

    // l^1_1 and l^1_2 do not commute in the deformed algebra
    CHECK_FALSE(commutes_mod(NCPoly::generator(0), NCPoly::generator(1), re));

    // the trace a^1_1 + a^2_2 is central in U(gl(2))
    RewriteSystem ugl = ugl_system(2);
    NCPoly trace = NCPoly::generator(0) + NCPoly::generator(3);
    for (unsigned g = 0; g < 4; ++g)
        CHECK(commutes_mod(trace, NCPoly::generator(g), ugl));
}

TEST_CASE("confluence audit: two strategies agree on random inputs")
{
    std::mt19937 rng(4242);
    RewriteSystem systems[] = {re_system(2), ugl_system(2)};
    for (auto& rs : systems)
        for (int i = 0; i < 200; ++i) {
            NCPoly p = random_ncpoly(rng, 4, 3);
            CHECK(rs.normal_form(p, ReduceStrategy::leftmost) ==
                  rs.normal_form(p, ReduceStrategy::rightmost));
        }
}

TEST_CASE("ideal membership is a congruence: a r b reduces to zero")
{
    HeckeSymmetry h = standard_R(2);
    auto rels = relations_RE(h);
    RewriteSystem rs = re_system(2);
    std::mt19937 rng(90210);
    for (int i = 0; i < 40; ++i) {
        const NCPoly& r = rels[i % rels.size()];
        Word a = random_word(rng, 4, i % 2);
        Word b = random_word(rng, 4, (i + 1) % 3 == 0 ? 2 : 1);
        if (a.size() + r.degree() + b.size() > rs.degree_bound)
            continue;
        CHECK(rs.normal_form(r.sandwich(a, b)).is_zero());
    }
}
