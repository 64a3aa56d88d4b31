#include <doctest.h>

#include <cstdio>

#include "qch/hecke.hpp"
#include "qch/vars.hpp"

using namespace qch;

namespace {

// the standard n=2 matrix entered literally, independent of standard_R
TensorOp hand_entered_R2()
{
    TensorOp R(2, 2);
    auto set = [&](unsigned r, unsigned c, const char* e) { R.at(r, c) = parse_scalar(e); };
    // basis order (1,1),(1,2),(2,1),(2,2)
    set(0, 0, "q");
    set(1, 1, "q - 1/q");
    set(1, 2, "1");
    set(2, 1, "1");
    set(3, 3, "q");
    return R;
}

} // namespace

TEST_CASE("standard_R degenerates to the flip at q = 1")
{
    for (unsigned n : {2u, 3u}) {
        HeckeSymmetry h = standard_R(n);
        TensorOp at1 = h.R().substitute({{Vars::instance().q(), Scalar(1)}});
        CHECK(at1 == TensorOp::flip(n));
    }
}

TEST_CASE("check_all accepts an independently hand-entered standard matrix")
{
    TensorOp R = hand_entered_R2();
    HeckeReport rep = check_all(R, Scalar::lambda());
    CHECK(rep.yang_baxter);
    CHECK(rep.hecke);
    CHECK(rep.even_rank);
    CHECK(rep.rank_p == 2);
    CHECK(rep.closed);
    CHECK(R == standard_R(2).R());
}

TEST_CASE("standard_R(3) has rank 3")
{
    CHECK(standard_R(3).rank_p() == 3);
}

TEST_CASE("check_all on the flip at q = 1 passes with p = n")
{
    for (unsigned n : {2u, 3u}) {
        HeckeReport rep = check_all(TensorOp::flip(n), Scalar());
        CHECK(rep.all_pass());
        CHECK(rep.rank_p == static_cast<int>(n));
    }
}

TEST_CASE("check_all rejects the identity for nonzero lambda")
{
    HeckeReport rep = check_all(TensorOp::identity(2, 2), Scalar::lambda());
    CHECK(rep.yang_baxter);
    CHECK_FALSE(rep.hecke);
}

TEST_CASE("Hecke restatements: factorized condition and explicit inverse")
{
    for (unsigned n : {2u, 3u}) {
        HeckeSymmetry h = standard_R(n);
        Scalar q = h.q_param();
        TensorOp lhs = compose(add(h.R(), scale(-q, TensorOp::identity(n, 2))),
                               add(h.R(), scale(q.inverse(), TensorOp::identity(n, 2))));
        CHECK(lhs.m.is_zero());
        // R^{-1} = R - lambda id
        TensorOp rinv = add(h.R(), scale(-h.lambda(), TensorOp::identity(n, 2)));
        CHECK(compose(h.R(), rinv) == TensorOp::identity(n, 2));
    }
}

TEST_CASE("save/load round-trips the standard symmetry")
{
    HeckeSymmetry h = standard_R(2);
    const char* path = "hecke_roundtrip.json";
    save_hecke(h, path);
    HeckeSymmetry back = load_hecke(path);
    CHECK(back.R() == h.R());
    CHECK(back.lambda() == h.lambda());
    CHECK(back.rank_p() == h.rank_p());
    std::remove(path);
}

TEST_CASE("load rejects a perturbed matrix with a Yang-Baxter failure")
{
    HeckeSymmetry h = standard_R(2);
    const char* path = "hecke_perturbed.json";
    TensorOp bad = h.R();
    bad.at(0, 3) = Scalar(1); // one spurious entry
    HeckeReport rep = check_all(bad, h.lambda());
    CHECK_FALSE(rep.yang_baxter);

    save_hecke(HeckeSymmetry(bad, h.q_param(), h.lambda(), 2), path);
    CHECK_THROWS_AS(load_hecke(path), DomainError);
    std::remove(path);
}

TEST_CASE("load accepts the flip at q = 1 with p = 2")
{
    const char* path = "hecke_flip.json";
    {
        FILE* f = fopen(path, "w");
        REQUIRE(f);
        fputs("{\"n\": 2, \"indeterminates\": [\"q\"], \"lambda\": \"0\",\n"
              " \"entries\": [{\"row\": [1,1], \"col\": [1,1], \"value\": \"1\"},\n"
              "  {\"row\": [1,2], \"col\": [2,1], \"value\": \"1\"},\n"
              "  {\"row\": [2,1], \"col\": [1,2], \"value\": \"1\"},\n"
              "  {\"row\": [2,2], \"col\": [2,2], \"value\": \"1\"}]}\n",
              f);
        fclose(f);
    }
    HeckeSymmetry h = load_hecke(path);
    CHECK(h.rank_p() == 2);
    CHECK(h.R() == TensorOp::flip(2));
    CHECK(h.q_param() == Scalar(1));
    std::remove(path);
}

TEST_CASE("load rejects malformed schemas")
{
    const char* path = "hecke_bad.json";
    {
        FILE* f = fopen(path, "w");
        REQUIRE(f);
        fputs("{\"n\": 2, \"lambda\": \"0\"}", f);
        fclose(f);
    }
    CHECK_THROWS_AS(load_hecke(path), DomainError);
    std::remove(path);
}

TEST_CASE("q_from_lambda covers the two supported shapes")
{
    CHECK(q_from_lambda(Scalar()) == Scalar(1));
    CHECK(q_from_lambda(Scalar::lambda()) == Scalar::q());
    CHECK_THROWS_AS(q_from_lambda(Scalar(2)), DomainError);
}
