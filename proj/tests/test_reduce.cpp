#include "doctest.h"
#include "helpers.hpp"

using namespace zgbtest;

TEST_CASE("term_divides") {
    Ring Z = Ring::integers();
    Term g{Coeff(2), Monomial({1, 0})}, h{Coeff(4), Monomial({1, 1})};
    CHECK(term_divides(g, h, Z));
    CHECK(!term_divides(g, Term{Coeff(3), Monomial({1, 1})}, Z));
    CHECK(!term_divides(g, Term{Coeff(4), Monomial({0, 1})}, Z));

    Ring R = Ring::integers_mod(12);
    CHECK(term_divides(Term{Coeff(4), Monomial({1, 0})},
                       Term{Coeff(8), Monomial({1, 1})}, R));
}

TEST_CASE("reduce_global weak and tail") {
    auto ctx = zz_dp();
    std::vector<Poly> G = PL(ctx, {"x+4"});
    // xy+9 -> xy+9 - y(x+4) = -4y+9, whose lt is irreducible
    CHECK(reduce_global(P(ctx, "x*y+9"), G).equals(P(ctx, "-4*y+9")));

    std::vector<Poly> G2 = PL(ctx, {"7"});
    CHECK(reduce_global(P(ctx, "x+14"), G2).equals(P(ctx, "x+14")));  // weak
    ReduceOptions tail;
    tail.tail_reduce = true;
    CHECK(reduce_global(P(ctx, "x+14"), G2, tail).equals(P(ctx, "x")));
    // strong division only: 7 does not divide 11
    CHECK(reduce_global(P(ctx, "x+11"), G2, tail).equals(P(ctx, "x+11")));

    // member of the strong basis reduces to zero
    std::vector<Poly> S = PL(ctx, {"7", "x+4", "y-4"});
    CHECK(reduce_global(P(ctx, "x*y+9"), S).is_zero());
    CHECK(reduce_global(Poly(ctx), S).is_zero());

    CHECK_THROWS_AS(reduce_global(P(zz_ds(), "x"), PL(zz_ds(), {"x"})), Error);
}

TEST_CASE("reduce_global coefficient-aware") {
    auto ctx = zz_dp();
    // 3x not reducible by 2x (2 does not divide 3), but 4x is
    std::vector<Poly> G = PL(ctx, {"2*x+2"});
    CHECK(reduce_global(P(ctx, "3*x"), G).equals(P(ctx, "3*x")));
    CHECK(reduce_global(P(ctx, "4*x"), G).equals(P(ctx, "-4")));
}

TEST_CASE("reduce_mora on the local worked example") {
    auto ctx = zz_ds();
    std::vector<Poly> S =
        PL(ctx, {"2-x+y+x^2", "x-2*y-x^2-x*y-x^3"});
    MoraResult r = reduce_mora(P(ctx, "4+x"), S);
    CHECK(r.nf.is_zero());
    bool logged = false;
    Poly want = P(ctx, "x+2*y+3*x^2");
    for (const auto& a : r.augmented)
        if (a.normalized().equals(want.normalized())) logged = true;
    CHECK(logged);
}

TEST_CASE("reduce_mora without gcd augmentation exceeds the cap") {
    auto ctx = zz_ds();
    std::vector<Poly> S =
        PL(ctx, {"2-x+y+x^2", "x-2*y-x^2-x*y-x^3"});
    ReduceOptions opts;
    opts.gcd_augment = false;
    opts.iteration_cap = 2000;
    CHECK_THROWS_AS(reduce_mora(P(ctx, "4+x"), S, opts), CapExceeded);
}

TEST_CASE("reduce_mora rejects global orderings, reduce dispatches") {
    auto gctx = zz_dp();
    CHECK_THROWS_AS(reduce_mora(P(gctx, "x"), PL(gctx, {"x"})), Error);
    CHECK(reduce(P(gctx, "x*y+9"), PL(gctx, {"x+4"})).equals(P(gctx, "-4*y+9")));
    auto lctx = zz_ds();
    std::vector<Poly> S =
        PL(lctx, {"2-x+y+x^2", "x-2*y-x^2-x*y-x^3"});
    CHECK(reduce(P(lctx, "4+x"), S).is_zero());
}

TEST_CASE("interreduce") {
    auto ctx = zz_dp();
    auto out = interreduce(PL(ctx, {"x+4", "x*y+9", "7", "y-4", "14"}));
    REQUIRE(out.size() == 3);
    // canonical order: descending leading monomials
    CHECK(out[0].equals(P(ctx, "x+4")));
    CHECK(out[1].equals(P(ctx, "y-4")));
    CHECK(out[2].equals(P(ctx, "7")));

    // sign normalization
    auto out2 = interreduce(PL(ctx, {"-2*x+4"}));
    CHECK(out2[0].equals(P(ctx, "2*x-4")));

    // 3x survives next to 2x over ZZ
    auto out3 = interreduce(PL(ctx, {"2*x", "3*x"}));
    CHECK(out3.size() == 2);
}

TEST_CASE("deadline enforcement") {
    auto ctx = zz_dp();
    ReduceOptions opts;
    opts.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
    std::vector<Poly> G = PL(ctx, {"x+1"});
    // enough reduction steps in one call to hit the periodic deadline check
    CHECK_THROWS_AS(reduce_global(P(ctx, "x^600+1"), G, opts), TimedOut);
}
