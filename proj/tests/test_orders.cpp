#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "qlift/orders.hpp"

using namespace qlift;

TEST_CASE("build_algebra picks certified algebras") {
    QuatAlgebra a7 = build_algebra(Int(7));
    CHECK(a7.a == Rat(-1));
    CHECK(a7.b == Rat(-7));
    QuatAlgebra a13 = build_algebra(Int(13));
    CHECK(a13.a == Rat(-2));
    CHECK(a13.b == Rat(-13));
    QuatAlgebra a3 = build_algebra(Int(3));
    CHECK(a3.a == Rat(-1));
    QuatAlgebra a17 = build_algebra(Int(17));  // p = 1 mod 8 branch
    CHECK(a17.ramified_primes == std::vector<Int>{Int(17)});
    CHECK_THROWS_AS(build_algebra(Int(2)), InputError);
    CHECK_THROWS_AS(build_algebra(Int(15)), InputError);
}

TEST_CASE("maximal orders for small p") {
    for (long p : {3L, 7L, 11L, 13L}) {
        QuatAlgebra alg = build_algebra(Int(p));
        Order o = maximal_order(alg);
        CHECK(o.disc() == p);
        CHECK(is_order(o.lat));
        // idempotence in the sense of the contract: rebuilding from the
        // algebra gives an order of the same discriminant
        Order o2 = maximal_order(alg);
        CHECK(o2.disc() == o.disc());
    }
}

TEST_CASE("level p^2 context structure at p = 7") {
    LevelP2Context ctx = build_context(Int(7));
    const Int p = 7;
    CHECK(ctx.O_max.disc() == p);
    CHECK(ctx.O_tilde.disc() == p * p);
    CHECK(lattice_index(ctx.O_max.lat.basis(), ctx.O_tilde.lat.basis()) == p);
    CHECK(ctx.P_max.norm() == p);
    CHECK(lattice_product(ctx.P_max, ctx.P_max) == lattice_scale(ctx.O_max.lat, Rat(p)));
    REQUIRE(ctx.suborders.size() == 8);
    for (const auto& s : ctx.suborders) {
        CHECK(s.order.disc() == p * p * p);
        CHECK(lattice_index(ctx.O_tilde.lat.basis(), s.order.lat.basis()) == p);
        CHECK(s.source_ideal.norm() == p);
        // round trip of the bijection
        Order back = suborder_from_bilateral(s.source_ideal, p);
        CHECK(back.lat == s.order.lat);
        CHECK(char_chi_suborder(s.order, p) == s.character_sign);
    }
    // chi takes each sign on exactly (p+1)/2 suborders
    int plus = 0;
    for (const auto& s : ctx.suborders)
        if (s.character_sign == 1) ++plus;
    CHECK(plus == 4);
    // suborders pairwise intersect in Z + pO
    QuatLattice zpo;
    {
        MatQ rows(5, 4);
        rows(0, 0) = 1;
        for (int c = 1; c < 4; ++c) rows(0, c) = 0;
        MatQ scaled = ctx.O_max.lat.basis().rows();
        for (int i = 0; i < 4; ++i)
            for (int c = 0; c < 4; ++c) scaled(i, c) *= Rat(p);
        rows.bottomRows(4) = scaled;
        zpo = QuatLattice::span(ctx.algebra.get(), rows);
    }
    for (size_t i = 0; i < ctx.suborders.size(); ++i)
        for (size_t j = i + 1; j < ctx.suborders.size(); ++j)
            CHECK(lattice_intersect(ctx.suborders[i].order.lat,
                                    ctx.suborders[j].order.lat) == zpo);
}

TEST_CASE("context invariants at p = 11 and 13") {
    for (long p : {11L, 13L}) {
        LevelP2Context ctx = build_context(Int(p));
        CHECK(ctx.O_max.disc() == p);
        CHECK(ctx.O_tilde.disc() == p * p);
        CHECK(ctx.suborders.size() == static_cast<size_t>(p + 1));
        int plus = 0;
        for (const auto& s : ctx.suborders) {
            CHECK(s.order.disc() == p * p * p);
            if (s.character_sign == 1) ++plus;
        }
        CHECK(plus == (p + 1) / 2);
    }
}

TEST_CASE("chi of O_tilde as an ideal is +1") {
    LevelP2Context ctx = build_context(Int(7));
    CHECK(char_chi_ideal(ctx.O_tilde.lat, Int(7)) == 1);
}

TEST_CASE("choose_q three-condition filter") {
    // D = -7, p = 7, D0 = 1: first prime with q coprime to 14 and (-q|7) = -1
    Int q = choose_q(Int(-7), Int(7));
    CHECK(legendre(-q, Int(7)) == -1);
    CHECK(q % 2 != 0);
    CHECK(q % 7 != 0);
    for (Int cand = 2; cand < q; cand = next_prime(cand)) {
        bool ok = (Int(14) % cand != 0) && legendre(-cand, Int(7)) == -1;
        CHECK(!ok);
    }
    // D = -35, p = 5, D0 = -7: q = -1 mod 7, (-q|5) = -1
    Int q2 = choose_q(Int(-35), Int(5));
    CHECK((q2 + 1) % 7 == 0);
    CHECK(legendre(-q2, Int(5)) == -1);
    CHECK(Int(70) % q2 != 0);
    // forced split in K: (D|q) = 1
    CHECK(kronecker(Int(-35), q2) == 1);
    CHECK(kronecker(Int(-7), q) == 1);
}
