#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "qlift/enumerate.hpp"
#include "qlift/linalg.hpp"
#include "qlift/polyq.hpp"

using namespace qlift;

namespace {

MatQ mat(std::initializer_list<std::initializer_list<long>> rows) {
    MatQ m(rows.size(), rows.begin()->size());
    Eigen::Index i = 0;
    for (auto& r : rows) {
        Eigen::Index j = 0;
        for (long v : r) m(i, j++) = Rat(v);
        ++i;
    }
    return m;
}

std::mt19937_64 rng(20240817);

MatZ random_unimodular(int n) {
    MatZ u(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) u(i, j) = (i == j) ? 1 : 0;
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::uniform_int_distribution<long> coef(-3, 3);
    for (int step = 0; step < 12; ++step) {
        int a = pick(rng), b = pick(rng);
        if (a == b) continue;
        long c = coef(rng);
        for (int j = 0; j < n; ++j) u(a, j) += Int(c) * u(b, j);
    }
    return u;
}

}  // namespace

TEST_CASE("hnf identity case") {
    MatQ id = mat({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    HNFBasis h = hnf(id);
    CHECK(h.scale() == Rat(1));
    CHECK(h.mat() == mat_to_z(id));
}

TEST_CASE("hnf 2d example from overcomplete generators") {
    MatQ g = mat({{2, 0}, {0, 2}, {1, 1}});
    HNFBasis h = hnf(g);
    // Z-span of {(2,0),(0,2),(1,1)} = {(x,y): x+y even}, HNF {(1,1),(0,2)}
    MatZ expect(2, 2);
    expect << Int(1), Int(1), Int(0), Int(2);
    CHECK(h.scale() == Rat(1));
    CHECK(h.mat() == expect);
    CHECK(h.det_abs() == Rat(2));
    // brute-force membership of all generators
    for (Eigen::Index i = 0; i < g.rows(); ++i)
        CHECK(h.contains(VecQ(g.row(i).transpose())));
}

TEST_CASE("hnf canonicity under unimodular transforms and rescaling") {
    MatQ base = mat({{2, 1, 0, 5}, {0, 3, 1, 1}, {0, 0, 4, 7}, {0, 0, 0, 6}});
    HNFBasis h0 = hnf(base);
    for (int trial = 0; trial < 20; ++trial) {
        MatZ u = random_unimodular(4);
        MatQ transformed = matmul(mat_from_z(u), base);
        CHECK(hnf(transformed) == h0);
    }
    // permuted and rescaled generator list of the same lattice
    MatQ doubled(8, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            doubled(i, j) = base(3 - i, j);
            doubled(4 + i, j) = base(i, j) * Rat(3);
        }
    CHECK(hnf(doubled) == h0);
}

TEST_CASE("hnf idempotence and rank error") {
    MatQ g = mat({{1, 2}, {3, 4}, {4, 6}});
    HNFBasis h = hnf(g);
    CHECK(hnf(h.rows()) == h);
    MatQ bad = mat({{1, 2}, {2, 4}});
    CHECK_THROWS_AS(hnf(bad), RankError);
}

TEST_CASE("lattice_index basics and multiplicativity") {
    MatQ id = mat({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    HNFBasis z4 = hnf(id);
    CHECK(lattice_index(z4, z4) == 1);
    MatQ two = id;
    for (int i = 0; i < 4; ++i) two(i, i) = 2;
    HNFBasis z4_2 = hnf(two);
    CHECK(lattice_index(z4, z4_2) == 16);
    MatQ six = id;
    for (int i = 0; i < 4; ++i) six(i, i) = 6;
    HNFBasis z4_6 = hnf(six);
    CHECK(lattice_index(z4, z4_6) ==
          lattice_index(z4, z4_2) * lattice_index(z4_2, z4_6));
    CHECK_THROWS_AS(lattice_index(z4_2, z4), ContainmentError);
}

TEST_CASE("lattice sum and intersect") {
    HNFBasis a = hnf(mat({{2, 0}, {0, 3}}));
    HNFBasis b = hnf(mat({{3, 0}, {0, 2}}));
    HNFBasis s = lattice_sum(a, b);
    HNFBasis i = lattice_intersect(a, b);
    CHECK(s == hnf(mat({{1, 0}, {0, 1}})));
    CHECK(i == hnf(mat({{6, 0}, {0, 6}})));
}

TEST_CASE("congruence kernel") {
    // {x in Z^2 : (x0 + x1)/3 integral}
    MatQ c(1, 2);
    c(0, 0) = Rat(1, 3);
    c(0, 1) = Rat(1, 3);
    HNFBasis k = congruence_kernel(c);
    CHECK(k.det_abs() == Rat(3));
    VecQ v(2);
    v << Rat(1), Rat(2);
    CHECK(k.contains(v));
    v << Rat(1), Rat(1);
    CHECK(!k.contains(v));
}

TEST_CASE("kernel_mod_ell") {
    MatZ zero(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) zero(i, j) = 0;
    CHECK(kernel_mod_ell(zero, 5).size() == 3);
    MatZ id(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) id(i, j) = (i == j) ? 1 : 0;
    CHECK(kernel_mod_ell(id, 5).empty());
    MatZ m(2, 3);
    m << Int(1), Int(2), Int(3), Int(2), Int(4), Int(6);
    auto k = kernel_mod_ell(m, 7);
    CHECK(k.size() == 2);
    for (auto& v : k) {
        long s0 = (v[0] + 2 * v[1] + 3 * v[2]) % 7;
        CHECK(s0 == 0);
    }
}

TEST_CASE("enumerate_by_value basics") {
    MatQ id3 = mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    auto zero = enumerate_by_value(id3, Rat(0));
    REQUIRE(zero.size() == 1);
    CHECK(zero[0](0) == 0);
    auto ones = enumerate_by_value(id3, Rat(1));
    CHECK(ones.size() == 6);
    auto twos = enumerate_by_value(id3, Rat(2));
    CHECK(twos.size() == 12);
    MatQ notpd = mat({{1, 0}, {0, -1}});
    CHECK_THROWS_AS(enumerate_by_value(notpd, Rat(1)), FormError);
}

TEST_CASE("enumerate matches box scan on random small grams") {
    std::uniform_int_distribution<long> entry(-3, 3);
    for (int n = 2; n <= 4; ++n) {
        for (int trial = 0; trial < 30; ++trial) {
            // random PD gram: B^T B + small diagonal
            MatQ b(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) b(i, j) = Rat(entry(rng));
            MatQ g(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    Rat s = 0;
                    for (int k = 0; k < n; ++k) s += b(k, i) * b(k, j);
                    g(i, j) = s;
                }
            for (int i = 0; i < n; ++i) g(i, i) += 1 + (trial % 3);
            for (long target = 0; target <= 20; target += (1 + trial % 4)) {
                auto fast = enumerate_by_value(g, Rat(target));
                auto slow = enumerate_box_scan(g, Rat(target));
                REQUIRE(fast.size() == slow.size());
                for (size_t i = 0; i < fast.size(); ++i)
                    CHECK(fast[i] == slow[i]);
            }
        }
    }
}

TEST_CASE("theta_counts agrees with per-value enumeration") {
    MatQ g = mat({{2, 1, 0}, {1, 4, 1}, {0, 1, 6}});
    auto counts = theta_counts(g, 25);
    CHECK(counts[0] == 1);
    for (long m = 1; m <= 25; ++m) {
        auto vs = enumerate_by_value(g, Rat(m));
        CHECK(counts[m] == Int(static_cast<long>(vs.size())));
    }
}

TEST_CASE("charpoly and quotient ring eigenvector") {
    MatQ a = mat({{2, 1}, {1, 2}});
    PolyQ p = charpoly(a);  // x^2 - 4x + 3
    REQUIRE(p.size() == 3);
    CHECK(p[0] == Rat(3));
    CHECK(p[1] == Rat(-4));
    CHECK(p[2] == Rat(1));
    CHECK(poly_is_squarefree(p));
    CHECK(poly_eval(p, Rat(1)) == Rat(0));
    CHECK(poly_eval(p, Rat(3)) == Rat(0));

    QuotRing R(p);
    VecQ w(2);
    w << Rat(1), Rat(0);
    auto v = ring_eigenvector(R, a, w);
    // (A - X) v = 0 in R: check A v = X v componentwise
    auto av = ring_matvec(R, a, v);
    PolyQ x = {Rat(0), Rat(1)};
    for (int i = 0; i < 2; ++i) {
        PolyQ xv = R.mul(x, v[i]);
        CHECK(poly_sub(av[i], xv).empty());
    }
    // v must be nonzero mod both factors (x-1) and (x-3)
    for (long root : {1L, 3L}) {
        bool nonzero = false;
        for (auto& comp : v)
            if (poly_eval(comp, Rat(root)) != 0) nonzero = true;
        CHECK(nonzero);
    }
}

TEST_CASE("polynomial gcd and exact division") {
    PolyQ a = {Rat(-1), Rat(0), Rat(1)};          // x^2 - 1
    PolyQ b = {Rat(1), Rat(1)};                   // x + 1
    CHECK(poly_gcd(a, b) == b);
    CHECK(poly_divexact(a, b) == PolyQ{Rat(-1), Rat(1)});
    PolyQ sq = poly_mul(b, b);
    CHECK(!poly_is_squarefree(sq));
}
