#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <set>

#include "doctest.h"
#include "qlift/quat.hpp"

using namespace qlift;

namespace {

std::mt19937_64 rng(7151);

QuatElement random_elem(const QuatAlgebra* alg) {
    std::uniform_int_distribution<long> d(-6, 6);
    return {alg, Rat(d(rng)), Rat(d(rng)), rat_of(Int(d(rng)), Int(2)),
            rat_of(Int(d(rng)), Int(2))};
}

MatQ std_basis_rows() {
    MatQ m(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = (i == j) ? 1 : 0;
    return m;
}

}  // namespace

TEST_CASE("hilbert symbol basics") {
    CHECK(hilbert_symbol(Rat(1), Rat(-7), Int(7)) == 1);
    CHECK(hilbert_symbol(Rat(1), Rat(-30), Int(2)) == 1);
    CHECK(hilbert_symbol(Rat(-1), Rat(-1), std::nullopt) == -1);
    CHECK(hilbert_symbol(Rat(-1), Rat(-7), Int(7)) == -1);
    // oracle: solvability scan of -x^2 - 7y^2 = z^2 mod 7^2 (primitive triples)
    long mod = 49;
    bool solvable = false;
    for (long x = 0; x < mod && !solvable; ++x)
        for (long y = 0; y < mod && !solvable; ++y)
            for (long z = 0; z < mod && !solvable; ++z) {
                if (x % 7 == 0 && y % 7 == 0 && z % 7 == 0) continue;
                long v = ((-x * x - 7 * y * y - z * z) % mod + mod) % mod;
                if (v == 0) solvable = true;
            }
    CHECK(!solvable);
}

TEST_CASE("hilbert product formula on random pairs") {
    std::uniform_int_distribution<long> d(-30, 30);
    for (int trial = 0; trial < 40; ++trial) {
        long a = d(rng), b = d(rng);
        if (a == 0 || b == 0) continue;
        int prod = hilbert_symbol(Rat(a), Rat(b), std::nullopt);
        std::set<Int> places{Int(2)};
        for (const Int& p : prime_factors(Int(a))) places.insert(p);
        for (const Int& p : prime_factors(Int(b))) places.insert(p);
        for (const Int& p : places) prod *= hilbert_symbol(Rat(a), Rat(b), p);
        CHECK(prod == 1);
    }
}

TEST_CASE("element arithmetic in (-1,-7)") {
    QuatAlgebra alg = make_algebra(Rat(-1), Rat(-7));
    CHECK(alg.ramified_primes == std::vector<Int>{Int(7)});
    CHECK(alg.ramified_at_infinity);

    QuatElement one(&alg, Rat(1), Rat(0), Rat(0), Rat(0));
    QuatElement i(&alg, Rat(0), Rat(1), Rat(0), Rat(0));
    QuatElement j(&alg, Rat(0), Rat(0), Rat(1), Rat(0));
    QuatElement k(&alg, Rat(0), Rat(0), Rat(0), Rat(1));

    CHECK(i.nrd() == Rat(1));
    CHECK(j.nrd() == Rat(7));
    CHECK(j.delta() == Rat(-28));
    CHECK((i * j) == k);
    CHECK((j * i) == Rat(-1) * k);
    CHECK((i * i) == Rat(-1) * one);
    CHECK((one * k) == k);

    for (int t = 0; t < 50; ++t) {
        QuatElement x = random_elem(&alg), y = random_elem(&alg);
        CHECK((x * y).nrd() == x.nrd() * y.nrd());
        CHECK((x * y).conj() == y.conj() * x.conj());
        if (!x.is_zero()) {
            CHECK((x * x.conj()) == x.nrd() * one);
            CHECK(x.nrd() > 0);
        }
        CHECK((x + y).trace() == x.trace() + y.trace());
    }
}

TEST_CASE("lattice caches: standard order of (-1,-7)") {
    QuatAlgebra alg = make_algebra(Rat(-1), Rat(-7));
    QuatLattice std_lat = QuatLattice::span(&alg, std_basis_rows());
    CHECK(std_lat.norm() == Rat(1));
    CHECK(std_lat.disc() == 28);  // Z<1,i,j,k> has reduced discriminant 4*7
    CHECK(is_order(std_lat));

    // the maximal order Z<1, i, (i+j)/2, (1+k)/2> has discriminant 7
    MatQ rows(4, 4);
    rows << Rat(1), Rat(0), Rat(0), Rat(0),
            Rat(0), Rat(1), Rat(0), Rat(0),
            Rat(0), Rat(1, 2), Rat(1, 2), Rat(0),
            Rat(1, 2), Rat(0), Rat(0), Rat(1, 2);
    QuatLattice max_lat = QuatLattice::span(&alg, rows);
    CHECK(is_order(max_lat));
    CHECK(max_lat.disc() == 7);
    CHECK(lattice_index(max_lat.basis(), std_lat.basis()) == 4);
}

TEST_CASE("lattice product, conj, inverse and right order") {
    QuatAlgebra alg = make_algebra(Rat(-1), Rat(-7));
    MatQ rows(4, 4);
    rows << Rat(1), Rat(0), Rat(0), Rat(0),
            Rat(0), Rat(1), Rat(0), Rat(0),
            Rat(0), Rat(1, 2), Rat(1, 2), Rat(0),
            Rat(1, 2), Rat(0), Rat(0), Rat(1, 2);
    QuatLattice o = QuatLattice::span(&alg, rows);

    CHECK(lattice_product(o, o) == o);  // closure of an order
    CHECK(lattice_conj(lattice_conj(o)) == o);
    CHECK(right_order(o).lat == o);
    CHECK(left_order(o).lat == o);
    CHECK(lattice_inverse(o) == o);

    // nontrivial left ideals o*x: I * I^-1 = left order, covariance of Or
    for (int t = 0; t < 8; ++t) {
        QuatElement x = random_elem(&alg);
        if (x.is_zero()) continue;
        QuatLattice ideal = elem_mul_right(o, x);
        CHECK(left_order(ideal).lat == o);
        CHECK(lattice_product(ideal, lattice_inverse(ideal)) == o);
        Order r = right_order(ideal);
        QuatLattice expect = elem_mul_right(elem_mul_left(x.inverse(), o), x);
        CHECK(r.lat == expect);
        QuatLattice other = elem_mul_right(o, random_elem(&alg));
        CHECK(lattice_conj(lattice_product(ideal, other)) ==
              lattice_product(lattice_conj(other), lattice_conj(ideal)));
    }
}

TEST_CASE("norm and unit enumeration") {
    QuatAlgebra alg = make_algebra(Rat(-1), Rat(-7));
    MatQ rows(4, 4);
    rows << Rat(1), Rat(0), Rat(0), Rat(0),
            Rat(0), Rat(1), Rat(0), Rat(0),
            Rat(0), Rat(1, 2), Rat(1, 2), Rat(0),
            Rat(1, 2), Rat(0), Rat(0), Rat(1, 2);
    Order o = make_order(QuatLattice::span(&alg, rows));
    auto units = unit_half_group(o);
    // disc-7 maximal order: unit group {+-1, +-i} up to sign has 2 elements
    CHECK(units.size() == 2);
    for (const auto& u : units) CHECK(u.nrd() == Rat(1));

    auto counts = o.lat.norm_counts(10);
    CHECK(counts[0] == 1);
    CHECK(counts[1] == 4);
    for (long m = 1; m <= 10; ++m)
        CHECK(counts[m] ==
              Int(static_cast<long>(o.lat.elements_of_norm(Rat(m)).size())));
}
