#include "qlift/orders.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qlift {

QuatAlgebra build_algebra(const Int& p) {
    if (p == 2 || !is_prime(p)) throw InputError("p must be an odd prime");
    Rat a, b(-p);
    if (p % 4 == 3) {
        a = -1;
    } else if (p % 8 == 5) {
        a = -2;
    } else {
        Int q0 = 3;
        while (!(q0 % 4 == 3 && legendre(q0, p) == -1)) q0 = next_prime(q0);
        a = Rat(-q0);
    }
    QuatAlgebra alg = make_algebra(a, b);
    if (alg.ramified_primes != std::vector<Int>{p})
        throw ConstructionError("algebra not ramified exactly at p");
    return alg;
}

namespace {

Int target_disc(const QuatAlgebra& alg) {
    Int t = 1;
    for (const Int& p : alg.ramified_primes) t *= p;
    return t;
}

// Try to enlarge the order L at the prime l by adjoining an integral
// element of (1/l)L. Projective scan over (L/lL) - {0}.
bool saturate_step(const QuatAlgebra& alg, QuatLattice& lat, const Int& l) {
    auto bs = lat.basis_elements();
    long lp = to_long(l);
    // projective representatives: first nonzero coordinate = 1
    for (int lead = 0; lead < 4; ++lead) {
        std::vector<long> w(4, 0);
        w[lead] = 1;
        long span = 1;
        for (int t = lead + 1; t < 4; ++t) span *= lp;
        for (long idx = 0; idx < span; ++idx) {
            long rem = idx;
            for (int t = lead + 1; t < 4; ++t) {
                w[t] = rem % lp;
                rem /= lp;
            }
            QuatElement x(&alg, Rat(0), Rat(0), Rat(0), Rat(0));
            for (int t = 0; t < 4; ++t)
                if (w[t] != 0) x = x + Rat(w[t]) * bs[t];
            x = Rat(1, lp) * x;
            if (!is_integer(x.trace()) || !is_integer(x.nrd())) continue;
            if (lat.contains(x)) continue;
            MatQ rows(5, 4);
            rows.topRows(4) = lat.basis().rows();
            for (int c = 0; c < 4; ++c) rows(4, c) = x[c];
            QuatLattice bigger = QuatLattice::span(&alg, rows);
            if (is_order(bigger)) {
                lat = bigger;
                return true;
            }
        }
    }
    return false;
}

MatQ identity_rows() {
    MatQ m(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = (i == j) ? 1 : 0;
    return m;
}

}  // namespace

Order maximal_order(const QuatAlgebra& alg) {
    QuatLattice lat = QuatLattice::span(&alg, identity_rows());
    Int target = target_disc(alg);
    int guard = 0;
    while (lat.disc() != target) {
        if (++guard > 64) throw ConstructionError("saturation failed to converge");
        Int excess = lat.disc() / target;
        bool progressed = false;
        for (const Int& l : prime_factors(excess)) {
            if (saturate_step(alg, lat, l)) {
                progressed = true;
                break;
            }
        }
        if (!progressed)
            throw ConstructionError("no integral enlargement found; disc " +
                                    lat.disc().get_str());
    }
    return make_order(std::move(lat));
}

QuatLattice bilateral_norm_p_of_max(const Order& o, const Int& p) {
    if (o.disc() != p) throw InputError("order is not maximal of disc p");
    const long lp = to_long(p);
    auto bs = o.lat.basis_elements();
    // nrd mod p on O/pO via the even Gram (nrd = v^T G v / 2)
    const MatQ& g = o.lat.gram();
    long gz[4][4];
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Int e = to_int(g(i, j)) % p;
            if (e < 0) e += p;
            gz[i][j] = to_long(e);
        }
    long inv2 = (lp + 1) / 2;
    std::vector<std::array<long, 4>> zero_set;
    std::array<long, 4> v;
    for (v[0] = 0; v[0] < lp; ++v[0])
        for (v[1] = 0; v[1] < lp; ++v[1])
            for (v[2] = 0; v[2] < lp; ++v[2])
                for (v[3] = 0; v[3] < lp; ++v[3]) {
                    long q = 0;
                    for (int i = 0; i < 4; ++i)
                        for (int j = 0; j < 4; ++j)
                            q = (q + gz[i][j] * ((v[i] * v[j]) % lp)) % lp;
                    q = q * inv2 % lp;
                    if (q == 0) zero_set.push_back(v);
                }
    // for ramified p the zero set must be an F_p-subspace of dimension 2
    if (zero_set.size() != static_cast<size_t>(lp) * lp)
        throw InternalError("nrd radical has wrong size mod p");
    std::set<std::array<long, 4>> zs(zero_set.begin(), zero_set.end());
    for (const auto& x : zero_set)
        for (const auto& y : zero_set) {
            std::array<long, 4> s;
            for (int i = 0; i < 4; ++i) s[i] = (x[i] + y[i]) % lp;
            if (!zs.count(s)) throw InternalError("nrd zero set not a subspace");
        }
    MatQ rows(4 + static_cast<int>(zero_set.size()), 4);
    MatQ obase = o.lat.basis().rows();
    for (int i = 0; i < 4; ++i)
        for (int c = 0; c < 4; ++c) rows(i, c) = obase(i, c) * Rat(p);
    int r = 4;
    for (const auto& w : zero_set) {
        QuatElement x(o.lat.algebra(), Rat(0), Rat(0), Rat(0), Rat(0));
        for (int t = 0; t < 4; ++t)
            if (w[t] != 0) x = x + Rat(w[t]) * bs[t];
        for (int c = 0; c < 4; ++c) rows(r, c) = x[c];
        ++r;
    }
    QuatLattice pl = QuatLattice::span(o.lat.algebra(), rows);
    if (pl.norm() != p) throw InternalError("bilateral ideal norm != p");
    if (lattice_index(o.lat.basis(), pl.basis()) != p * p)
        throw InternalError("bilateral ideal index != p^2");
    QuatLattice sq = lattice_product(pl, pl);
    if (sq != lattice_scale(o.lat, Rat(p)))
        throw InternalError("P^2 != p*O");
    return pl;
}

namespace {

QuatLattice add_one(const QuatLattice& lat) {
    MatQ rows(5, 4);
    rows(0, 0) = 1;
    for (int c = 1; c < 4; ++c) rows(0, c) = 0;
    rows.bottomRows(4) = lat.basis().rows();
    return QuatLattice::span(lat.algebra(), rows);
}

}  // namespace

Order sub_order_tilde(const Order& o, const Int& p) {
    QuatLattice pmax = bilateral_norm_p_of_max(o, p);
    Order tilde = make_order(add_one(pmax));
    if (lattice_index(o.lat.basis(), tilde.lat.basis()) != p)
        throw InternalError("[O : O_tilde] != p");
    if (tilde.disc() != p * p) throw InternalError("disc(O_tilde) != p^2");
    // cross-check against {x in O : p | delta(x)} over O/pO
    const long lp = to_long(p);
    auto bs = o.lat.basis_elements();
    std::array<long, 4> v;
    for (v[0] = 0; v[0] < lp; ++v[0])
        for (v[1] = 0; v[1] < lp; ++v[1])
            for (v[2] = 0; v[2] < lp; ++v[2])
                for (v[3] = 0; v[3] < lp; ++v[3]) {
                    QuatElement x(o.lat.algebra(), Rat(0), Rat(0), Rat(0), Rat(0));
                    bool started = false;
                    for (int t = 0; t < 4; ++t) {
                        if (v[t] == 0) continue;
                        QuatElement term = Rat(v[t]) * bs[t];
                        x = started ? x + term : term;
                        started = true;
                    }
                    if (!started) continue;
                    Rat d = x.delta();
                    bool div = is_integer(d / Rat(p));
                    if (div != tilde.lat.contains(x))
                        throw InternalError(
                            "delta-divisibility and Z+P characterizations differ");
                }
    return tilde;
}

int char_chi_ideal(const QuatLattice& ideal, const Int& p) {
    for (long m = 1; m <= 4 * to_long(p); ++m) {
        if (Int(m) % p == 0) continue;
        auto elems = ideal.elements_of_norm(Rat(m) * ideal.norm());
        if (!elems.empty()) return legendre(Int(m), p);
    }
    throw WitnessError("no norm witness coprime to p found");
}

int char_chi_suborder(const Order& sub, const Int& p) {
    for (long m = 1; m <= 8 * to_long(p); ++m) {
        for (const auto& x : sub.lat.elements_of_norm(Rat(m))) {
            Rat d = x.delta();
            if (d == 0) continue;
            Rat dp = d / Rat(p);
            if (!is_integer(dp)) continue;
            Int val = to_int(dp);
            if (val % p == 0) continue;
            return legendre(-val, p);
        }
    }
    throw WitnessError("no element with p || delta found");
}

Order suborder_from_bilateral(const QuatLattice& p_ideal, const Int& p) {
    Order sub = make_order(add_one(p_ideal));
    if (sub.disc() != p * p * p) throw IdealError("Z + ideal has disc != p^3");
    return sub;
}

QuatLattice bilateral_from_suborder(const Order& sub, const Int& p) {
    // {x in O' : p | trace(x)}: congruence sublattice in basis coordinates
    MatQ c(1, 4);
    auto bs = sub.lat.basis_elements();
    for (int i = 0; i < 4; ++i) c(0, i) = bs[i].trace() / Rat(p);
    HNFBasis coords = congruence_kernel(c);
    MatQ rows = matmul(coords.rows(), sub.lat.basis().rows());
    QuatLattice l = QuatLattice::span(sub.lat.algebra(), rows);
    if (l.norm() != p) throw IdealError("trace sublattice has norm != p");
    return l;
}

LevelP2Context build_context_from(std::unique_ptr<QuatAlgebra> alg, Order o_max,
                                  const Int& p) {
    LevelP2Context ctx;
    ctx.p = p;
    ctx.algebra = std::move(alg);
    ctx.O_max = std::move(o_max);
    if (ctx.O_max.disc() != p) throw ConstructionError("maximal order disc != p");
    ctx.P_max = bilateral_norm_p_of_max(ctx.O_max, p);
    ctx.O_tilde = sub_order_tilde(ctx.O_max, p);

    // The p+1 index-p suborders of O_tilde are the subgroups of index p in
    // O_tilde/(Z + pO), which is 2-dimensional over F_p.
    QuatLattice base = add_one(lattice_scale(ctx.O_max.lat, Rat(p)));
    Int idx = lattice_index(ctx.O_tilde.lat.basis(), base.basis());
    if (idx != p * p) throw InternalError("[O_tilde : Z+pO] != p^2");
    const long lp = to_long(p);
    auto bs = ctx.O_tilde.lat.basis_elements();
    auto coset_key = [&](const QuatElement& x) {
        VecQ co = base.basis().coordinates(x.coords());
        std::string key;
        for (int i = 0; i < 4; ++i) {
            Rat v = co(i);
            Int fl;
            mpz_fdiv_q(fl.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
            Rat frac = v - Rat(fl);
            key += frac.get_str() + ",";
        }
        return key;
    };
    // scan O_tilde mod (Z + pO) to collect the p^2 cosets
    std::map<std::string, QuatElement> classes;
    std::array<long, 4> v;
    for (v[0] = 0; v[0] < lp; ++v[0])
        for (v[1] = 0; v[1] < lp; ++v[1])
            for (v[2] = 0; v[2] < lp; ++v[2])
                for (v[3] = 0; v[3] < lp; ++v[3]) {
                    QuatElement x(ctx.algebra.get(), Rat(0), Rat(0), Rat(0), Rat(0));
                    for (int t = 0; t < 4; ++t)
                        if (v[t] != 0) x = x + Rat(v[t]) * bs[t];
                    classes.emplace(coset_key(x), x);
                }
    if (classes.size() != static_cast<size_t>(lp) * lp)
        throw InternalError("quotient O_tilde/(Z+pO) has wrong size");
    // generators: a nonzero class u, then w outside the line <u>
    QuatElement zero(ctx.algebra.get(), Rat(0), Rat(0), Rat(0), Rat(0));
    QuatElement u = zero, w = zero;
    for (auto& [key, x] : classes)
        if (!base.contains(x)) {
            u = x;
            break;
        }
    std::set<std::string> span_u;
    for (long k = 0; k < lp; ++k) span_u.insert(coset_key(Rat(k) * u));
    for (auto& [key, x] : classes)
        if (!span_u.count(key)) {
            w = x;
            break;
        }
    // the p+1 lines of <u, w>: u and w + t*u for t = 0..p-1
    std::vector<QuatElement> line_gens;
    line_gens.push_back(u);
    for (long t = 0; t < lp; ++t) line_gens.push_back(w + Rat(t) * u);
    for (const auto& g : line_gens) {
        MatQ rows(5, 4);
        rows.topRows(4) = base.basis().rows();
        for (int c2 = 0; c2 < 4; ++c2) rows(4, c2) = g[c2];
        Order sub = make_order(QuatLattice::span(ctx.algebra.get(), rows));
        if (sub.disc() != p * p * p) throw InternalError("suborder disc != p^3");
        if (lattice_index(ctx.O_tilde.lat.basis(), sub.lat.basis()) != p)
            throw InternalError("suborder index != p");
        SubOrderP3 s;
        s.order = sub;
        s.source_ideal = bilateral_from_suborder(sub, p);
        s.character_sign = char_chi_ideal(s.source_ideal, p);
        ctx.suborders.push_back(std::move(s));
    }
    if (ctx.suborders.size() != static_cast<size_t>(lp + 1))
        throw InternalError("expected p+1 suborders");
    // deterministic order
    std::sort(ctx.suborders.begin(), ctx.suborders.end(),
              [](const SubOrderP3& a, const SubOrderP3& b) {
                  return a.order.lat < b.order.lat;
              });
    return ctx;
}

LevelP2Context build_context(const Int& p) {
    auto alg = std::make_unique<QuatAlgebra>(build_algebra(p));
    Order o = maximal_order(*alg);
    return build_context_from(std::move(alg), std::move(o), p);
}

Int choose_q(const Int& D, const Int& p) {
    if (D >= 0 || D % 2 == 0) throw InputError("D must be odd and negative");
    if (D % p != 0) throw InputError("p must divide D");
    Int pstar = (legendre(Int(-1), p) == 1) ? p : -p;
    Int d0 = D / pstar;
    Int ad0 = abs(d0);
    Int q = 2;
    while (q < 1000000) {
        q = next_prime(q);
        if ((2 * D) % q == 0) continue;
        if (legendre(-q, p) != -1) continue;
        if (ad0 > 1 && (q + 1) % ad0 != 0) continue;
        return q;
    }
    throw SearchExhausted("no q below 10^6");
}

}  // namespace qlift
