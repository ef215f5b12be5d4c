#include "qlift/quat.hpp"

#include <algorithm>
#include <set>

namespace qlift {

namespace {

// Square-class representative: a nonzero rational ~ squarefree integer.
Int square_class(const Rat& a) {
    Int n = a.get_num() * a.get_den();
    Int r = 1;
    for (const Int& p : prime_factors(n)) {
        Int m = n;
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e % 2) r *= p;
    }
    if (n < 0) r = -r;
    return r;
}

int eps4(const Int& u) {  // (u-1)/2 mod 2 for odd u
    Int v = ((u - 1) / 2) % 2;
    return v < 0 ? static_cast<int>(to_long(v + 2)) : static_cast<int>(to_long(v));
}

int omega8(const Int& u) {  // (u^2-1)/8 mod 2 for odd u
    Int v = ((u * u - 1) / 8) % 2;
    return v < 0 ? static_cast<int>(to_long(v + 2)) : static_cast<int>(to_long(v));
}

}  // namespace

int hilbert_symbol(const Rat& a, const Rat& b, const std::optional<Int>& place) {
    if (a == 0 || b == 0) throw InputError("hilbert symbol needs nonzero arguments");
    Int sa = square_class(a), sb = square_class(b);
    if (!place.has_value()) return (sa < 0 && sb < 0) ? -1 : 1;
    const Int& p = *place;
    if (!is_prime(p)) throw InputError("hilbert place must be prime or infinity");
    auto split = [&p](Int n, int& val) {
        val = 0;
        while (n % p == 0) {
            n /= p;
            ++val;
        }
        return n;
    };
    int alpha, beta;
    Int u = split(sa, alpha), v = split(sb, beta);
    alpha %= 2;
    beta %= 2;
    if (p == 2) {
        int e = eps4(u) * eps4(v) + alpha * omega8(v) + beta * omega8(u);
        return (e % 2) ? -1 : 1;
    }
    int sym = 1;
    if (alpha && beta) sym *= legendre(Int(-1), p);
    if (beta) sym *= legendre(u, p);
    if (alpha) sym *= legendre(v, p);
    return sym;
}

QuatAlgebra make_algebra(const Rat& a, const Rat& b) {
    if (a >= 0 || b >= 0)
        throw InputError("algebra must be definite: a < 0, b < 0");
    QuatAlgebra alg;
    alg.a = a;
    alg.b = b;
    alg.ramified_at_infinity = (hilbert_symbol(a, b, std::nullopt) == -1);
    std::set<Int> candidates{Int(2)};
    for (const Int& p : prime_factors(square_class(a))) candidates.insert(p);
    for (const Int& p : prime_factors(square_class(b))) candidates.insert(p);
    for (const Int& p : candidates)
        if (hilbert_symbol(a, b, p) == -1) alg.ramified_primes.push_back(p);
    std::sort(alg.ramified_primes.begin(), alg.ramified_primes.end());
    size_t total = alg.ramified_primes.size() + (alg.ramified_at_infinity ? 1 : 0);
    if (total % 2 != 0) throw InternalError("odd number of ramified places");
    if (!alg.ramified_at_infinity) throw InputError("algebra not ramified at infinity");
    return alg;
}

VecQ QuatElement::coords() const {
    VecQ v(4);
    for (int i = 0; i < 4; ++i) v(i) = c_[i];
    return v;
}

Rat QuatElement::nrd() const {
    const Rat& a = alg_->a;
    const Rat& b = alg_->b;
    return c_[0] * c_[0] - a * c_[1] * c_[1] - b * c_[2] * c_[2] +
           a * b * c_[3] * c_[3];
}

bool QuatElement::is_zero() const {
    return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

QuatElement QuatElement::inverse() const {
    if (is_zero()) throw DegenerateError("inverse of zero quaternion");
    Rat n = nrd();
    QuatElement cj = conj();
    return {alg_, cj[0] / n, cj[1] / n, cj[2] / n, cj[3] / n};
}

QuatElement operator*(const QuatElement& x, const QuatElement& y) {
    if (x.alg_ != y.alg_) throw AlgebraError("elements of different algebras");
    const Rat& a = x.alg_->a;
    const Rat& b = x.alg_->b;
    const auto& u = x.c_;
    const auto& v = y.c_;
    return {x.alg_,
            u[0] * v[0] + a * u[1] * v[1] + b * u[2] * v[2] - a * b * u[3] * v[3],
            u[0] * v[1] + u[1] * v[0] - b * (u[2] * v[3] - u[3] * v[2]),
            u[0] * v[2] + u[2] * v[0] + a * (u[1] * v[3] - u[3] * v[1]),
            u[0] * v[3] + u[3] * v[0] + u[1] * v[2] - u[2] * v[1]};
}

QuatElement operator+(const QuatElement& x, const QuatElement& y) {
    if (x.alg_ != y.alg_) throw AlgebraError("elements of different algebras");
    return {x.alg_, x.c_[0] + y.c_[0], x.c_[1] + y.c_[1], x.c_[2] + y.c_[2],
            x.c_[3] + y.c_[3]};
}

QuatElement operator-(const QuatElement& x, const QuatElement& y) {
    if (x.alg_ != y.alg_) throw AlgebraError("elements of different algebras");
    return {x.alg_, x.c_[0] - y.c_[0], x.c_[1] - y.c_[1], x.c_[2] - y.c_[2],
            x.c_[3] - y.c_[3]};
}

QuatElement operator*(const Rat& c, const QuatElement& x) {
    return {x.alg_, c * x.c_[0], c * x.c_[1], c * x.c_[2], c * x.c_[3]};
}

MatQ lmul_matrix(const QuatElement& q) {
    const QuatAlgebra* alg = q.algebra();
    MatQ m(4, 4);
    for (int k = 0; k < 4; ++k) {
        VecQ e(4);
        for (int i = 0; i < 4; ++i) e(i) = (i == k) ? 1 : 0;
        QuatElement prod = q * QuatElement(alg, e);
        for (int l = 0; l < 4; ++l) m(k, l) = prod[l];
    }
    return m;
}

MatQ rmul_matrix(const QuatElement& q) {
    const QuatAlgebra* alg = q.algebra();
    MatQ m(4, 4);
    for (int k = 0; k < 4; ++k) {
        VecQ e(4);
        for (int i = 0; i < 4; ++i) e(i) = (i == k) ? 1 : 0;
        QuatElement prod = QuatElement(alg, e) * q;
        for (int l = 0; l < 4; ++l) m(k, l) = prod[l];
    }
    return m;
}

QuatLattice QuatLattice::span(const QuatAlgebra* alg, const MatQ& rows) {
    QuatLattice lat;
    lat.alg_ = alg;
    lat.basis_ = hnf(rows);
    auto bs = lat.basis_elements();
    // gcd of the norm values: generated by nrd(b_i) and the polarization
    // values nrd(b_i + b_j) - nrd(b_i) - nrd(b_j)
    Rat n = 0;
    for (int i = 0; i < 4; ++i) {
        n = rat_gcd(n, bs[i].nrd());
        for (int j = i + 1; j < 4; ++j) {
            Rat bil = (bs[i] + bs[j]).nrd() - bs[i].nrd() - bs[j].nrd();
            n = rat_gcd(n, bil);
        }
    }
    if (n == 0) throw DegenerateError("zero lattice norm");
    lat.norm_ = n;
    lat.gram_ = MatQ(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            QuatElement prod = bs[i] * bs[j].conj();
            lat.gram_(i, j) = prod.trace() / n;
        }
    Rat d = det(lat.gram_);
    if (!is_integer(d)) throw InternalError("gram determinant not integral");
    lat.disc_ = exact_sqrt(to_int(d));
    return lat;
}

std::array<QuatElement, 4> QuatLattice::basis_elements() const {
    MatQ rows = basis_.rows();
    std::array<QuatElement, 4> out;
    for (int i = 0; i < 4; ++i)
        out[i] = QuatElement(alg_, VecQ(rows.row(i).transpose()));
    return out;
}

QuatElement QuatLattice::element(const VecQ& basis_coords) const {
    MatQ rows = basis_.rows();
    VecQ c(4);
    for (int j = 0; j < 4; ++j) {
        Rat s = 0;
        for (int i = 0; i < 4; ++i) s += basis_coords(i) * rows(i, j);
        c(j) = s;
    }
    return {alg_, c};
}

bool QuatLattice::contains(const QuatElement& x) const {
    return basis_.contains(x.coords());
}

std::vector<QuatElement> QuatLattice::elements_of_norm(const Rat& target) const {
    // nrd(x) = v^T gram v / 2 with gram already divided by norm:
    // nrd = target  <=>  v^T (gram/2) v = target / norm
    MatQ half = gram_;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) half(i, j) /= 2;
    std::vector<VecZ> vs = enumerate_by_value(half, target / norm_);
    std::vector<QuatElement> out;
    out.reserve(vs.size());
    for (const VecZ& v : vs) {
        VecQ c(4);
        for (int i = 0; i < 4; ++i) c(i) = Rat(v(i));
        out.push_back(element(c));
    }
    return out;
}

std::vector<Int> QuatLattice::norm_counts(long prec) const {
    MatQ half = gram_;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) half(i, j) /= 2;
    return theta_counts(half, prec);
}

QuatLattice lattice_product(const QuatLattice& l1, const QuatLattice& l2) {
    if (l1.algebra() != l2.algebra())
        throw AlgebraError("lattice product across algebras");
    auto b1 = l1.basis_elements();
    auto b2 = l2.basis_elements();
    MatQ rows(16, 4);
    int r = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            QuatElement prod = b1[i] * b2[j];
            for (int c = 0; c < 4; ++c) rows(r, c) = prod[c];
            ++r;
        }
    return QuatLattice::span(l1.algebra(), rows);
}

QuatLattice lattice_conj(const QuatLattice& l) {
    MatQ rows = l.basis().rows();
    for (Eigen::Index i = 0; i < 4; ++i)
        for (Eigen::Index j = 1; j < 4; ++j) rows(i, j) = -rows(i, j);
    return QuatLattice::span(l.algebra(), rows);
}

QuatLattice lattice_add(const QuatLattice& l1, const QuatLattice& l2) {
    if (l1.algebra() != l2.algebra()) throw AlgebraError("lattice sum across algebras");
    MatQ rows(8, 4);
    rows.topRows(4) = l1.basis().rows();
    rows.bottomRows(4) = l2.basis().rows();
    return QuatLattice::span(l1.algebra(), rows);
}

QuatLattice lattice_scale(const QuatLattice& l, const Rat& c) {
    if (c == 0) throw DegenerateError("zero scaling");
    MatQ rows = l.basis().rows();
    for (Eigen::Index i = 0; i < 4; ++i)
        for (Eigen::Index j = 0; j < 4; ++j) rows(i, j) *= c;
    return QuatLattice::span(l.algebra(), rows);
}

QuatLattice lattice_intersect(const QuatLattice& l1, const QuatLattice& l2) {
    if (l1.algebra() != l2.algebra())
        throw AlgebraError("lattice intersection across algebras");
    HNFBasis h = lattice_intersect(l1.basis(), l2.basis());
    return QuatLattice::span(l1.algebra(), h.rows());
}

QuatLattice lattice_inverse(const QuatLattice& l) {
    return lattice_scale(lattice_conj(l), 1 / l.norm());
}

QuatLattice elem_mul_left(const QuatElement& q, const QuatLattice& l) {
    if (q.is_zero()) throw DegenerateError("multiplying lattice by zero");
    MatQ m = lmul_matrix(q);
    return QuatLattice::span(l.algebra(), matmul(l.basis().rows(), m));
}

QuatLattice elem_mul_right(const QuatLattice& l, const QuatElement& q) {
    if (q.is_zero()) throw DegenerateError("multiplying lattice by zero");
    MatQ m = rmul_matrix(q);
    return QuatLattice::span(l.algebra(), matmul(l.basis().rows(), m));
}

bool is_order(const QuatLattice& lat) {
    VecQ one(4);
    one << Rat(1), Rat(0), Rat(0), Rat(0);
    if (!lat.basis().contains(one)) return false;
    auto bs = lat.basis_elements();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (!lat.contains(bs[i] * bs[j])) return false;
    return true;
}

Order make_order(QuatLattice lat) {
    if (!is_order(lat)) throw ConstructionError("lattice is not an order");
    return Order{std::move(lat)};
}

Order right_order(const QuatLattice& l) {
    auto bs = l.basis_elements();
    QuatLattice acc;
    bool first = true;
    for (int i = 0; i < 4; ++i) {
        QuatLattice img = elem_mul_left(bs[i].inverse(), l);
        acc = first ? img : lattice_intersect(acc, img);
        first = false;
    }
    return make_order(std::move(acc));
}

Order left_order(const QuatLattice& l) {
    auto bs = l.basis_elements();
    QuatLattice acc;
    bool first = true;
    for (int i = 0; i < 4; ++i) {
        QuatLattice img = elem_mul_right(l, bs[i].inverse());
        acc = first ? img : lattice_intersect(acc, img);
        first = false;
    }
    return make_order(std::move(acc));
}

std::vector<QuatElement> unit_half_group(const Order& o) {
    auto units = o.lat.elements_of_norm(Rat(1) * o.lat.norm());
    std::vector<QuatElement> half;
    for (const auto& u : units) {
        for (int i = 0; i < 4; ++i) {
            if (u[i] == 0) continue;
            if (u[i] > 0) half.push_back(u);
            break;
        }
    }
    return half;
}

}  // namespace qlift
