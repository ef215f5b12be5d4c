#include "qlift/polyq.hpp"

namespace qlift {

PolyQ poly_normalize(PolyQ p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

int poly_deg(const PolyQ& p) { return static_cast<int>(p.size()) - 1; }

PolyQ poly_add(const PolyQ& a, const PolyQ& b) {
    PolyQ r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return poly_normalize(std::move(r));
}

PolyQ poly_sub(const PolyQ& a, const PolyQ& b) {
    PolyQ r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return poly_normalize(std::move(r));
}

PolyQ poly_mul(const PolyQ& a, const PolyQ& b) {
    if (a.empty() || b.empty()) return {};
    PolyQ r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return poly_normalize(std::move(r));
}

PolyQ poly_scale(const PolyQ& a, const Rat& c) {
    if (c == 0) return {};
    PolyQ r = a;
    for (auto& x : r) x *= c;
    return r;
}

void poly_divmod(const PolyQ& a, const PolyQ& b, PolyQ& q, PolyQ& r) {
    if (b.empty()) throw InternalError("polynomial division by zero");
    r = a;
    q.assign(a.size(), Rat(0));
    const int db = poly_deg(b);
    Rat lead_inv = 1 / b.back();
    while (poly_deg(r) >= db) {
        int dr = poly_deg(r);
        Rat c = r.back() * lead_inv;
        q[dr - db] = c;
        for (int i = 0; i <= db; ++i) r[dr - db + i] -= c * b[i];
        r = poly_normalize(std::move(r));
    }
    q = poly_normalize(std::move(q));
}

PolyQ poly_divexact(const PolyQ& a, const PolyQ& b) {
    PolyQ q, r;
    poly_divmod(a, b, q, r);
    if (!r.empty()) throw InternalError("polynomial division not exact");
    return q;
}

PolyQ poly_monic(PolyQ a) {
    a = poly_normalize(std::move(a));
    if (a.empty()) return a;
    Rat inv = 1 / a.back();
    for (auto& c : a) c *= inv;
    return a;
}

PolyQ poly_gcd(PolyQ a, PolyQ b) {
    a = poly_normalize(std::move(a));
    b = poly_normalize(std::move(b));
    while (!b.empty()) {
        PolyQ q, r;
        poly_divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(std::move(a));
}

PolyQ poly_derivative(const PolyQ& a) {
    if (a.size() <= 1) return {};
    PolyQ r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * Rat(static_cast<long>(i));
    return poly_normalize(std::move(r));
}

Rat poly_eval(const PolyQ& a, const Rat& x) {
    Rat r = 0;
    for (size_t i = a.size(); i-- > 0;) r = r * x + a[i];
    return r;
}

bool poly_is_squarefree(const PolyQ& a) {
    PolyQ g = poly_gcd(a, poly_derivative(a));
    return poly_deg(g) == 0;
}

PolyQ charpoly(const MatQ& a) {
    const int n = static_cast<int>(a.rows());
    if (a.cols() != n) throw InternalError("charpoly of non-square");
    // Faddeev-LeVerrier: M_0 = I, c_n = 1;
    // M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k
    PolyQ c(n + 1, Rat(0));
    c[n] = 1;
    MatQ m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = (i == j) ? 1 : 0;
    MatQ am = a;
    for (int k = 1; k <= n; ++k) {
        am = matmul(a, m);
        Rat tr = 0;
        for (int i = 0; i < n; ++i) tr += am(i, i);
        c[n - k] = -tr / Rat(k);
        if (k < n) {
            m = am;
            for (int i = 0; i < n; ++i) m(i, i) += c[n - k];
        }
    }
    return c;
}

QuotRing::QuotRing(PolyQ modulus) : mod_(poly_monic(std::move(modulus))) {
    if (poly_deg(mod_) < 1) throw InternalError("QuotRing needs degree >= 1");
}

PolyQ QuotRing::reduce(PolyQ p) const {
    PolyQ q, r;
    poly_divmod(p, mod_, q, r);
    return r;
}

PolyQ QuotRing::mul(const PolyQ& a, const PolyQ& b) const {
    return reduce(poly_mul(a, b));
}

bool QuotRing::try_inverse(const PolyQ& a, PolyQ& inv) const {
    // extended euclid on (a, mod)
    PolyQ r0 = mod_, r1 = reduce(a);
    PolyQ s0 = {}, s1 = {Rat(1)};
    if (r1.empty()) return false;
    while (!r1.empty()) {
        PolyQ q, r;
        poly_divmod(r0, r1, q, r);
        PolyQ s = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (poly_deg(r0) != 0) return false;  // gcd not a unit: zero divisor
    inv = reduce(poly_scale(s0, 1 / r0[0]));
    return true;
}

std::vector<PolyQ> QuotRing::synthetic_quotient() const {
    const int n = deg();
    // q_{n-1} = 1; q_{i-1} = p_i + X q_i  (coefficients in R, X = class of X)
    std::vector<PolyQ> q(n);
    q[n - 1] = {Rat(1)};
    PolyQ x = {Rat(0), Rat(1)};
    for (int i = n - 1; i >= 1; --i) {
        PolyQ t = mul(x, q[i]);
        t = poly_add(t, PolyQ{mod_[i]});
        q[i - 1] = reduce(std::move(t));
    }
    return q;
}

std::vector<PolyQ> ring_matvec(const QuotRing& R, const MatQ& a,
                               const std::vector<PolyQ>& v) {
    const int n = static_cast<int>(a.rows());
    std::vector<PolyQ> r(n);
    for (int i = 0; i < n; ++i) {
        PolyQ s;
        for (int j = 0; j < n; ++j) {
            if (a(i, j) == 0 || v[j].empty()) continue;
            s = poly_add(s, poly_scale(v[j], a(i, j)));
        }
        r[i] = R.reduce(std::move(s));
    }
    return r;
}

std::vector<PolyQ> ring_eigenvector(const QuotRing& R, const MatQ& a, const VecQ& w) {
    const int n = static_cast<int>(a.rows());
    auto q = R.synthetic_quotient();
    const int d = R.deg();
    // Horner: v = q_{d-1} w; v = A v + q_i w
    std::vector<PolyQ> v(n);
    for (int i = 0; i < n; ++i) v[i] = R.reduce(poly_scale(q[d - 1], w(i)));
    for (int k = d - 2; k >= 0; --k) {
        v = ring_matvec(R, a, v);
        for (int i = 0; i < n; ++i)
            v[i] = R.reduce(poly_add(v[i], poly_scale(q[k], w(i))));
    }
    return v;
}

PolyQ ring_dot(const QuotRing& R, const VecQ& c, const std::vector<PolyQ>& v) {
    PolyQ s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (c(static_cast<Eigen::Index>(i)) == 0 || v[i].empty()) continue;
        s = poly_add(s, poly_scale(v[i], c(static_cast<Eigen::Index>(i))));
    }
    return R.reduce(std::move(s));
}

}  // namespace qlift
