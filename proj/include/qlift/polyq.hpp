#ifndef QLIFT_POLYQ_HPP
#define QLIFT_POLYQ_HPP

#include <vector>

#include "qlift/linalg.hpp"

namespace qlift {

/// Dense polynomial over Q, coefficients ascending. Normalized: no trailing
/// zero coefficients (the zero polynomial is the empty vector).
using PolyQ = std::vector<Rat>;

PolyQ poly_normalize(PolyQ p);
int poly_deg(const PolyQ& p);  // -1 for zero
PolyQ poly_add(const PolyQ& a, const PolyQ& b);
PolyQ poly_sub(const PolyQ& a, const PolyQ& b);
PolyQ poly_mul(const PolyQ& a, const PolyQ& b);
PolyQ poly_scale(const PolyQ& a, const Rat& c);
void poly_divmod(const PolyQ& a, const PolyQ& b, PolyQ& q, PolyQ& r);
PolyQ poly_divexact(const PolyQ& a, const PolyQ& b);
PolyQ poly_gcd(PolyQ a, PolyQ b);  // monic
PolyQ poly_derivative(const PolyQ& a);
Rat poly_eval(const PolyQ& a, const Rat& x);
bool poly_is_squarefree(const PolyQ& a);
PolyQ poly_monic(PolyQ a);

/// Characteristic polynomial det(xI - A) via Faddeev-LeVerrier, exact.
PolyQ charpoly(const MatQ& a);

/// Elements of Q[X]/(P) for a fixed monic modulus P. Supports the exact
/// per-eigenline identity tests: with lambda the class of X, identities are
/// verified simultaneously for every root of P.
class QuotRing {
   public:
    explicit QuotRing(PolyQ modulus);
    const PolyQ& modulus() const { return mod_; }
    int deg() const { return poly_deg(mod_); }

    PolyQ reduce(PolyQ p) const;
    PolyQ mul(const PolyQ& a, const PolyQ& b) const;
    /// Inverse mod P; false if a is a zero divisor.
    bool try_inverse(const PolyQ& a, PolyQ& inv) const;

    /// Coefficients q_i in R = Q[X]/(P) of the synthetic quotient
    /// Q(Y) = (P(Y) - P(X))/(Y - X) = sum q_i Y^i, so that for a matrix A
    /// with charpoly P, (A - X) Q(A) = -P(X) = 0 in R: Q(A)w is an exact
    /// X-eigenvector for any seed w.
    std::vector<PolyQ> synthetic_quotient() const;

   private:
    PolyQ mod_;
};

/// v <- A v with v over the quotient ring (A rational).
std::vector<PolyQ> ring_matvec(const QuotRing& R, const MatQ& a,
                               const std::vector<PolyQ>& v);

/// Exact eigenvector of A over R = Q[X]/(charpoly factor): Horner evaluation
/// of the synthetic quotient at A applied to seed w.
std::vector<PolyQ> ring_eigenvector(const QuotRing& R, const MatQ& a, const VecQ& w);

/// sum_i c_i v_i in R.
PolyQ ring_dot(const QuotRing& R, const VecQ& c, const std::vector<PolyQ>& v);

}  // namespace qlift

#endif
