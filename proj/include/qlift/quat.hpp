#ifndef QLIFT_QUAT_HPP
#define QLIFT_QUAT_HPP

#include <array>
#include <optional>
#include <vector>

#include "qlift/enumerate.hpp"
#include "qlift/linalg.hpp"

namespace qlift {

/// Local Hilbert symbol (a,b)_v. place = nullopt means the infinite place.
int hilbert_symbol(const Rat& a, const Rat& b, const std::optional<Int>& place);

/// Definite rational quaternion algebra with i^2 = a, j^2 = b, k = ij = -ji.
struct QuatAlgebra {
    Rat a, b;
    std::vector<Int> ramified_primes;  // finite ramified places, ascending
    bool ramified_at_infinity = false;

    bool operator==(const QuatAlgebra& o) const { return a == o.a && b == o.b; }
};

/// Builds the algebra and certifies ramification by Hilbert symbols.
/// Requires a < 0 and b < 0 (definite).
QuatAlgebra make_algebra(const Rat& a, const Rat& b);

class QuatElement {
   public:
    QuatElement() = default;
    QuatElement(const QuatAlgebra* alg, Rat c0, Rat c1, Rat c2, Rat c3)
        : alg_(alg), c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}
    QuatElement(const QuatAlgebra* alg, const VecQ& coords)
        : alg_(alg), c_{coords(0), coords(1), coords(2), coords(3)} {}

    const QuatAlgebra* algebra() const { return alg_; }
    const Rat& operator[](int i) const { return c_[i]; }
    VecQ coords() const;

    QuatElement conj() const { return {alg_, c_[0], -c_[1], -c_[2], -c_[3]}; }
    Rat trace() const { return 2 * c_[0]; }
    Rat nrd() const;
    /// Discriminant of the characteristic polynomial, trace^2 - 4 nrd.
    Rat delta() const { return trace() * trace() - 4 * nrd(); }
    bool is_zero() const;

    QuatElement inverse() const;  // conj / nrd; DegenerateError on zero

    friend QuatElement operator*(const QuatElement& x, const QuatElement& y);
    friend QuatElement operator+(const QuatElement& x, const QuatElement& y);
    friend QuatElement operator-(const QuatElement& x, const QuatElement& y);
    friend QuatElement operator*(const Rat& c, const QuatElement& x);
    bool operator==(const QuatElement& o) const { return c_ == o.c_; }

   private:
    const QuatAlgebra* alg_ = nullptr;
    std::array<Rat, 4> c_{};
};

/// 4x4 matrix M with (q * e_k) = sum_l M(k,l) e_l; a row vector of
/// coordinates maps by r -> r M under left multiplication by q.
MatQ lmul_matrix(const QuatElement& q);
MatQ rmul_matrix(const QuatElement& q);

/// Full rank-4 lattice in a quaternion algebra, canonical HNF basis, with
/// the gcd norm, the even Gram of the primitive norm form, and the reduced
/// discriminant cached at construction.
class QuatLattice {
   public:
    QuatLattice() = default;

    /// Z-span of the given row vectors (coordinates in {1,i,j,k}).
    static QuatLattice span(const QuatAlgebra* alg, const MatQ& rows);

    const QuatAlgebra* algebra() const { return alg_; }
    const HNFBasis& basis() const { return basis_; }
    const Rat& norm() const { return norm_; }
    /// Even Gram of nrd/norm: entries tr(b_i conj(b_j))/norm, so
    /// nrd_L(x) = v^T gram v / 2 for coordinate vector v.
    const MatQ& gram() const { return gram_; }
    const Int& disc() const { return disc_; }

    std::array<QuatElement, 4> basis_elements() const;
    QuatElement element(const VecQ& basis_coords) const;
    bool contains(const QuatElement& x) const;

    bool operator==(const QuatLattice& o) const {
        return alg_ == o.alg_ && basis_ == o.basis_;
    }
    bool operator!=(const QuatLattice& o) const { return !(*this == o); }
    bool operator<(const QuatLattice& o) const { return basis_ < o.basis_; }
    std::string key() const { return basis_.key(); }

    /// All x in the lattice with nrd(x) = target, sorted.
    std::vector<QuatElement> elements_of_norm(const Rat& target) const;
    /// Count of x with nrd(x) = m * norm() for m = 0..prec.
    std::vector<Int> norm_counts(long prec) const;

   private:
    const QuatAlgebra* alg_ = nullptr;
    HNFBasis basis_;
    Rat norm_;
    MatQ gram_;
    Int disc_;
};

QuatLattice lattice_product(const QuatLattice& l1, const QuatLattice& l2);
QuatLattice lattice_conj(const QuatLattice& l);
QuatLattice lattice_add(const QuatLattice& l1, const QuatLattice& l2);
QuatLattice lattice_scale(const QuatLattice& l, const Rat& c);
QuatLattice lattice_intersect(const QuatLattice& l1, const QuatLattice& l2);
/// conj(I)/norm(I); two-sided inverse for locally principal ideals.
QuatLattice lattice_inverse(const QuatLattice& l);
QuatLattice elem_mul_left(const QuatElement& q, const QuatLattice& l);
QuatLattice elem_mul_right(const QuatLattice& l, const QuatElement& q);

struct Order {
    QuatLattice lat;

    const Int& disc() const { return lat.disc(); }
    bool operator==(const Order& o) const { return lat == o.lat; }
};

/// Validates the order axioms (1 in L, closure under multiplication).
Order make_order(QuatLattice lat);
bool is_order(const QuatLattice& lat);

Order right_order(const QuatLattice& l);
Order left_order(const QuatLattice& l);

/// Unit group of an order, one representative per +-pair.
std::vector<QuatElement> unit_half_group(const Order& o);

}  // namespace qlift

#endif
