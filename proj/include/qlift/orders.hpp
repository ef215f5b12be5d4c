#ifndef QLIFT_ORDERS_HPP
#define QLIFT_ORDERS_HPP

#include <memory>
#include <vector>

#include "qlift/quat.hpp"

namespace qlift {

/// The rational quaternion algebra ramified exactly at {p, infinity}:
/// (-1,-p) for p = 3 mod 4, (-2,-p) for p = 5 mod 8, (-q0,-p) with q0 = 3
/// mod 4 prime and (q0|p) = -1 for p = 1 mod 8. Ramification is certified
/// by Hilbert symbols.
QuatAlgebra build_algebra(const Int& p);

/// Maximal order by saturation from Z<1,i,j,k>: at each prime dividing the
/// discriminant excess, adjoin integral elements of (1/l)L found by
/// exhaustive projective scan until the reduced discriminant equals the
/// product of the finite ramified primes.
Order maximal_order(const QuatAlgebra& alg);

/// The norm-p bilateral ideal of a maximal order of discriminant p:
/// p*O plus the (2-dimensional) radical of nrd mod p.
QuatLattice bilateral_norm_p_of_max(const Order& o, const Int& p);

/// The unique index-p suborder {x in O : p | delta(x)}; built as Z + P_max
/// and cross-checked against the delta-divisibility characterization.
Order sub_order_tilde(const Order& o, const Int& p);

struct SubOrderP3 {
    Order order;              // disc p^3
    QuatLattice source_ideal; // the norm-p bilateral O_tilde-ideal with Z+p = order
    int character_sign;       // chi of the ideal
};

/// chi of a left O_tilde-ideal: legendre(nrd_I(x), p) for a witness x in I
/// with p not dividing nrd_I(x).
int char_chi_ideal(const QuatLattice& ideal, const Int& p);

/// chi of an index-p suborder of O_tilde: legendre(-delta(x)/p, p) for a
/// witness with p || delta(x).
int char_chi_suborder(const Order& sub, const Int& p);

/// Z + ideal (for the suborder <-> bilateral correspondence).
Order suborder_from_bilateral(const QuatLattice& p_ideal, const Int& p);

/// {x in O' : p | trace(x)}, the inverse of the correspondence.
QuatLattice bilateral_from_suborder(const Order& sub, const Int& p);

/// Everything the level-p^2 pipeline needs; algebra owned at a stable
/// address, all derived lattices reference it.
struct LevelP2Context {
    Int p;
    std::unique_ptr<QuatAlgebra> algebra;
    Order O_max;               // disc p
    Order O_tilde;             // disc p^2
    QuatLattice P_max;         // norm-p bilateral ideal of O_max
    std::vector<SubOrderP3> suborders;  // p+1 of them, disc p^3

    LevelP2Context() = default;
    LevelP2Context(LevelP2Context&&) = default;
    LevelP2Context& operator=(LevelP2Context&&) = default;
};

/// Builds the canonical context for p via build_algebra/maximal_order.
LevelP2Context build_context(const Int& p);

/// Builds a context around a caller-supplied algebra and maximal order
/// (used by the K-aligned construction).
LevelP2Context build_context_from(std::unique_ptr<QuatAlgebra> alg, Order o_max,
                                  const Int& p);

/// Smallest prime q with q coprime to 2D, (-q|p) = -1, q = -1 mod |D0|,
/// where D = p* D0. Search capped at 10^6.
Int choose_q(const Int& D, const Int& p);

}  // namespace qlift

#endif
