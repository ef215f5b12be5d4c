#ifndef QLIFT_ENUMERATE_HPP
#define QLIFT_ENUMERATE_HPP

#include <functional>
#include <vector>

#include "qlift/linalg.hpp"

namespace qlift {

/// All integer vectors v with v^T gram v = target, each listed once, sorted
/// lexicographically. gram must be symmetric positive definite (FormError
/// otherwise). target = 0 yields exactly the zero vector.
///
/// Strategy: exact LDL ranges after Gram reduction (size reduction plus
/// pairwise swaps), with an int64 leaf check when everything fits; see
/// enumerate_box_scan for the plain oracle kept as a cross-check.
std::vector<VecZ> enumerate_by_value(const MatQ& gram, const Rat& target);

/// Same contract, naive bounded box scan. Slow; the correctness oracle.
std::vector<VecZ> enumerate_box_scan(const MatQ& gram, const Rat& target);

/// counts[m] = #{v in Z^n : v^T gram v = m} for 0 <= m <= prec.
/// Values of the form on Z^n must be integers.
std::vector<Int> theta_counts(const MatQ& gram, long prec);

/// Visit every nonzero v (up to sign: one of {v, -v}) with value <= bound.
/// cb(coords, exact value).
void enumerate_leq(const MatQ& gram, const Rat& bound,
                   const std::function<void(const std::vector<Int>&, const Rat&)>& cb);

}  // namespace qlift

#endif
