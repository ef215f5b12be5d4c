#ifndef QLIFT_LINALG_HPP
#define QLIFT_LINALG_HPP

#include <optional>
#include <string>
#include <vector>

#include "qlift/numeric.hpp"

namespace qlift {

// ---------------------------------------------------------------------------
// Exact dense helpers (Eigen matrices used as containers, loops kept explicit
// so gmpxx expression templates never meet Eigen's reduction kernels).
// ---------------------------------------------------------------------------

MatQ matmul(const MatQ& a, const MatQ& b);
VecQ matvec(const MatQ& a, const VecQ& v);
Rat dot(const VecQ& a, const VecQ& b);
MatQ mat_from_z(const MatZ& m);
MatZ mat_to_z(const MatQ& m);  // entries must be integers
Rat det(MatQ m);               // exact, fraction-free-ish Gaussian elimination

/// Exact inverse; throws RankError if singular.
MatQ inverse(MatQ m);

/// Basis of the right kernel {x : m x = 0} over Q, columns of the result.
MatQ kernel(MatQ m);

/// Rank over Q.
int rank(MatQ m);

/// Solve m x = rhs exactly. Throws RankError if no solution.
VecQ solve(MatQ m, VecQ rhs);

/// Echelonized basis of {x in F_ell^n : m x = 0 (mod ell)}, columns.
/// ell must be prime.
std::vector<std::vector<long>> kernel_mod_ell(const MatZ& m, long ell);

// ---------------------------------------------------------------------------
// Canonical lattice bases in Hermite normal form
// ---------------------------------------------------------------------------

/// Row Hermite normal form of an integer matrix. Returns the HNF (zero rows
/// dropped); pivots positive, entries above a pivot reduced into [0, pivot).
MatZ hnf_int(MatZ m);

/// HNF with unimodular transform: u * m = h (u square, |det u| = 1);
/// the trailing rows of u span the left kernel of m.
void hnf_int_transform(const MatZ& m, MatZ& h, MatZ& u);

/// A full-rank lattice in Q^n held as scale * rowspan(mat) with mat an
/// integer row-HNF matrix of content 1 and scale > 0. Two HNFBasis values
/// compare equal iff they span the same lattice.
class HNFBasis {
   public:
    HNFBasis() = default;
    HNFBasis(Rat scale, MatZ mat) : scale_(std::move(scale)), mat_(std::move(mat)) {}

    int dim() const { return static_cast<int>(mat_.rows()); }
    const Rat& scale() const { return scale_; }
    const MatZ& mat() const { return mat_; }

    /// Basis rows as rational vectors.
    MatQ rows() const;

    Rat det_abs() const;

    /// Does the lattice contain v?
    bool contains(const VecQ& v) const;

    /// Coordinates of v in this basis if v is in the Q-span (always, full
    /// rank), integral iff contained.
    VecQ coordinates(const VecQ& v) const;

    bool operator==(const HNFBasis& o) const {
        return scale_ == o.scale_ && mat_ == o.mat_;
    }
    bool operator!=(const HNFBasis& o) const { return !(*this == o); }

    /// Total order for deterministic containers.
    bool operator<(const HNFBasis& o) const;

    std::string key() const;

   private:
    Rat scale_ = 1;
    MatZ mat_;
};

/// Canonical basis of the Z-span of the given rational row vectors.
/// Throws RankError if the span has rank < cols.
HNFBasis hnf(const MatQ& generators);

/// [L_sup : L_sub] as a positive integer; ContainmentError if not contained.
Int lattice_index(const HNFBasis& sup, const HNFBasis& sub);

bool lattice_contains(const HNFBasis& outer, const HNFBasis& inner);

HNFBasis lattice_sum(const HNFBasis& a, const HNFBasis& b);
HNFBasis lattice_intersect(const HNFBasis& a, const HNFBasis& b);
HNFBasis lattice_scale(const HNFBasis& a, const Rat& c);

/// {x in Z^n : C x is integral}, returned as an HNF lattice in Q^n.
/// C is m x n rational.
HNFBasis congruence_kernel(const MatQ& c);

/// Saturated integer kernel of an integer matrix (rows span {x : m^T... }),
/// i.e. {x in Z^n : x^T m = 0} as rows.
MatZ left_kernel_int(const MatZ& m);

}  // namespace qlift

#endif
