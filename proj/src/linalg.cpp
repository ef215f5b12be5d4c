#include "qlift/linalg.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qlift {

MatQ matmul(const MatQ& a, const MatQ& b) {
    if (a.cols() != b.rows()) throw InternalError("matmul shape mismatch");
    MatQ r(a.rows(), b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < b.cols(); ++j) {
            Rat s = 0;
            for (Eigen::Index k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
            r(i, j) = s;
        }
    return r;
}

VecQ matvec(const MatQ& a, const VecQ& v) {
    if (a.cols() != v.size()) throw InternalError("matvec shape mismatch");
    VecQ r(a.rows());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        Rat s = 0;
        for (Eigen::Index k = 0; k < a.cols(); ++k) s += a(i, k) * v(k);
        r(i) = s;
    }
    return r;
}

Rat dot(const VecQ& a, const VecQ& b) {
    if (a.size() != b.size()) throw InternalError("dot shape mismatch");
    Rat s = 0;
    for (Eigen::Index i = 0; i < a.size(); ++i) s += a(i) * b(i);
    return s;
}

MatQ mat_from_z(const MatZ& m) {
    MatQ r(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

MatZ mat_to_z(const MatQ& m) {
    MatZ r(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = to_int(m(i, j));
    return r;
}

Rat det(MatQ m) {
    if (m.rows() != m.cols()) throw InternalError("det of non-square");
    const Eigen::Index n = m.rows();
    Rat d = 1;
    for (Eigen::Index c = 0; c < n; ++c) {
        Eigen::Index piv = -1;
        for (Eigen::Index r = c; r < n; ++r)
            if (m(r, c) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != c) {
            for (Eigen::Index j = c; j < n; ++j) std::swap(m(piv, j), m(c, j));
            d = -d;
        }
        d *= m(c, c);
        Rat inv = 1 / m(c, c);
        for (Eigen::Index r = c + 1; r < n; ++r) {
            if (m(r, c) == 0) continue;
            Rat f = m(r, c) * inv;
            for (Eigen::Index j = c; j < n; ++j) m(r, j) -= f * m(c, j);
        }
    }
    return d;
}

namespace {

// Row echelon with full column sweep; returns pivot columns.
std::vector<int> echelonize(MatQ& m) {
    std::vector<int> pivots;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Eigen::Index piv = -1;
        for (Eigen::Index r = row; r < m.rows(); ++r)
            if (m(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (Eigen::Index j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
        Rat inv = 1 / m(row, col);
        for (Eigen::Index j = 0; j < m.cols(); ++j) m(row, j) *= inv;
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == 0) continue;
            Rat f = m(r, col);
            for (Eigen::Index j = 0; j < m.cols(); ++j) m(r, j) -= f * m(row, j);
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    return pivots;
}

}  // namespace

MatQ inverse(MatQ m) {
    if (m.rows() != m.cols()) throw InternalError("inverse of non-square");
    const Eigen::Index n = m.rows();
    MatQ aug(n, 2 * n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            aug(i, j) = m(i, j);
            aug(i, n + j) = (i == j) ? 1 : 0;
        }
    auto piv = echelonize(aug);
    if (static_cast<Eigen::Index>(piv.size()) != n || piv.back() != n - 1)
        throw RankError("singular matrix in inverse");
    MatQ r(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) r(i, j) = aug(i, n + j);
    return r;
}

MatQ kernel(MatQ m) {
    const Eigen::Index n = m.cols();
    auto pivots = echelonize(m);
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (Eigen::Index c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(static_cast<int>(c));
    MatQ k(n, static_cast<Eigen::Index>(free_cols.size()));
    for (Eigen::Index i = 0; i < k.rows(); ++i)
        for (Eigen::Index j = 0; j < k.cols(); ++j) k(i, j) = 0;
    for (size_t fj = 0; fj < free_cols.size(); ++fj) {
        int fc = free_cols[fj];
        k(fc, fj) = 1;
        for (size_t pi = 0; pi < pivots.size(); ++pi)
            k(pivots[pi], fj) = -m(static_cast<Eigen::Index>(pi), fc);
    }
    return k;
}

int rank(MatQ m) { return static_cast<int>(echelonize(m).size()); }

VecQ solve(MatQ m, VecQ rhs) {
    const Eigen::Index rows = m.rows(), n = m.cols();
    MatQ aug(rows, n + 1);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n) = rhs(i);
    }
    auto pivots = echelonize(aug);
    VecQ x(n);
    for (Eigen::Index i = 0; i < n; ++i) x(i) = 0;
    Eigen::Index row = 0;
    for (int c : pivots) {
        if (c == n) throw RankError("inconsistent linear system");
        x(c) = aug(row, n);
        ++row;
    }
    // verify (also catches underdetermined-but-consistent, fine for us)
    VecQ check = matvec(m, x);
    for (Eigen::Index i = 0; i < rows; ++i)
        if (check(i) != rhs(i)) throw RankError("no exact solution");
    return x;
}

std::vector<std::vector<long>> kernel_mod_ell(const MatZ& m, long ell) {
    if (!is_prime(Int(ell))) throw InputError("kernel_mod_ell: ell not prime");
    const long rows = m.rows(), cols = m.cols();
    std::vector<std::vector<long>> a(rows, std::vector<long>(cols));
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j) {
            Int v = m(i, j) % ell;
            if (v < 0) v += ell;
            a[i][j] = to_long(v);
        }
    auto inv_mod = [ell](long x) {
        long r = 1, b = x % ell, e = ell - 2;
        while (e) {
            if (e & 1) r = r * b % ell;
            b = b * b % ell;
            e >>= 1;
        }
        return r;
    };
    std::vector<int> pivots;
    long row = 0;
    for (long col = 0; col < cols && row < rows; ++col) {
        long piv = -1;
        for (long r = row; r < rows; ++r)
            if (a[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[piv], a[row]);
        long inv = inv_mod(a[row][col]);
        for (long j = 0; j < cols; ++j) a[row][j] = a[row][j] * inv % ell;
        for (long r = 0; r < rows; ++r) {
            if (r == row || a[r][col] == 0) continue;
            long f = a[r][col];
            for (long j = 0; j < cols; ++j)
                a[r][j] = ((a[r][j] - f * a[row][j]) % ell + ell) % ell;
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<long>> basis;
    for (long fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<long> v(cols, 0);
        v[fc] = 1;
        for (size_t pi = 0; pi < pivots.size(); ++pi)
            v[pivots[pi]] = (ell - a[pi][fc]) % ell;
        basis.push_back(std::move(v));
    }
    return basis;
}

// ---------------------------------------------------------------------------
// Integer HNF
// ---------------------------------------------------------------------------

MatZ hnf_int(MatZ m) {
    const Eigen::Index rows = m.rows(), cols = m.cols();
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
        // clear column below `row` by gcd steps
        while (true) {
            Eigen::Index piv = -1;
            for (Eigen::Index r = row; r < rows; ++r)
                if (m(r, col) != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) break;
            // move minimal |entry| to `row` and reduce others
            for (Eigen::Index r = piv + 1; r < rows; ++r) {
                if (m(r, col) == 0) continue;
                if (mpz_cmpabs(m(r, col).get_mpz_t(), m(piv, col).get_mpz_t()) < 0) piv = r;
            }
            if (piv != row)
                for (Eigen::Index j = 0; j < cols; ++j) std::swap(m(piv, j), m(row, j));
            bool cleared = true;
            for (Eigen::Index r = row + 1; r < rows; ++r) {
                if (m(r, col) == 0) continue;
                Int q = m(r, col) / m(row, col);  // truncating
                if (q != 0)
                    for (Eigen::Index j = 0; j < cols; ++j) m(r, j) -= q * m(row, j);
                if (m(r, col) != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (m(row, col) == 0) continue;
        if (m(row, col) < 0)
            for (Eigen::Index j = 0; j < cols; ++j) m(row, j) = -m(row, j);
        ++row;
    }
    const Eigen::Index rank = row;
    // reduce above pivots
    for (Eigen::Index r = 0; r < rank; ++r) {
        Eigen::Index pc = 0;
        while (pc < cols && m(r, pc) == 0) ++pc;
        for (Eigen::Index up = 0; up < r; ++up) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), m(up, pc).get_mpz_t(), m(r, pc).get_mpz_t());
            if (q != 0)
                for (Eigen::Index j = 0; j < cols; ++j) m(up, j) -= q * m(r, j);
        }
    }
    return m.topRows(rank);
}

void hnf_int_transform(const MatZ& m_in, MatZ& h, MatZ& u) {
    const Eigen::Index rows = m_in.rows(), cols = m_in.cols();
    MatZ m(rows, cols + rows);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = m_in(i, j);
        for (Eigen::Index j = 0; j < rows; ++j) m(i, cols + j) = (i == j) ? 1 : 0;
    }
    // Same elimination as hnf_int but only over the first `cols` columns.
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
        while (true) {
            Eigen::Index piv = -1;
            for (Eigen::Index r = row; r < rows; ++r)
                if (m(r, col) != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) break;
            for (Eigen::Index r = piv + 1; r < rows; ++r) {
                if (m(r, col) == 0) continue;
                if (mpz_cmpabs(m(r, col).get_mpz_t(), m(piv, col).get_mpz_t()) < 0) piv = r;
            }
            if (piv != row)
                for (Eigen::Index j = 0; j < cols + rows; ++j) std::swap(m(piv, j), m(row, j));
            bool cleared = true;
            for (Eigen::Index r = row + 1; r < rows; ++r) {
                if (m(r, col) == 0) continue;
                Int q = m(r, col) / m(row, col);
                if (q != 0)
                    for (Eigen::Index j = 0; j < cols + rows; ++j) m(r, j) -= q * m(row, j);
                if (m(r, col) != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (m(row, col) == 0) continue;
        if (m(row, col) < 0)
            for (Eigen::Index j = 0; j < cols + rows; ++j) m(row, j) = -m(row, j);
        ++row;
    }
    const Eigen::Index rank = row;
    for (Eigen::Index r = 0; r < rank; ++r) {
        Eigen::Index pc = 0;
        while (pc < cols && m(r, pc) == 0) ++pc;
        for (Eigen::Index up = 0; up < r; ++up) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), m(up, pc).get_mpz_t(), m(r, pc).get_mpz_t());
            if (q != 0)
                for (Eigen::Index j = 0; j < cols + rows; ++j) m(up, j) -= q * m(r, j);
        }
    }
    h = m.block(0, 0, rank, cols);
    u = m.block(0, cols, rows, rows);
}

MatZ left_kernel_int(const MatZ& m) {
    MatZ h, u;
    hnf_int_transform(m, h, u);
    const Eigen::Index rank = h.rows();
    return u.bottomRows(m.rows() - rank);
}

// ---------------------------------------------------------------------------
// HNFBasis
// ---------------------------------------------------------------------------

MatQ HNFBasis::rows() const {
    MatQ r = mat_from_z(mat_);
    for (Eigen::Index i = 0; i < r.rows(); ++i)
        for (Eigen::Index j = 0; j < r.cols(); ++j) r(i, j) *= scale_;
    return r;
}

Rat HNFBasis::det_abs() const {
    Rat d = 1;
    for (int i = 0; i < dim(); ++i) d *= Rat(mat_(i, i));
    Rat s = scale_;
    for (int i = 0; i < dim(); ++i) d *= s;
    return abs(d);
}

VecQ HNFBasis::coordinates(const VecQ& v) const {
    const int n = dim();
    if (v.size() != n) throw InternalError("coordinate dimension mismatch");
    VecQ x(n);
    VecQ w = v;
    for (int i = 0; i < n; ++i) w(i) /= scale_;
    // forward substitution against upper-triangular rows
    for (int i = 0; i < n; ++i) {
        x(i) = w(i) / Rat(mat_(i, i));
        for (int j = i; j < n; ++j) w(j) -= x(i) * Rat(mat_(i, j));
    }
    return x;
}

bool HNFBasis::contains(const VecQ& v) const {
    VecQ x = coordinates(v);
    for (Eigen::Index i = 0; i < x.size(); ++i)
        if (!is_integer(x(i))) return false;
    return true;
}

bool HNFBasis::operator<(const HNFBasis& o) const {
    if (scale_ != o.scale_) return scale_ < o.scale_;
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j)
            if (mat_(i, j) != o.mat_(i, j)) return mat_(i, j) < o.mat_(i, j);
    return false;
}

std::string HNFBasis::key() const {
    std::ostringstream os;
    os << scale_.get_str() << ";";
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j) os << mat_(i, j).get_str() << ",";
    return os.str();
}

HNFBasis hnf(const MatQ& generators) {
    const Eigen::Index n = generators.cols();
    Int den = 1;
    for (Eigen::Index i = 0; i < generators.rows(); ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            den = lcm(den, generators(i, j).get_den());
    MatZ m(generators.rows(), n);
    for (Eigen::Index i = 0; i < generators.rows(); ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            Rat v = generators(i, j) * Rat(den);
            m(i, j) = to_int(v);
        }
    MatZ h = hnf_int(std::move(m));
    if (h.rows() != n) throw RankError("generators do not span full rank");
    Int content = 0;
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) content = gcd(content, h(i, j));
    if (content == 0) throw RankError("zero lattice");
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) h(i, j) /= content;
    Rat scale(content, den);
    scale.canonicalize();
    return HNFBasis(scale, std::move(h));
}

bool lattice_contains(const HNFBasis& outer, const HNFBasis& inner) {
    MatQ rows = inner.rows();
    for (Eigen::Index i = 0; i < rows.rows(); ++i) {
        VecQ v = rows.row(i).transpose();
        if (!outer.contains(v)) return false;
    }
    return true;
}

Int lattice_index(const HNFBasis& sup, const HNFBasis& sub) {
    if (!lattice_contains(sup, sub))
        throw ContainmentError("lattice_index: not a sublattice");
    Rat q = sub.det_abs() / sup.det_abs();
    return to_int(q);
}

HNFBasis lattice_sum(const HNFBasis& a, const HNFBasis& b) {
    MatQ ra = a.rows(), rb = b.rows();
    MatQ stacked(ra.rows() + rb.rows(), ra.cols());
    stacked.topRows(ra.rows()) = ra;
    stacked.bottomRows(rb.rows()) = rb;
    return hnf(stacked);
}

HNFBasis lattice_scale(const HNFBasis& a, const Rat& c) {
    if (c == 0) throw DegenerateError("scaling lattice by zero");
    Rat s = a.scale() * abs(c);
    return HNFBasis(s, a.mat());
}

HNFBasis lattice_intersect(const HNFBasis& a, const HNFBasis& b) {
    // x = u^T A = v^T B  <=>  (u, v) in left kernel of [A; -B]
    MatQ ra = a.rows(), rb = b.rows();
    const Eigen::Index n = ra.cols();
    Int den = 1;
    auto denscan = [&den](const MatQ& m) {
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            for (Eigen::Index j = 0; j < m.cols(); ++j) den = lcm(den, m(i, j).get_den());
    };
    denscan(ra);
    denscan(rb);
    MatZ stacked(ra.rows() + rb.rows(), n);
    for (Eigen::Index i = 0; i < ra.rows(); ++i)
        for (Eigen::Index j = 0; j < n; ++j) stacked(i, j) = to_int(ra(i, j) * Rat(den));
    for (Eigen::Index i = 0; i < rb.rows(); ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            stacked(ra.rows() + i, j) = to_int(rb(i, j) * Rat(-den));
    MatZ k = left_kernel_int(stacked);  // rows (u | v)
    MatQ gens(k.rows(), n);
    for (Eigen::Index i = 0; i < k.rows(); ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            Rat s = 0;
            for (Eigen::Index t = 0; t < ra.rows(); ++t) s += Rat(k(i, t)) * ra(t, j);
            gens(i, j) = s;
        }
    return hnf(gens);
}

HNFBasis congruence_kernel(const MatQ& c) {
    const Eigen::Index mrows = c.rows(), n = c.cols();
    Int den = 1;
    for (Eigen::Index i = 0; i < mrows; ++i)
        for (Eigen::Index j = 0; j < n; ++j) den = lcm(den, c(i, j).get_den());
    // {x : C x in Z^m} = projection of left kernel of [ (den C)^T | -den I ]^T
    // onto x. Work with rows (x | y): x^T (den C)^T = y^T den I.
    MatZ big(n + mrows, mrows);
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index i = 0; i < mrows; ++i)
            big(j, i) = to_int(c(i, j) * Rat(den));
    for (Eigen::Index j = 0; j < mrows; ++j)
        for (Eigen::Index i = 0; i < mrows; ++i)
            big(n + j, i) = (i == j) ? -den : Int(0);
    MatZ k = left_kernel_int(big);  // rows (x | y), rank should be n
    MatQ gens(k.rows(), n);
    for (Eigen::Index i = 0; i < k.rows(); ++i)
        for (Eigen::Index j = 0; j < n; ++j) gens(i, j) = Rat(k(i, j));
    return hnf(gens);
}

// ---------------------------------------------------------------------------
// numeric.hpp helpers that need definitions
// ---------------------------------------------------------------------------

std::vector<Int> prime_factors(Int n) {
    std::vector<Int> fs;
    n = abs(n);
    if (n <= 1) return fs;
    for (Int p = 2; p * p <= n; p = (p == 2 ? Int(3) : p + 2)) {
        if (n % p == 0) {
            fs.push_back(p);
            while (n % p == 0) n /= p;
        }
        if (p > 100000 && is_prime(n)) break;  // large leftover handled below
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

std::vector<Int> divisors(const Int& n) {
    Int m = abs(n);
    std::vector<Int> ds{1};
    Int rem = m;
    for (Int p = 2; p * p <= rem; p = (p == 2 ? Int(3) : p + 2)) {
        if (rem % p != 0) continue;
        int e = 0;
        while (rem % p == 0) {
            rem /= p;
            ++e;
        }
        size_t base = ds.size();
        Int pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
        }
    }
    if (rem > 1) {
        size_t base = ds.size();
        for (size_t i = 0; i < base; ++i) ds.push_back(ds[i] * rem);
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

}  // namespace qlift
