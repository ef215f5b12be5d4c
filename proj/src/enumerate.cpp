#include "qlift/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace qlift {

namespace {

// Nearest integer to a rational (ties toward +inf; any fixed rule works).
Int round_rat(const Rat& x) {
    Rat y = x + Rat(1, 2);
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), y.get_num_mpz_t(), y.get_den_mpz_t());
    return f;
}

// Gram-space LLL (delta = 3/4). Returns unimodular U with rows the reduced
// basis in original coordinates; gram is replaced by U G U^T.
MatZ lll_gram(MatQ& g) {
    const int n = static_cast<int>(g.rows());
    MatZ u(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) u(i, j) = (i == j) ? 1 : 0;

    auto recompute = [&](std::vector<Rat>& b, MatQ& mu) {
        // Gram-Schmidt data straight from g.
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) mu(i, j) = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < i; ++j) {
                Rat s = g(i, j);
                for (int k = 0; k < j; ++k) s -= mu(i, k) * mu(j, k) * b[k];
                mu(i, j) = s / b[j];
            }
            Rat s = g(i, i);
            for (int k = 0; k < i; ++k) s -= mu(i, k) * mu(i, k) * b[k];
            b[i] = s;
        }
    };

    auto apply_rowop = [&](int dst, int src, const Int& q) {
        // row dst -= q * row src, on u and on g (congruence both sides)
        for (int j = 0; j < n; ++j) u(dst, j) -= q * u(src, j);
        Rat qq(q);
        for (int j = 0; j < n; ++j) g(dst, j) -= qq * g(src, j);
        for (int j = 0; j < n; ++j) g(j, dst) -= qq * g(j, src);
    };
    auto swap_rows = [&](int a, int bdx) {
        for (int j = 0; j < n; ++j) std::swap(u(a, j), u(bdx, j));
        for (int j = 0; j < n; ++j) std::swap(g(a, j), g(bdx, j));
        for (int j = 0; j < n; ++j) std::swap(g(j, a), g(j, bdx));
    };

    std::vector<Rat> b(n);
    MatQ mu(n, n);
    recompute(b, mu);
    for (int i = 0; i < n; ++i)
        if (b[i] <= 0) throw FormError("gram not positive definite");

    const Rat delta(3, 4);
    int k = 1;
    int guard = 0;
    while (k < n) {
        if (++guard > 10000) throw InternalError("LLL failed to terminate");
        recompute(b, mu);
        for (int j = k - 1; j >= 0; --j) {
            Int q = round_rat(mu(k, j));
            if (q != 0) {
                apply_rowop(k, j, q);
                recompute(b, mu);
            }
        }
        if (b[k] >= (delta - mu(k, k - 1) * mu(k, k - 1)) * b[k - 1]) {
            ++k;
        } else {
            swap_rows(k, k - 1);
            k = std::max(1, k - 1);
        }
    }
    return u;
}

struct LDL {
    int n;
    std::vector<Rat> d;  // diagonal
    MatQ m;              // m(i,j) for j > i
};

LDL ldl_decompose(const MatQ& gram) {
    const int n = static_cast<int>(gram.rows());
    MatQ q = gram;
    for (int i = 0; i < n; ++i) {
        if (q(i, i) <= 0) throw FormError("gram not positive definite");
        for (int j = i + 1; j < n; ++j) {
            q(j, i) = q(i, j);
            q(i, j) = q(i, j) / q(i, i);
        }
        for (int k = i + 1; k < n; ++k)
            for (int l = k; l < n; ++l) q(k, l) -= q(k, i) * q(i, l);
    }
    LDL r;
    r.n = n;
    r.d.resize(n);
    r.m = MatQ(n, n);
    for (int i = 0; i < n; ++i) {
        r.d[i] = q(i, i);
        for (int j = 0; j < n; ++j) r.m(i, j) = (j > i) ? q(i, j) : Rat(0);
    }
    return r;
}

// Largest integer x with d*(x+c)^2 <= t (d > 0, t >= 0), exact.
Int range_hi(const Rat& c, const Rat& d, const Rat& t) {
    double approx = -to_double(c) + std::sqrt(std::max(0.0, to_double(t / d)));
    Int x(static_cast<long>(std::floor(approx)));
    auto ok = [&](const Int& v) {
        Rat s = Rat(v) + c;
        return d * s * s <= t;
    };
    while (ok(x + 1)) x += 1;
    while (!ok(x)) x -= 1;
    return x;
}

// Smallest integer x with d*(x+c)^2 <= t.
Int range_lo(const Rat& c, const Rat& d, const Rat& t) {
    double approx = -to_double(c) - std::sqrt(std::max(0.0, to_double(t / d)));
    Int x(static_cast<long>(std::ceil(approx)));
    auto ok = [&](const Int& v) {
        Rat s = Rat(v) + c;
        return d * s * s <= t;
    };
    while (ok(x - 1)) x -= 1;
    while (!ok(x)) x += 1;
    return x;
}

// Exact DFS over the LDL cone; emits one of each +-pair of nonzero vectors.
void dfs_exact(const LDL& f, int level, std::vector<Int>& x, const Rat& budget,
               const Rat& consumed, bool higher_all_zero,
               const std::function<void(const std::vector<Int>&, const Rat&)>& cb) {
    if (level < 0) {
        if (!higher_all_zero) cb(x, consumed);
        return;
    }
    Rat c = 0;
    for (int j = level + 1; j < f.n; ++j)
        if (x[j] != 0) c += f.m(level, j) * Rat(x[j]);
    if (budget < 0) return;
    Int lo = range_lo(c, f.d[level], budget);
    Int hi = range_hi(c, f.d[level], budget);
    if (higher_all_zero && lo < 0) lo = 0;
    for (Int v = lo; v <= hi; v += 1) {
        x[level] = v;
        Rat s = Rat(v) + c;
        Rat used = f.d[level] * s * s;
        dfs_exact(f, level - 1, x, budget - used, consumed + used,
                  higher_all_zero && v == 0, cb);
    }
    x[level] = 0;
}

struct FastForm {
    int n;
    std::vector<std::vector<int64_t>> g;  // scaled integer gram
    Int scale;                            // value = (x^T g x)/scale... g = scale*gram
    std::vector<double> d;
    std::vector<std::vector<double>> m;
    bool usable = false;
};

FastForm fast_setup(const MatQ& gram, const Rat& bound) {
    FastForm ff;
    const int n = static_cast<int>(gram.rows());
    ff.n = n;
    Int den = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) den = lcm(den, gram(i, j).get_den());
    ff.scale = den;
    ff.g.assign(n, std::vector<int64_t>(n));
    double maxg = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rat v = gram(i, j) * Rat(den);
            Int z = to_int(v);
            if (!z.fits_slong_p()) return ff;
            ff.g[i][j] = to_long(z);
            maxg = std::max(maxg, std::fabs(static_cast<double>(ff.g[i][j])));
        }
    // double LDL for pruning ranges
    std::vector<std::vector<double>> q(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) q[i][j] = static_cast<double>(ff.g[i][j]);
    for (int i = 0; i < n; ++i) {
        if (q[i][i] <= 0) return ff;
        for (int j = i + 1; j < n; ++j) {
            q[j][i] = q[i][j];
            q[i][j] /= q[i][i];
        }
        for (int k = i + 1; k < n; ++k)
            for (int l = k; l < n; ++l) q[k][l] -= q[k][i] * q[i][l];
    }
    ff.d.resize(n);
    ff.m.assign(n, std::vector<double>(n, 0.0));
    double dmin = 1e300;
    for (int i = 0; i < n; ++i) {
        ff.d[i] = q[i][i];
        dmin = std::min(dmin, q[i][i]);
        for (int j = i + 1; j < n; ++j) ff.m[i][j] = q[i][j];
    }
    double bscaled = to_double(bound) * to_double(Rat(den));
    double xmax = std::sqrt(std::max(1.0, bscaled) / std::max(1e-9, dmin)) + 2.0;
    // Conservative guards: keep every double quantity below 1e15 so the
    // +-1 range padding rigorously covers rounding error, and the exact
    // int64 leaf evaluation cannot overflow.
    if (maxg * (n * xmax) * (n * xmax) > 1.0e15) return ff;
    if (bscaled > 1.0e12) return ff;
    ff.usable = true;
    return ff;
}

// Conservative-range int64 DFS; ranges padded by 1, exact integer leaf test.
void dfs_fast(const FastForm& ff, int level, std::vector<int64_t>& x, double budget,
              bool higher_all_zero, int64_t bound_scaled,
              const std::function<void(const std::vector<int64_t>&, int64_t)>& cb) {
    if (level < 0) {
        if (higher_all_zero) return;
        int64_t v = 0;
        for (int i = 0; i < ff.n; ++i) {
            int64_t row = 0;
            for (int j = 0; j < ff.n; ++j) row += ff.g[i][j] * x[j];
            v += row * x[i];
        }
        if (v <= bound_scaled) cb(x, v);
        return;
    }
    double c = 0;
    for (int j = level + 1; j < ff.n; ++j)
        if (x[j] != 0) c += ff.m[level][j] * static_cast<double>(x[j]);
    double t = std::max(0.0, budget) / ff.d[level];
    double r = std::sqrt(t);
    int64_t lo = static_cast<int64_t>(std::floor(-c - r)) - 1;
    int64_t hi = static_cast<int64_t>(std::ceil(-c + r)) + 1;
    if (higher_all_zero && lo < 0) lo = 0;
    for (int64_t v = lo; v <= hi; ++v) {
        x[level] = v;
        double s = static_cast<double>(v) + c;
        double used = ff.d[level] * s * s;
        if (used > budget + 1.0 + 1e-6 * std::fabs(budget)) continue;
        dfs_fast(ff, level - 1, x, budget - used, higher_all_zero && v == 0,
                 bound_scaled, cb);
    }
    x[level] = 0;
}

}  // namespace

void enumerate_leq(const MatQ& gram, const Rat& bound,
                   const std::function<void(const std::vector<Int>&, const Rat&)>& cb) {
    const int n = static_cast<int>(gram.rows());
    if (gram.cols() != n) throw FormError("gram not square");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (gram(i, j) != gram(j, i)) throw FormError("gram not symmetric");
    if (bound < 0) return;

    MatQ g = gram;
    MatZ u = lll_gram(g);  // also certifies positive definiteness

    FastForm ff = fast_setup(g, bound);
    if (ff.usable) {
        Rat bs = bound * Rat(ff.scale);
        Int bsi;
        mpz_fdiv_q(bsi.get_mpz_t(), bs.get_num_mpz_t(), bs.get_den_mpz_t());
        int64_t bound_scaled = to_long(bsi);
        std::vector<int64_t> x(n, 0);
        Rat scale_r(ff.scale);
        dfs_fast(ff, n - 1, x, static_cast<double>(bound_scaled) + 0.5, true,
                 bound_scaled, [&](const std::vector<int64_t>& xr, int64_t vs) {
                     std::vector<Int> orig(n, Int(0));
                     for (int i = 0; i < n; ++i) {
                         if (xr[i] == 0) continue;
                         for (int j = 0; j < n; ++j)
                             orig[j] += Int((long)xr[i]) * u(i, j);
                     }
                     Rat value = Rat(Int((long)vs)) / scale_r;
                     value.canonicalize();
                     cb(orig, value);
                 });
        return;
    }

    LDL f = ldl_decompose(g);
    std::vector<Int> x(n, Int(0));
    dfs_exact(f, n - 1, x, bound, Rat(0), true,
              [&](const std::vector<Int>& xr, const Rat& value) {
                  std::vector<Int> orig(n, Int(0));
                  for (int i = 0; i < n; ++i) {
                      if (xr[i] == 0) continue;
                      for (int j = 0; j < n; ++j) orig[j] += xr[i] * u(i, j);
                  }
                  cb(orig, value);
              });
}

std::vector<VecZ> enumerate_by_value(const MatQ& gram, const Rat& target) {
    const int n = static_cast<int>(gram.rows());
    if (target < 0) throw FormError("negative target");
    std::vector<VecZ> out;
    if (target == 0) {
        VecZ z(n);
        for (int i = 0; i < n; ++i) z(i) = 0;
        out.push_back(z);
        return out;
    }
    enumerate_leq(gram, target, [&](const std::vector<Int>& v, const Rat& val) {
        if (val != target) return;
        VecZ a(n), b(n);
        for (int i = 0; i < n; ++i) {
            a(i) = v[i];
            b(i) = -v[i];
        }
        out.push_back(a);
        out.push_back(b);
    });
    std::sort(out.begin(), out.end(), [n](const VecZ& a, const VecZ& b) {
        for (int i = 0; i < n; ++i)
            if (a(i) != b(i)) return a(i) < b(i);
        return false;
    });
    return out;
}

std::vector<Int> theta_counts(const MatQ& gram, long prec) {
    std::vector<Int> counts(prec + 1, Int(0));
    counts[0] = 1;
    enumerate_leq(gram, Rat(prec), [&](const std::vector<Int>&, const Rat& val) {
        if (!is_integer(val)) return;
        long m = to_long(to_int(val));
        if (m >= 0 && m <= prec) counts[m] += 2;
    });
    return counts;
}

std::vector<VecZ> enumerate_box_scan(const MatQ& gram, const Rat& target) {
    const int n = static_cast<int>(gram.rows());
    if (target < 0) throw FormError("negative target");
    std::vector<VecZ> out;
    if (target == 0) {
        VecZ z(n);
        for (int i = 0; i < n; ++i) z(i) = 0;
        out.push_back(z);
        return out;
    }
    // |x_i|^2 <= target * (G^-1)_ii for PD G
    MatQ ginv = inverse(gram);
    std::vector<long> bounds(n);
    for (int i = 0; i < n; ++i) {
        Rat b2 = target * ginv(i, i);
        Int num;
        mpz_fdiv_q(num.get_mpz_t(), b2.get_num_mpz_t(), b2.get_den_mpz_t());
        Int r;
        mpz_sqrt(r.get_mpz_t(), num.get_mpz_t());
        bounds[i] = to_long(r) + 1;
    }
    std::vector<Int> x(n);
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            Rat v = 0;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) v += gram(a, b) * Rat(x[a] * x[b]);
            if (v == target) {
                VecZ w(n);
                for (int a = 0; a < n; ++a) w(a) = x[a];
                out.push_back(w);
            }
            return;
        }
        for (long v = -bounds[i]; v <= bounds[i]; ++v) {
            x[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end(), [n](const VecZ& a, const VecZ& b) {
        for (int i = 0; i < n; ++i)
            if (a(i) != b(i)) return a(i) < b(i);
        return false;
    });
    return out;
}

}  // namespace qlift
