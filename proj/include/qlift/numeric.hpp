#ifndef QLIFT_NUMERIC_HPP
#define QLIFT_NUMERIC_HPP

#include <gmpxx.h>

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <vector>

#include "qlift/errors.hpp"

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
    typedef mpq_class Real;
    typedef mpq_class NonInteger;
    typedef mpq_class Nested;
    static inline Real epsilon() { return mpq_class(0); }
    static inline Real dummy_precision() { return mpq_class(0); }
    static inline int digits10() { return 0; }
    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 100,
        MulCost = 100
    };
};

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
    typedef mpz_class Real;
    typedef mpq_class NonInteger;
    typedef mpz_class Nested;
    static inline Real epsilon() { return mpz_class(0); }
    static inline Real dummy_precision() { return mpz_class(0); }
    static inline int digits10() { return 0; }
    enum {
        IsInteger = 1,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 100,
        MulCost = 100
    };
};

}  // namespace Eigen

namespace qlift {

using Int = mpz_class;
using Rat = mpq_class;

using MatQ = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using VecQ = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using MatZ = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using VecZ = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using MatD = Eigen::MatrixXd;
using VecD = Eigen::VectorXd;

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int g;
    mpz_lcm(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

/// gcd of fractional ideals of Z: gcd(a/b, c/d) = gcd(ad, cb)/(bd).
inline Rat rat_gcd(const Rat& a, const Rat& b) {
    if (a == 0) return abs(b);
    if (b == 0) return abs(a);
    Rat r(gcd(a.get_num() * b.get_den(), b.get_num() * a.get_den()),
          a.get_den() * b.get_den());
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& a) { return a.get_den() == 1; }

inline Int to_int(const Rat& a) {
    if (!is_integer(a)) throw InternalError("to_int on non-integer rational");
    return a.get_num();
}

inline long to_long(const Int& a) {
    if (!a.fits_slong_p()) throw InternalError("integer does not fit in long");
    return a.get_si();
}

/// Exact integer square root; error if not a perfect square.
inline Int exact_sqrt(const Int& n) {
    if (n < 0) throw InternalError("exact_sqrt of negative");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    if (r * r != n) throw InternalError("not a perfect square: " + n.get_str());
    return r;
}

inline bool is_square(const Int& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

/// Kronecker symbol (a|n), fully general.
inline int kronecker(const Int& a, const Int& n) {
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

inline int kronecker(long a, long n) { return kronecker(Int(a), Int(n)); }

/// Legendre symbol (a|p) for an odd prime p.
inline int legendre(const Int& a, const Int& p) {
    return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

inline bool is_prime(const Int& n) {
    return n > 1 && mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

inline Int next_prime(const Int& n) {
    Int r;
    mpz_nextprime(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

/// Ascending prime factors, each listed once.
std::vector<Int> prime_factors(Int n);

/// All positive divisors, ascending.
std::vector<Int> divisors(const Int& n);

/// Sum of divisors sigma(n).
inline Int sigma_divisors(const Int& n) {
    Int s = 0;
    for (const Int& d : divisors(n)) s += d;
    return s;
}

inline Rat rat_of(const Int& n, const Int& d) {
    Rat r(n, d);
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline double to_double(const Rat& r) { return r.get_d(); }

}  // namespace qlift

#endif
