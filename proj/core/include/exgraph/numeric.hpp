#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace exgraph {

// Exact arithmetic everywhere: counts overflow 64 bits already at s(K_12).
using Int = mpz_class;
using Rat = mpq_class;

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// n!! = n * (n-2) * ... down to 1 or 2; 0!! = (-1)!! = 1.
inline Int double_factorial(unsigned long n) {
    Int r;
    mpz_2fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int pow_int(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline Int pow2(unsigned long exp) {
    Int r = 1;
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), exp);
    return r;
}

inline Rat pow_rat(const Rat& base, unsigned long exp) {
    Rat r(1);
    Rat b = base;
    unsigned long e = exp;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

// floor(sqrt(x)), exact; x must be nonnegative.
inline Int isqrt(const Int& x) {
    if (x < 0) throw std::invalid_argument("isqrt: negative argument");
    Int r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

// f_0 = 0, f_1 = f_2 = 1.
inline Int fibonacci(unsigned long n) {
    Int r;
    mpz_fib_ui(r.get_mpz_t(), n);
    return r;
}

// l_n = f_{n+1} + f_{n-1}; l_1 = 1, l_2 = 3.
inline Int lucas(unsigned long n) {
    Int r;
    mpz_lucnum_ui(r.get_mpz_t(), n);
    return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Int& x) { return x.get_str(); }

inline std::string to_string(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

}  // namespace exgraph
