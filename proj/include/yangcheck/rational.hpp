#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace yangcheck {

// Exact arbitrary-precision arithmetic. mpq_class values are kept canonical:
// construct through rat() so the gcd reduction always runs.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace yangcheck
