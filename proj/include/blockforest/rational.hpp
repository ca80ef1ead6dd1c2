#pragma once

#include <gmpxx.h>

#include <string>

#include "blockforest/errors.hpp"

namespace blockforest {

// Exact scalars. GMP keeps rationals reduced with positive denominator,
// which is exactly the invariant we need; the helpers below canonicalize
// values assembled from raw numerator/denominator pairs.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw domain_error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat(const Int& num, const Int& den) {
    if (den == 0) throw domain_error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// C(n, k), zero outside the Pascal triangle; C(0,0) = 1.
inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Exact integer from a rational known to be integral.
inline Int to_int(const Rat& q) {
    if (q.get_den() != 1)
        throw domain_error("expected integer value, got " + q.get_str());
    return q.get_num();
}

} // namespace blockforest
