#pragma once

#include <gmpxx.h>

#include <string>

namespace locfac {

using Int = mpz_class;
using Rat = mpq_class;

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline int sgn(const Int& x) { return mpz_sgn(x.get_mpz_t()); }

inline Int abs_int(const Int& x) {
    Int r;
    mpz_abs(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

inline Int gcd_int(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Exact quotient; caller guarantees divisibility.
inline Int divexact_int(const Int& a, const Int& b) {
    Int r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Miller-Rabin with enough rounds to be deterministic for any input
// reachable from the CLI (and overwhelmingly reliable beyond).
inline bool is_probable_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

inline std::string to_decimal(const Int& x) { return x.get_str(10); }

} // namespace locfac
