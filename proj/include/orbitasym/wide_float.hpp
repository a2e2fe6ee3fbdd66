#pragma once

// Software wide float used by the constants pipeline.  All special-value
// evaluation runs in this type so that 1e-13 end-to-end targets have
// headroom; double is recovered only at API boundaries.

#include <gmpxx.h>
#include <quadmath.h>

#include <cmath>
#include <string>

namespace orbitasym {

using wide = __float128;

inline wide wexp(wide x) { return expq(x); }
inline wide wlog(wide x) { return logq(x); }
inline wide wlog1p(wide x) { return log1pq(x); }
inline wide wsqrt(wide x) { return sqrtq(x); }
inline wide wfabs(wide x) { return fabsq(x); }
inline wide wpow(wide x, wide y) { return powq(x, y); }

inline wide wide_pi() { return M_PIq; }

inline double to_double(wide x) { return static_cast<double>(x); }

// Full-precision conversion; mpz_get_d would truncate to 53 bits.
inline wide to_wide(const mpz_class& z) {
    const mpz_srcptr p = z.get_mpz_t();
    const std::size_t n = mpz_size(p);
    wide acc = 0;
    for (std::size_t i = n; i-- > 0;) {
        acc = acc * 18446744073709551616.0Q  // 2^64
              + static_cast<wide>(mpz_getlimbn(p, i));
    }
    return mpz_sgn(p) < 0 ? -acc : acc;
}

inline wide to_wide(const mpq_class& q) {
    return to_wide(q.get_num()) / to_wide(q.get_den());
}

// Natural log of a positive big integer: ln(d * 2^e) with the mantissa
// taken at full double precision.
inline double log_bigint(const mpz_class& z) {
    signed long e = 0;
    const double d = mpz_get_d_2exp(&e, z.get_mpz_t());
    return std::log(d) + static_cast<double>(e) * 0.69314718055994530941723212145818;
}

inline std::string wide_to_string(wide x, int digits = 34) {
    char buf[128];
    quadmath_snprintf(buf, sizeof buf, "%.*Qg", digits, x);
    return buf;
}

}  // namespace orbitasym
