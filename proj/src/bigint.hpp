#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace torusemb {

// Exact arbitrary-precision integer. All matrix arithmetic in this project
// goes through this type; machine-word overflow is not a failure mode.
using Int = mpz_class;

inline Int abs_int(const Int& v) {
    Int r;
    mpz_abs(r.get_mpz_t(), v.get_mpz_t());
    return r;
}

// Floor division (quotient rounded toward minus infinity).
inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// Truncated division (rounded toward zero); matches operator/ on mpz_class.
inline Int trunc_div(const Int& a, const Int& b) {
    Int q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int gcd_int(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline std::optional<std::int64_t> to_int64(const Int& v) {
    if (!v.fits_slong_p()) return std::nullopt;
    return static_cast<std::int64_t>(v.get_si());
}

inline std::string to_decimal(const Int& v) { return v.get_str(); }

}  // namespace torusemb
