#ifndef PNPAIR_BIGINT_HPP
#define PNPAIR_BIGINT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace pnp {

using Int = mpz_class;
using Rat = mpq_class;

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int pow2(unsigned long e) { return pow_int(Int(2), e); }

inline Int powm(const Int& base, const Int& e, const Int& mod) {
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
    return r;
}

inline Int gcd_int(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline bool fits_u64(const Int& n) { return n.fits_ulong_p() || mpz_sizeinbase(n.get_mpz_t(), 2) <= 64; }

inline uint64_t to_u64(const Int& n) {
    uint64_t lo = mpz_get_ui(n.get_mpz_t());
    if (mpz_sizeinbase(n.get_mpz_t(), 2) > 64) throw std::overflow_error("integer does not fit in 64 bits");
    // mpz_get_ui returns the low limb; on 64-bit limbs this is the full value for <= 64-bit inputs
    return lo;
}

inline std::string to_string(const Int& n) { return n.get_str(); }

/// floor(x^{1/k}) for x >= 0
inline Int iroot(const Int& x, unsigned long k) {
    Int r;
    mpz_root(r.get_mpz_t(), x.get_mpz_t(), k);
    return r;
}

}  // namespace pnp

#endif
