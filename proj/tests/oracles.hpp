// Test-side oracles, kept independent of the library paths they check.
#ifndef PNPAIR_TEST_ORACLES_HPP
#define PNPAIR_TEST_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "pnpair/ffield.hpp"
#include "pnpair/fpoly.hpp"
#include "pnpair/freeness.hpp"

namespace oracle {

using namespace pnp;

// trial division, nothing else
inline std::vector<std::pair<uint64_t, unsigned>> factorize_u64(uint64_t n) {
    std::vector<std::pair<uint64_t, unsigned>> out;
    for (uint64_t p = 2; p * p <= n; ++p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

// count squarefree divisors by direct enumeration
inline uint64_t squarefree_divisor_count(uint64_t n) {
    uint64_t cnt = 0;
    for (uint64_t d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        bool sf = true;
        for (uint64_t p = 2; p * p <= d; ++p)
            if (d % (p * p) == 0) sf = false;
        if (sf) ++cnt;
    }
    return cnt;
}

inline uint64_t phi_direct(uint64_t n) {
    uint64_t c = 0;
    for (uint64_t a = 1; a <= n; ++a)
        if (std::gcd(a, n) == 1) ++c;
    return c;
}

// beta is e-free iff beta != gamma^d for every divisor d > 1 of e (the
// defining property, scanned over the whole field)
inline bool e_free_scan(const FieldTower& t, const FFElement& beta, uint64_t e) {
    uint64_t N = t.element_count_u64() - 1;
    for (uint64_t d = 2; d <= e; ++d) {
        if (e % d != 0) continue;
        bool hit = false;
        for_each_unit(t, [&](const FFElement& g) {
            if (!hit && t.pow(g, Int(static_cast<unsigned long>(d))) == beta) hit = true;
        });
        if (hit) return false;
        (void)N;
    }
    return true;
}

// all monic divisors of a factored polynomial
template <class F>
std::vector<Poly<F>> all_divisors(const F& K, const PolyFactorization<F>& fact) {
    std::vector<Poly<F>> out{poly_one(K)};
    for (const auto& [h, mult] : fact.factors) {
        std::vector<Poly<F>> next;
        for (const auto& d : out) {
            Poly<F> cur = d;
            next.push_back(cur);
            for (unsigned i = 0; i < mult; ++i) {
                cur = mul(K, cur, h);
                next.push_back(cur);
            }
        }
        out = std::move(next);
    }
    return out;
}

// beta is g-free iff beta != h o gamma for every divisor h != 1 of g
inline bool g_free_scan(const FieldTower& t, const FFElement& beta, const FqPoly& g) {
    const FqField& fq = t.fq();
    auto divisors = all_divisors(fq, factor_poly(fq, g));
    for (const auto& h : divisors) {
        if (degree(h) == 0) continue;
        bool hit = false;
        for_each_element(t, [&](const FFElement& gamma) {
            if (!hit && module_action(h, gamma) == beta) hit = true;
        });
        if (hit) return false;
    }
    return true;
}

// all divisors of n from a 64-bit factorization
inline std::vector<uint64_t> divisors_u64(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

}  // namespace oracle

#endif
