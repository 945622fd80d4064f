#ifndef PNPAIR_FPOLY_HPP
#define PNPAIR_FPOLY_HPP

#include <algorithm>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pnpair/bigint.hpp"
#include "pnpair/ffield.hpp"

namespace pnp {

/// Dense polynomial over a runtime field F (FqField or ExtField).
/// Coefficients low degree first; canonical form has no trailing zeros, the
/// zero polynomial is the empty vector.
template <class F>
struct Poly {
    std::vector<typename F::Elem> c;
};

using FqPoly = Poly<FqField>;
using FqnPoly = Poly<ExtField>;

template <class F>
void trim(const F& K, Poly<F>& f) {
    while (!f.c.empty() && K.is_zero(f.c.back())) f.c.pop_back();
}

template <class F>
Poly<F> make_poly(const F& K, std::vector<typename F::Elem> coeffs) {
    Poly<F> f{std::move(coeffs)};
    trim(K, f);
    return f;
}

template <class F>
int degree(const Poly<F>& f) {
    return static_cast<int>(f.c.size()) - 1;
}

template <class F>
bool poly_is_zero(const Poly<F>& f) {
    return f.c.empty();
}

template <class F>
Poly<F> poly_zero(const F&) {
    return {};
}

template <class F>
Poly<F> poly_one(const F& K) {
    return {{K.one()}};
}

template <class F>
Poly<F> poly_x(const F& K) {
    return {{K.zero(), K.one()}};
}

/// x^d with coefficient c
template <class F>
Poly<F> poly_monomial(const F& K, typename F::Elem c, uint32_t d) {
    if (K.is_zero(c)) return {};
    Poly<F> f;
    f.c.assign(d + 1, K.zero());
    f.c[d] = std::move(c);
    return f;
}

/// x^m - 1
template <class F>
Poly<F> poly_xm_minus_1(const F& K, uint32_t m) {
    Poly<F> f;
    f.c.assign(m + 1, K.zero());
    f.c[0] = K.neg(K.one());
    f.c[m] = K.one();
    return f;
}

template <class F>
bool poly_eq(const Poly<F>& a, const Poly<F>& b) {
    return a.c == b.c;
}

/// Canonical order: degree first, then coefficients compared from the
/// constant term up (each as its F_p coordinate vector).
template <class F>
bool poly_less(const Poly<F>& a, const Poly<F>& b) {
    if (a.c.size() != b.c.size()) return a.c.size() < b.c.size();
    return a.c < b.c;
}

template <class F>
Poly<F> add(const F& K, const Poly<F>& a, const Poly<F>& b) {
    Poly<F> r;
    r.c.resize(std::max(a.c.size(), b.c.size()), K.zero());
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        if (i < a.c.size() && i < b.c.size())
            r.c[i] = K.add(a.c[i], b.c[i]);
        else if (i < a.c.size())
            r.c[i] = a.c[i];
        else
            r.c[i] = b.c[i];
    }
    trim(K, r);
    return r;
}

template <class F>
Poly<F> sub(const F& K, const Poly<F>& a, const Poly<F>& b) {
    Poly<F> r;
    r.c.resize(std::max(a.c.size(), b.c.size()), K.zero());
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        typename F::Elem ai = i < a.c.size() ? a.c[i] : K.zero();
        typename F::Elem bi = i < b.c.size() ? b.c[i] : K.zero();
        r.c[i] = K.sub(ai, bi);
    }
    trim(K, r);
    return r;
}

template <class F>
Poly<F> mul(const F& K, const Poly<F>& a, const Poly<F>& b) {
    if (poly_is_zero(a) || poly_is_zero(b)) return {};
    Poly<F> r;
    r.c.assign(a.c.size() + b.c.size() - 1, K.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (K.is_zero(a.c[i])) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = K.add(r.c[i + j], K.mul(a.c[i], b.c[j]));
    }
    trim(K, r);
    return r;
}

template <class F>
Poly<F> scalar_mul(const F& K, const typename F::Elem& s, const Poly<F>& a) {
    Poly<F> r = a;
    for (auto& ci : r.c) ci = K.mul(s, ci);
    trim(K, r);
    return r;
}

template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const F& K, const Poly<F>& a, const Poly<F>& b) {
    if (poly_is_zero(b)) throw std::domain_error("polynomial division by zero");
    Poly<F> rem = a, quot;
    int db = degree(b);
    if (degree(a) >= db) quot.c.assign(degree(a) - db + 1, K.zero());
    auto lead_inv = K.inv(b.c.back());
    while (degree(rem) >= db) {
        int shift = degree(rem) - db;
        auto coef = K.mul(rem.c.back(), lead_inv);
        quot.c[shift] = coef;
        for (int i = 0; i <= db; ++i) rem.c[shift + i] = K.sub(rem.c[shift + i], K.mul(coef, b.c[i]));
        trim(K, rem);
    }
    trim(K, quot);
    return {quot, rem};
}

template <class F>
Poly<F> poly_mod(const F& K, const Poly<F>& a, const Poly<F>& b) {
    return divmod(K, a, b).second;
}

template <class F>
Poly<F> poly_div_exact(const F& K, const Poly<F>& a, const Poly<F>& b) {
    auto [q, r] = divmod(K, a, b);
    if (!poly_is_zero(r)) throw std::logic_error("poly_div_exact: division was not exact");
    return q;
}

template <class F>
bool divides(const F& K, const Poly<F>& d, const Poly<F>& f) {
    if (poly_is_zero(d)) return poly_is_zero(f);
    return poly_is_zero(divmod(K, f, d).second);
}

template <class F>
Poly<F> make_monic(const F& K, const Poly<F>& f) {
    if (poly_is_zero(f)) return f;
    return scalar_mul(K, K.inv(f.c.back()), f);
}

/// Monic gcd; gcd(0, 0) is rejected.
template <class F>
Poly<F> poly_gcd(const F& K, Poly<F> a, Poly<F> b) {
    if (poly_is_zero(a) && poly_is_zero(b)) throw std::domain_error("poly_gcd(0, 0)");
    while (!poly_is_zero(b)) {
        auto r = poly_mod(K, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(K, a);
}

template <class F>
typename F::Elem eval(const F& K, const Poly<F>& f, const typename F::Elem& x) {
    auto acc = K.zero();
    for (auto it = f.c.rbegin(); it != f.c.rend(); ++it) acc = K.add(K.mul(acc, x), *it);
    return acc;
}

template <class F>
Poly<F> derivative(const F& K, const Poly<F>& f) {
    Poly<F> r;
    for (std::size_t i = 1; i < f.c.size(); ++i)
        r.c.push_back(K.mul(K.from_uint(i % K.p()), f.c[i]));
    trim(K, r);
    return r;
}

template <class F>
Poly<F> pow_mod(const F& K, Poly<F> base, Int e, const Poly<F>& m) {
    if (e < 0) throw std::invalid_argument("pow_mod: negative exponent");
    Poly<F> r = poly_one(K);
    base = poly_mod(K, base, m);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = poly_mod(K, mul(K, r, base), m);
        e >>= 1;
        if (e > 0) base = poly_mod(K, mul(K, base, base), m);
    }
    return r;
}

template <class F>
struct PolyFactorization {
    typename F::Elem unit;                            // leading coefficient of the input
    std::vector<std::pair<Poly<F>, unsigned>> factors;  // monic irreducible, canonical order
};

/// Complete irreducible factorization: squarefree decomposition (with
/// p-th-root descent), distinct-degree, then seeded equal-degree splitting.
/// Output order is canonical, so the result does not depend on the seed.
template <class F>
PolyFactorization<F> factor_poly(const F& K, const Poly<F>& f, uint64_t seed = 0x9e3779b97f4a7c15ULL);

template <class F>
bool is_irreducible(const F& K, const Poly<F>& f);

/// Factorization of x^n - 1 over F_q: writes n = m * p^i with gcd(m, p) = 1,
/// factors the squarefree x^m - 1 and scales every multiplicity by p^i.
PolyFactorization<FqField> factor_xn_minus_1(const FqField& K, uint32_t n);

/// 2^(number of distinct monic irreducible factors)
template <class F>
Int W_poly(const F& K, const Poly<F>& g) {
    if (poly_is_zero(g)) throw std::invalid_argument("W_poly: zero polynomial");
    if (degree(g) == 0) return 1;
    return pow2(factor_poly(K, g).factors.size());
}

/// |(F_q[x]/<g>)^*|, multiplicative with Phi_q(h^r) = q^{d(r-1)} (q^d - 1).
Int phi_q(const FqField& K, const FqPoly& g);

/// (-1)^s on squarefree products of s distinct monic irreducibles, else 0.
int mu_prime(const FqField& K, const FqPoly& g);

// -- implementation of the template factorization ---------------------------

namespace detail {

template <class F>
Poly<F> random_poly_below(const F& K, int deg_bound, std::mt19937_64& rng) {
    Poly<F> r;
    for (int i = 0; i < deg_bound; ++i) r.c.push_back(K.random(rng));
    trim(K, r);
    return r;
}

/// f with only p-th powers present -> g with g(x^p) = f(x), coefficients
/// mapped through the p-th root of the coefficient field
template <class F>
Poly<F> pth_root_poly(const F& K, const Poly<F>& f) {
    uint32_t p = K.p();
    Poly<F> g;
    for (std::size_t i = 0; i < f.c.size(); i += p) g.c.push_back(K.pth_root(f.c[i]));
    trim(K, g);
    return g;
}

template <class F>
void squarefree_decompose(const F& K, Poly<F> f, unsigned outer, std::vector<std::pair<Poly<F>, unsigned>>& out) {
    uint32_t p = K.p();
    Poly<F> fd = derivative(K, f);
    if (poly_is_zero(fd)) {
        squarefree_decompose(K, pth_root_poly(K, f), outer * p, out);
        return;
    }
    Poly<F> c = poly_gcd(K, f, fd);
    Poly<F> w = poly_div_exact(K, f, c);
    unsigned i = 1;
    while (degree(w) > 0) {
        Poly<F> y = poly_gcd(K, w, c);
        Poly<F> z = poly_div_exact(K, w, y);
        if (degree(z) > 0) out.emplace_back(make_monic(K, z), outer * i);
        c = poly_div_exact(K, c, y);
        w = std::move(y);
        ++i;
    }
    if (degree(c) > 0) squarefree_decompose(K, pth_root_poly(K, c), outer * p, out);
}

/// distinct-degree: (monic squarefree f) -> list of (product of all
/// irreducible factors of degree d, d)
template <class F>
std::vector<std::pair<Poly<F>, unsigned>> distinct_degree(const F& K, Poly<F> f) {
    std::vector<std::pair<Poly<F>, unsigned>> out;
    Poly<F> h = poly_x(K);
    const Int q = K.size();
    for (unsigned d = 1; 2 * d <= static_cast<unsigned>(degree(f)); ++d) {
        h = pow_mod(K, h, q, f);
        Poly<F> hx = sub(K, h, poly_x(K));
        if (poly_is_zero(hx)) {
            // every remaining factor divides x^{q^d} - x; smaller degrees are
            // already extracted, so all remaining factors have degree exactly d
            out.emplace_back(f, d);
            return out;
        }
        Poly<F> g = poly_gcd(K, hx, f);
        if (degree(g) > 0) {
            out.emplace_back(g, d);
            f = poly_div_exact(K, f, g);
            h = poly_mod(K, h, f);
        }
    }
    if (degree(f) > 0) out.emplace_back(f, static_cast<unsigned>(degree(f)));
    return out;
}

/// Cantor-Zassenhaus equal-degree splitting of a product of degree-d factors.
template <class F>
void equal_degree_split(const F& K, const Poly<F>& f, unsigned d, std::mt19937_64& rng, std::vector<Poly<F>>& out) {
    if (static_cast<unsigned>(degree(f)) == d) {
        out.push_back(make_monic(K, f));
        return;
    }
    const uint32_t p = K.p();
    Poly<F> g;
    while (true) {
        Poly<F> r = random_poly_below(K, degree(f), rng);
        if (poly_is_zero(r)) continue;
        if (p == 2) {
            // trace map over F_2: r + r^2 + r^4 + ... (dim * d squarings)
            unsigned long dim2 = mpz_sizeinbase(K.size().get_mpz_t(), 2) - 1;
            Poly<F> t = poly_mod(K, r, f);
            Poly<F> sq = t;
            for (unsigned long i = 1; i < dim2 * d; ++i) {
                sq = poly_mod(K, mul(K, sq, sq), f);
                t = add(K, t, sq);
            }
            g = poly_is_zero(t) ? poly_zero(K) : poly_gcd(K, t, f);
        } else {
            Int e = (pow_int(K.size(), d) - 1) / 2;
            Poly<F> t = pow_mod(K, r, e, f);
            t = sub(K, t, poly_one(K));
            g = poly_is_zero(t) ? poly_zero(K) : poly_gcd(K, t, f);
        }
        if (degree(g) > 0 && degree(g) < degree(f)) {
            equal_degree_split(K, g, d, rng, out);
            equal_degree_split(K, poly_div_exact(K, f, g), d, rng, out);
            return;
        }
    }
}

}  // namespace detail

template <class F>
PolyFactorization<F> factor_poly(const F& K, const Poly<F>& f, uint64_t seed) {
    if (degree(f) < 1) throw std::invalid_argument("factor_poly: degree must be >= 1");
    PolyFactorization<F> out;
    out.unit = f.c.back();
    Poly<F> monic = make_monic(K, f);

    // strip powers of x first so the squarefree machinery sees a unit constant term
    unsigned x_mult = 0;
    while (!monic.c.empty() && K.is_zero(monic.c.front())) {
        monic.c.erase(monic.c.begin());
        ++x_mult;
    }
    if (x_mult > 0) out.factors.emplace_back(poly_x(K), x_mult);

    if (degree(monic) >= 1) {
        std::vector<std::pair<Poly<F>, unsigned>> squarefree;
        detail::squarefree_decompose(K, monic, 1, squarefree);
        std::mt19937_64 rng(seed);
        for (auto& [part, mult] : squarefree) {
            for (auto& [dd_part, d] : detail::distinct_degree(K, part)) {
                std::vector<Poly<F>> irred;
                detail::equal_degree_split(K, dd_part, d, rng, irred);
                for (auto& h : irred) out.factors.emplace_back(std::move(h), mult);
            }
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return poly_less<F>(a.first, b.first); });
    return out;
}

template <class F>
bool is_irreducible(const F& K, const Poly<F>& f) {
    int n = degree(f);
    if (n < 1) return false;
    if (n == 1) return true;
    // x^{q^n} == x mod f, and x^{q^{n/r}} - x coprime to f for prime r | n
    const Int q = K.size();
    Poly<F> h = poly_x(K);
    std::vector<Poly<F>> powers(n + 1);  // powers[i] = x^{q^i} mod f
    powers[0] = h;
    for (int i = 1; i <= n; ++i) powers[i] = pow_mod(K, powers[i - 1], q, f);
    if (!poly_eq(powers[n], poly_x(K))) return false;
    for (int r = 2; r <= n; ++r) {
        if (n % r != 0) continue;
        bool prime = true;
        for (int t = 2; t * t <= r; ++t)
            if (r % t == 0) prime = false;
        if (!prime) continue;
        Poly<F> diff = sub(K, powers[n / r], poly_x(K));
        if (poly_is_zero(diff)) return false;
        if (degree(poly_gcd(K, diff, f)) > 0) return false;
    }
    return true;
}

}  // namespace pnp

#endif
