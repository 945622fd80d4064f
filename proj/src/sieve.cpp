#include "pnpair/sieve.hpp"

#include <cmath>

namespace pnp::sieve {

namespace {

// F_p viewed through the FqField interface (modulus x)
std::unique_ptr<FqField> make_base(uint32_t p, uint32_t k, std::optional<std::vector<uint32_t>> base_modulus,
                                   const arith::FactorBudget& budget, const arith::FactorHints* hints) {
    if (base_modulus) return std::make_unique<FqField>(p, std::move(*base_modulus));
    // reuse the tower's default-modulus rule by building a k-level tower over F_p
    auto t = FieldTower::build(p, 1, k, std::nullopt, std::nullopt, budget, hints);
    std::vector<uint32_t> coeffs;
    for (const auto& c : t->fqn().modulus()) coeffs.push_back(c[0]);
    return std::make_unique<FqField>(p, std::move(coeffs));
}

}  // namespace

SieveContext make_context(uint32_t p, uint32_t k, uint32_t n, const arith::FactorBudget& budget,
                          const arith::FactorHints* hints, std::optional<std::vector<uint32_t>> base_modulus) {
    if (!arith::is_probable_prime(Int(p))) throw std::invalid_argument("make_context: p must be prime");
    SieveContext ctx;
    ctx.p = p;
    ctx.k = k;
    ctx.n = n;
    ctx.base = make_base(p, k, std::move(base_modulus), budget, hints);
    ctx.q = ctx.base->size();
    ctx.qn = pow_int(ctx.q, n);
    ctx.qn_minus_1 = ctx.qn - 1;
    ctx.order_fact = arith::factor_q_pow_n_minus_1(ctx.q, n, budget, hints);
    ctx.xn1 = factor_xn_minus_1(*ctx.base, n);
    return ctx;
}

uint64_t weil_M(uint32_t m1, uint32_t m2) {
    if (m2 < 1) throw std::invalid_argument("weil_M: m2 must be >= 1");
    return m1 > m2 ? 2ull * m1 + m2 : m1 + 2ull * m2 + 1;
}

SieveReport sieve_params(const SieveContext& ctx, const Int& d, const FqPoly& g, uint64_t M) {
    if (!ctx.order_fact.complete) throw std::invalid_argument("sieve_params: factorization of q^n - 1 incomplete");
    if (d < 1 || ctx.qn_minus_1 % d != 0) throw std::invalid_argument("sieve_params: d does not divide q^n - 1");
    const FqField& K = *ctx.base;
    FqPoly xn1 = poly_xm_minus_1(K, ctx.n);
    if (poly_is_zero(g) || !divides(K, g, xn1)) throw std::invalid_argument("sieve_params: g does not divide x^n - 1");

    SieveReport r;
    r.q = ctx.q;
    r.n = ctx.n;
    r.d = d;
    r.g = make_monic(K, g);
    r.M = M;

    auto rem_primes = ctx.order_fact.primes_not_dividing(d);
    r.s = static_cast<uint32_t>(rem_primes.size());
    r.W_d = pow2(ctx.order_fact.omega() - rem_primes.size());

    std::vector<uint32_t> rem_degrees;
    uint32_t g_factor_count = 0;
    for (const auto& [h, mult] : ctx.xn1.factors) {
        if (degree(r.g) > 0 && divides(K, h, r.g))
            ++g_factor_count;
        else
            rem_degrees.push_back(static_cast<uint32_t>(degree(h)));
    }
    r.t = static_cast<uint32_t>(rem_degrees.size());
    r.W_g = pow2(g_factor_count);

    // D = 1 - 2 sum 1/p_i - 2 sum 1/q^{deg g_i}, exactly
    Rat D(1);
    for (const auto& p : rem_primes) D -= Rat(2) / Rat(p);
    for (uint32_t e : rem_degrees) D -= Rat(2) / Rat(pow_int(ctx.q, e));
    D.canonicalize();
    r.D = D;

    if (D > 0) {
        Rat S = Rat(2 * static_cast<long>(r.s) + 2 * static_cast<long>(r.t) - 1) / D + 2;
        S.canonicalize();
        r.S = S;
        // q^{n/2} > M W(d)^2 W(g)^2 S  <=>  q^n D^2 > (M W_d^2 W_g^2)^2 ((2s+2t-1) + 2D)^2
        Rat lhs = Rat(ctx.qn) * D * D;
        Rat base = Rat(Int(M) * r.W_d * r.W_d * r.W_g * r.W_g);
        Rat corr = Rat(2 * static_cast<long>(r.s) + 2 * static_cast<long>(r.t) - 1) + Rat(2) * D;
        Rat rhs = base * base * corr * corr;
        r.holds = lhs > rhs;
    }
    return r;
}

Theorem41Result theorem41_check(const SieveContext& ctx, uint32_t m1, uint32_t m2, const Int& l1, const Int& l2,
                                const FqPoly& h1, const FqPoly& h2) {
    if (!ctx.order_fact.complete)
        throw std::invalid_argument("theorem41_check: factorization of q^n - 1 incomplete");
    const FqField& K = *ctx.base;
    FqPoly xn1 = poly_xm_minus_1(K, ctx.n);
    for (const Int* l : {&l1, &l2})
        if (*l < 1 || ctx.qn_minus_1 % *l != 0)
            throw std::invalid_argument("theorem41_check: l does not divide q^n - 1");
    for (const FqPoly* h : {&h1, &h2})
        if (poly_is_zero(*h) || !divides(K, *h, xn1))
            throw std::invalid_argument("theorem41_check: h does not divide x^n - 1");

    auto W_of_divisor = [&](const Int& l) { return pow2(ctx.order_fact.primes_dividing(l).size()); };
    auto W_of_poly_divisor = [&](const FqPoly& h) {
        uint32_t cnt = 0;
        for (const auto& [u, mult] : ctx.xn1.factors)
            if (degree(h) > 0 && divides(K, u, h)) ++cnt;
        return pow2(cnt);
    };

    Theorem41Result r;
    r.M = weil_M(m1, m2);
    r.W_l1 = W_of_divisor(l1);
    r.W_l2 = W_of_divisor(l2);
    r.W_h1 = W_of_poly_divisor(h1);
    r.W_h2 = W_of_poly_divisor(h2);
    r.lhs_squared = ctx.qn;
    Int rhs = Int(r.M) * r.W_l1 * r.W_l2 * r.W_h1 * r.W_h2;
    r.rhs_squared = rhs * rhs;
    r.holds = r.lhs_squared > r.rhs_squared;
    return r;
}

namespace {

// primes p <= 2^{V/10}, decided exactly via p^10 <= 2^V
std::vector<uint32_t> primes_le_2nu(uint32_t V, bool include_two) {
    Int bound = iroot(pow2(V), 10);
    if (!fits_u64(bound) || to_u64(bound) > (1u << 28))
        throw std::invalid_argument("lemma24_C: nu too large");
    uint32_t b = static_cast<uint32_t>(to_u64(bound));
    auto ps = arith::primes_upto(b);
    if (!include_two && !ps.empty() && ps.front() == 2) ps.erase(ps.begin());
    return ps;
}

double C_from(uint32_t s, const Int& P, uint32_t V) {
    // 2^s / P^{1/nu} via logs; report-only value
    signed long exp2;
    double mant = mpz_get_d_2exp(&exp2, P.get_mpz_t());
    double log2P = std::log2(mant) + static_cast<double>(exp2);
    return std::exp2(static_cast<double>(s) - log2P / (V / 10.0));
}

}  // namespace

WeilC lemma24_C(uint32_t nu_times_10, const std::optional<Int>& eta, bool include_two) {
    WeilC out;
    for (uint32_t p : primes_le_2nu(nu_times_10, include_two)) {
        if (eta && *eta % p != 0) continue;
        out.s += 1;
        out.P *= p;
    }
    out.C = C_from(out.s, out.P, nu_times_10);
    return out;
}

uint32_t rho_numerator(const FqField& base, uint32_t n) {
    uint32_t m = n;
    while (m % base.p() == 0) m /= base.p();
    if (m == 1) return 0;
    // order of q mod m
    Int q = base.size();
    uint32_t e = 1;
    Int acc = q % m;
    while (acc != 1) {
        acc = acc * q % m;
        ++e;
    }
    uint32_t count = 0;
    for (const auto& [h, mult] : factor_xn_minus_1(base, m).factors)
        if (static_cast<uint32_t>(degree(h)) < e) ++count;
    return count;
}

Rat rho(const FqField& base, uint32_t m) {
    if (m == 0 || m % base.p() == 0)
        throw std::invalid_argument("rho: m must be positive and coprime to p (reduce to the coprime part first)");
    Rat r(Int(rho_numerator(base, m)), Int(m));
    r.canonicalize();
    return r;
}

Rat rho(uint32_t p, uint32_t k, uint32_t m) {
    auto ctx = make_context(p, k, 1);
    return rho(*ctx.base, m);
}

Lemma53Result lemma53_construct(const FqField& base, uint32_t m) {
    if (m == 0 || m % base.p() == 0) throw std::invalid_argument("lemma53_construct: gcd(m, p) must be 1");
    Int q = base.size();
    if ((q - 1) % m == 0) throw std::invalid_argument("lemma53_construct: m divides q - 1 (order <= 1)");
    uint32_t e = 1;
    Int acc = q % m;
    while (acc != 1) {
        acc = acc * q % m;
        ++e;
    }
    if (e <= 2) throw std::invalid_argument("lemma53_construct: order of q mod m is <= 2");

    Lemma53Result out;
    out.e = e;
    out.g = poly_one(base);
    uint32_t t = 0;
    for (const auto& [h, mult] : factor_xn_minus_1(base, m).factors) {
        if (static_cast<uint32_t>(degree(h)) < e)
            out.g = mul(base, out.g, h);
        else
            ++t;
    }
    out.t = t;
    // d = q^m - 1, so s = 0 and the remaining factors all have degree e
    Rat D = Rat(1) - Rat(2 * static_cast<long>(t)) / Rat(pow_int(q, e));
    D.canonicalize();
    out.D = D;
    if (D <= 0) throw std::logic_error("lemma53_construct: D <= 0 cannot happen for e > 2");
    Rat S = Rat(2 * static_cast<long>(t) - 1) / D + 2;
    S.canonicalize();
    out.S = S;
    out.s_bound_ok = S <= Rat(2 * static_cast<long>(m));
    return out;
}

Lemma53Result lemma53_construct(uint32_t p, uint32_t k, uint32_t m) {
    auto ctx = make_context(p, k, 1);
    return lemma53_construct(*ctx.base, m);
}

namespace {

struct Ineq6Data {
    uint32_t s;
    Int P40;      // P^40
    Int rhs_fixed;  // 7^{2V} * 2^{4 V s}
};

Ineq6Data ineq6_data(uint32_t V, bool include_two) {
    Ineq6Data d;
    Int P = 1;
    uint32_t s = 0;
    for (uint32_t p : primes_le_2nu(V, include_two)) {
        P *= p;
        ++s;
    }
    d.s = s;
    d.P40 = pow_int(P, 40);
    d.rhs_fixed = pow_int(Int(7), 2 * V) * pow2(4ull * V * s);
    return d;
}

// 2^{knV - 40kn - 4nV} P^40 > 7^{2V} 2^{4Vs}
bool ineq6_holds(uint32_t k, uint64_t n, uint32_t V, const Ineq6Data& d) {
    long long E = static_cast<long long>(k) * n * V - 40ll * k * n - 4ll * n * V;
    if (E >= 0) return d.P40 * pow2(static_cast<unsigned long>(E)) > d.rhs_fixed;
    return d.P40 > d.rhs_fixed * pow2(static_cast<unsigned long>(-E));
}

}  // namespace

std::optional<uint64_t> ineq6_threshold(uint32_t k, uint32_t nu_times_10, bool include_two) {
    uint32_t V = nu_times_10;
    long long coeff = static_cast<long long>(k) * V - 40ll * k - 4ll * V;
    if (coeff <= 0) return std::nullopt;  // left side never overtakes
    Ineq6Data d = ineq6_data(V, include_two);
    uint64_t lo = 1, hi = 1;
    while (!ineq6_holds(k, hi, V, d)) {
        hi *= 2;
        if (hi > (1ull << 40)) return std::nullopt;
    }
    while (lo < hi) {
        uint64_t mid = lo + (hi - lo) / 2;
        if (ineq6_holds(k, mid, V, d))
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

Ineq6Row inequality_scan(uint32_t k, uint32_t nu_times_10) {
    Ineq6Row row;
    row.k = k;
    row.nu_times_10 = nu_times_10;
    row.with_two = ineq6_threshold(k, nu_times_10, true);
    row.odd_only = ineq6_threshold(k, nu_times_10, false);
    return row;
}

std::optional<uint32_t> ineq8_least_i(uint32_t k, uint32_t m, uint32_t N0, uint32_t nu_times_10, bool include_two,
                                      uint64_t M) {
    uint32_t V = nu_times_10;
    Ineq6Data d = ineq6_data(V, include_two);
    // q^{n/2} > M C^2 q^{2n/nu} 2^{2 N0} 2m with n = m 2^i, exactly:
    // 2^{knV - 40kn - 4 N0 V} P^40 > M^{2V} 2^{4Vs} (2m)^{2V}
    Int rhs = pow_int(Int(M), 2 * V) * pow2(4ull * V * d.s) *
              pow_int(Int(2 * static_cast<unsigned long>(m)), 2 * V);
    for (uint32_t i = 0; i <= 64; ++i) {
        uint64_t n = static_cast<uint64_t>(m) << i;
        long long E = static_cast<long long>(k) * n * V - 40ll * k * n - 4ll * N0 * V;
        bool ok = E >= 0 ? d.P40 * pow2(static_cast<unsigned long>(E)) > rhs
                         : d.P40 > rhs * pow2(static_cast<unsigned long>(-E));
        if (ok) return i;
    }
    return std::nullopt;
}

}  // namespace pnp::sieve
