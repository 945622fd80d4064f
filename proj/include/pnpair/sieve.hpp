#ifndef PNPAIR_SIEVE_HPP
#define PNPAIR_SIEVE_HPP

#include <optional>
#include <string>
#include <vector>

#include "pnpair/arith.hpp"
#include "pnpair/ffield.hpp"
#include "pnpair/fpoly.hpp"

namespace pnp::sieve {

/// Everything the sieve needs about (q, n) without paying for the extension
/// field itself: F_q, the factorization of q^n - 1 and of x^n - 1 over F_q.
struct SieveContext {
    uint32_t p = 0, k = 0, n = 0;
    std::unique_ptr<FqField> base;
    Int q, qn, qn_minus_1;
    arith::Factorization order_fact;
    PolyFactorization<FqField> xn1;
};

SieveContext make_context(uint32_t p, uint32_t k, uint32_t n, const arith::FactorBudget& budget = {},
                          const arith::FactorHints* hints = nullptr,
                          std::optional<std::vector<uint32_t>> base_modulus = std::nullopt);

/// The case-split constant M of the sufficient condition.
uint64_t weil_M(uint32_t m1, uint32_t m2);

/// One sieve evaluation: the chosen divisors d | q^n - 1 and g | x^n - 1,
/// the remaining prime / irreducible-factor counts s and t, and the exact
/// correction terms D and S. All decisions are made on exact rationals;
/// the real fields are for reporting only.
struct SieveReport {
    Int q;
    uint32_t n = 0;
    Int d;
    FqPoly g;
    uint32_t s = 0, t = 0;
    Rat D;
    std::optional<Rat> S;  // unset when D <= 0
    uint64_t M = 7;
    Int W_d, W_g;
    bool holds = false;

    double D_real() const { return D.get_d(); }
    double S_real() const { return S ? S->get_d() : 0.0; }
};

/// requires a complete factorization of q^n - 1; rejects non-divisors
SieveReport sieve_params(const SieveContext& ctx, const Int& d, const FqPoly& g, uint64_t M = 7);

struct Theorem41Result {
    bool holds = false;
    uint64_t M = 0;
    Int W_l1, W_l2, W_h1, W_h2;
    Int lhs_squared;  // q^n
    Int rhs_squared;  // (M * prod W)^2
};

/// q^{n/2} > M W(l1)W(l2)W(h1)W(h2), decided exactly as q^n > (M prod W)^2
Theorem41Result theorem41_check(const SieveContext& ctx, uint32_t m1, uint32_t m2, const Int& l1, const Int& l2,
                                const FqPoly& h1, const FqPoly& h2);

struct WeilC {
    uint32_t s = 0;  // number of primes used
    Int P = 1;       // their product
    double C = 1.0;  // 2^s / P^{1/nu}
};

/// W(eta) <= C * eta^{1/nu} with C = 2^s / (p_1...p_s)^{1/nu} over the primes
/// <= 2^nu dividing eta; without eta, the worst case over all primes <= 2^nu.
/// include_two = false gives the odd-primes variant (valid whenever eta is
/// odd, e.g. eta = q^n - 1 for q = 2^k). nu is passed as 10*nu (exact cutoff
/// p <= 2^nu is decided by p^10 <= 2^(10 nu)).
WeilC lemma24_C(uint32_t nu_times_10, const std::optional<Int>& eta = std::nullopt, bool include_two = true);

/// rho(q, m) = N_0 / m where N_0 counts the distinct irreducible factors of
/// x^m - 1 over F_q of degree below the order of q mod m. Requires gcd(m, p) = 1.
Rat rho(const FqField& base, uint32_t m);
Rat rho(uint32_t p, uint32_t k, uint32_t m);

/// N_0 irrespective of the coprimality of n (x^{m p^i} - 1 has the same
/// distinct factors as x^m - 1)
uint32_t rho_numerator(const FqField& base, uint32_t n);

struct Lemma53Result {
    FqPoly g;       // product of all irreducible factors of x^m - 1 of degree < e
    uint32_t e = 0; // order of q mod m
    uint32_t t = 0; // number of degree-e factors
    Rat D, S;
    bool s_bound_ok = false;  // S <= 2m
};

/// rejects m with order of q mod m <= 2 (and p | m)
Lemma53Result lemma53_construct(const FqField& base, uint32_t m);
Lemma53Result lemma53_construct(uint32_t p, uint32_t k, uint32_t m);

/// Least n >= 1 for which q^{n/2} > 7 C^2 q^{2n/nu} 2^{2n} holds (q = 2^k),
/// decided exactly: 2^{k n V - 40 k n - 4 n V} P^40 > 7^{2V} 2^{4 V s} with
/// V = 10 nu. nullopt when the inequality never stabilizes for this k.
std::optional<uint64_t> ineq6_threshold(uint32_t k, uint32_t nu_times_10, bool include_two);

struct Ineq6Row {
    uint32_t k = 0, nu_times_10 = 0;
    std::optional<uint64_t> with_two, odd_only;
};

Ineq6Row inequality_scan(uint32_t k, uint32_t nu_times_10);

/// Least i >= 0 such that q^{n/2} > M C^2 q^{2n/nu} 2^{2 m rho} 2m holds for
/// n = m 2^i (q = 2^k, rho = N0/m). nullopt if not reached below i = 64.
/// M defaults to 7; the paper's worked cases substitute 6 here.
std::optional<uint32_t> ineq8_least_i(uint32_t k, uint32_t m, uint32_t N0, uint32_t nu_times_10, bool include_two,
                                      uint64_t M = 7);

}  // namespace pnp::sieve

#endif
