#include "doctest.h"
#include "oracles.hpp"
#include "pnpair/arith.hpp"

#include <cstdio>
#include <fstream>
#include <set>

using namespace pnp;
using namespace pnp::arith;

namespace {

Factorization expect_complete(const Int& n) {
    auto f = factorize(n);
    REQUIRE(f.complete);
    return f;
}

}  // namespace

TEST_CASE("factorize small examples") {
    auto one = expect_complete(1);
    CHECK(one.factors.empty());

    auto f63 = expect_complete(63);
    REQUIRE(f63.factors.size() == 2);
    CHECK(f63.factors[0] == std::pair<Int, unsigned>{3, 2});
    CHECK(f63.factors[1] == std::pair<Int, unsigned>{7, 1});

    // 2^15 - 1, cross-checked against the trial division oracle
    auto f = expect_complete(32767);
    auto expected = oracle::factorize_u64(32767);
    REQUIRE(f.factors.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(f.factors[i].first == expected[i].first);
        CHECK(f.factors[i].second == expected[i].second);
    }
    CHECK(f.factors[0].first == 7);
    CHECK(f.factors[1].first == 31);
    CHECK(f.factors[2].first == 151);
}

TEST_CASE("factorize larger values against the oracle") {
    for (uint64_t n : {2ull, 97ull, 1024ull, 123456ull, 999983ull, 1048575ull, 33554431ull}) {
        auto f = expect_complete(Int(static_cast<unsigned long>(n)));
        auto expected = oracle::factorize_u64(n);
        REQUIRE(f.factors.size() == expected.size());
        for (std::size_t i = 0; i < expected.size(); ++i) {
            CHECK(to_u64(f.factors[i].first) == expected[i].first);
            CHECK(f.factors[i].second == expected[i].second);
        }
    }
}

TEST_CASE("factorize respects the budget and flags incompleteness") {
    // product of two 40-bit primes; rho would need far more than 16 iterations
    Int p1("1099511627791"), p2("1099511627803");
    Int n = p1 * p2;
    FactorBudget tiny{1000, 16};
    auto f = factorize(n, tiny);
    CHECK_FALSE(f.complete);
    REQUIRE(f.unfactored.size() == 1);
    CHECK(f.unfactored[0] == n);
    CHECK_THROWS_AS(W_int(f), std::invalid_argument);
    CHECK_THROWS_AS(euler_phi(f), std::invalid_argument);

    // a hint unblocks the same budget
    FactorHints hints;
    hints.add(n, {{p1, 1}, {p2, 1}});
    auto g = factorize(n, tiny, &hints);
    CHECK(g.complete);
    REQUIRE(g.factors.size() == 2);
}

TEST_CASE("factor hints validate their input") {
    FactorHints hints;
    CHECK_THROWS_AS(hints.add(Int(12), {{Int(4), 1}, {Int(3), 1}}), std::invalid_argument);  // 4 not prime
    CHECK_THROWS_AS(hints.add(Int(12), {{Int(2), 1}, {Int(3), 1}}), std::invalid_argument);  // product mismatch
    hints.add(Int(12), {{Int(2), 2}, {Int(3), 1}});
    CHECK(hints.lookup(Int(12)) != nullptr);
    CHECK(hints.lookup(Int(13)) == nullptr);
}

TEST_CASE("factor hint file round trip") {
    std::string path = "/tmp/pnpair_test_hints.txt";
    {
        std::ofstream out(path);
        out << "# comment line\n";
        out << "63=3^2 7\n";
    }
    auto hints = FactorHints::load_file(path);
    auto* entry = hints.lookup(Int(63));
    REQUIRE(entry != nullptr);
    CHECK(entry->size() == 2);
    std::remove(path.c_str());
}

TEST_CASE("factor_q_pow_n_minus_1 cyclotomic split") {
    auto f = factor_q_pow_n_minus_1(Int(2), 6);
    CHECK(f.value == 63);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0] == std::pair<Int, unsigned>{3, 2});
    CHECK(f.factors[1] == std::pair<Int, unsigned>{7, 1});

    // q = 32, n = 3 agrees with plain factorize(32767)
    auto g = factor_q_pow_n_minus_1(Int(32), 3);
    auto h = factorize(Int(32767));
    CHECK(g.factors == h.factors);
    CHECK(g.complete);

    // q = 2, n = 105: complete, includes 7, 31, 127, 151, product checks out
    auto big = factor_q_pow_n_minus_1(Int(2), 105);
    CHECK(big.complete);
    Int prod = 1;
    std::set<Int> primes;
    for (const auto& [p, e] : big.factors) {
        prod *= pow_int(p, e);
        primes.insert(p);
        CHECK(is_probable_prime(p));
    }
    CHECK(prod == pow2(105) - 1);
    for (int want : {7, 31, 127, 151}) CHECK(primes.count(Int(want)) == 1);
}

TEST_CASE("W_int") {
    CHECK(W_int(Int(1)) == 1);
    CHECK(W_int(Int(63)) == 4);
    // 2^25 - 1 = 31 * 601 * 1801 per the trial division oracle
    auto parts = oracle::factorize_u64((1ull << 25) - 1);
    REQUIRE(parts.size() == 3);
    CHECK(parts[0].first == 31);
    CHECK(parts[1].first == 601);
    CHECK(parts[2].first == 1801);
    CHECK(W_int(pow2(25) - 1) == 8);
}

TEST_CASE("W_int equals the direct squarefree divisor count up to 10^4") {
    for (uint64_t n = 1; n <= 10000; n += (n < 300 ? 1 : 37))
        CHECK(to_u64(W_int(Int(static_cast<unsigned long>(n)))) == oracle::squarefree_divisor_count(n));
}

TEST_CASE("euler_phi and moebius") {
    CHECK(euler_phi(Int(7)) == 6);
    CHECK(moebius(Int(12)) == 0);
    CHECK(to_u64(euler_phi(Int(63))) == oracle::phi_direct(63));
    CHECK(euler_phi(Int(63)) == 36);
    CHECK(moebius(Int(105)) == -1);
    CHECK(moebius(Int(1)) == 1);
}

TEST_CASE("divisor sums: sum phi(d) = n and sum mu(d) = [n = 1]") {
    for (uint64_t n = 1; n <= 10000; n += (n < 200 ? 1 : 113)) {
        Int phi_sum = 0;
        long mu_sum = 0;
        for (uint64_t d = 1; d * d <= n; ++d) {
            if (n % d != 0) continue;
            phi_sum += euler_phi(Int(static_cast<unsigned long>(d)));
            mu_sum += moebius(Int(static_cast<unsigned long>(d)));
            if (d != n / d) {
                phi_sum += euler_phi(Int(static_cast<unsigned long>(n / d)));
                mu_sum += moebius(Int(static_cast<unsigned long>(n / d)));
            }
        }
        CHECK(phi_sum == Int(static_cast<unsigned long>(n)));
        CHECK(mu_sum == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("primality") {
    CHECK(is_probable_prime(Int(2)));
    CHECK(is_probable_prime(Int(131071)));
    CHECK_FALSE(is_probable_prime(Int(1)));
    CHECK_FALSE(is_probable_prime(Int(561)));  // Carmichael
    CHECK(is_probable_prime(pow2(31) - 1));
    CHECK_FALSE(is_probable_prime(pow2(32) - 1));
    CHECK(is_probable_prime(Int("170141183460469231731687303715884105727")));  // 2^127 - 1
}

TEST_CASE("split_prime_power") {
    auto [p, k] = split_prime_power(Int(1024));
    CHECK(p == 2);
    CHECK(k == 10);
    auto [p2, k2] = split_prime_power(Int(1021));
    CHECK(p2 == 1021);
    CHECK(k2 == 1);
    CHECK_THROWS_AS(split_prime_power(Int(12)), std::invalid_argument);
    CHECK_THROWS_AS(split_prime_power(Int(1)), std::invalid_argument);
}

TEST_CASE("cyclotomic_value") {
    CHECK(cyclotomic_value(1, Int(2)) == 1);
    CHECK(cyclotomic_value(3, Int(2)) == 7);
    CHECK(cyclotomic_value(5, Int(2)) == 31);
    CHECK(cyclotomic_value(7, Int(2)) == 127);
    CHECK(cyclotomic_value(15, Int(2)) == 151);
    // product over divisors reassembles q^n - 1
    for (uint32_t n : {6u, 12u, 30u}) {
        Int prod = 1;
        for (uint32_t m : divisors_of(n)) prod *= cyclotomic_value(m, Int(2));
        CHECK(prod == pow2(n) - 1);
    }
}

TEST_CASE("factorize rejects nonpositive input") {
    CHECK_THROWS_AS(factorize(Int(0)), std::invalid_argument);
    CHECK_THROWS_AS(factorize(Int(-5)), std::invalid_argument);
}
