#ifndef PNPAIR_ARITH_HPP
#define PNPAIR_ARITH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pnpair/bigint.hpp"

namespace pnp::arith {

/// Prime decomposition of a positive integer. `complete == false` means some
/// cofactor resisted the factoring budget; the unfactored cofactors are kept
/// as pseudo-factors with exponent 0 so callers can report what is missing.
struct Factorization {
    Int value{1};
    std::vector<std::pair<Int, unsigned>> factors;  // primes, strictly increasing
    std::vector<Int> unfactored;                    // composite leftovers (only when !complete)
    bool complete = true;

    std::size_t omega() const { return factors.size(); }
    bool divides_value(const Int& d) const { return value % d == 0; }
    /// primes of this factorization that divide d
    std::vector<Int> primes_dividing(const Int& d) const;
    /// primes of this factorization that do NOT divide d
    std::vector<Int> primes_not_dividing(const Int& d) const;
};

struct FactorBudget {
    uint32_t trial_limit = 1'000'000;     // deterministic trial division bound
    uint64_t rho_iterations = 8'000'000;  // Brent-rho iterations per composite before giving up
};

/// External factor hints: lines of the form `value=prime^exp prime^exp ...`.
/// Entries are validated (primality of every listed prime, product check)
/// before they are accepted.
class FactorHints {
public:
    void add(const Int& value, std::vector<std::pair<Int, unsigned>> factors);
    static FactorHints load_file(const std::string& path);
    const std::vector<std::pair<Int, unsigned>>* lookup(const Int& value) const;
    std::size_t size() const { return table_.size(); }

private:
    std::map<Int, std::vector<std::pair<Int, unsigned>>> table_;
};

/// Deterministic Miller-Rabin below 3.317e24, probabilistic above.
bool is_probable_prime(const Int& n);

Factorization factorize(const Int& n, const FactorBudget& budget = {}, const FactorHints* hints = nullptr);

/// Factor q^n - 1 for a prime power q = p^k by splitting along the cyclotomic
/// values Phi_m(p) for m | k*n, then factoring each piece.
Factorization factor_q_pow_n_minus_1(const Int& q, uint32_t n, const FactorBudget& budget = {},
                                     const FactorHints* hints = nullptr);

/// Number of squarefree divisors, 2^omega(n). Refuses incomplete factorizations.
Int W_int(const Factorization& f);
Int W_int(const Int& n, const FactorBudget& budget = {});

Int euler_phi(const Factorization& f);
Int euler_phi(const Int& n, const FactorBudget& budget = {});

int moebius(const Factorization& f);
int moebius(const Int& n, const FactorBudget& budget = {});

/// Phi_m(x) evaluated at x = q, by the divisor recursion over q^d - 1.
Int cyclotomic_value(uint32_t m, const Int& q);

std::vector<uint32_t> primes_upto(uint32_t limit);

/// Decompose a prime power q = p^k; throws if q is not a prime power.
std::pair<Int, uint32_t> split_prime_power(const Int& q);

std::vector<uint32_t> divisors_of(uint32_t n);

}  // namespace pnp::arith

#endif
