#include "pnpair/arith.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace pnp::arith {

std::vector<Int> Factorization::primes_dividing(const Int& d) const {
    std::vector<Int> out;
    for (const auto& [p, e] : factors)
        if (d % p == 0) out.push_back(p);
    return out;
}

std::vector<Int> Factorization::primes_not_dividing(const Int& d) const {
    std::vector<Int> out;
    for (const auto& [p, e] : factors)
        if (d % p != 0) out.push_back(p);
    return out;
}

bool is_probable_prime(const Int& n) {
    if (n < 2) return false;
    for (unsigned p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    // write n-1 = d * 2^s
    Int d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    d >>= s;
    auto witness = [&](const Int& a) {
        Int x = powm(a, d, n);
        if (x == 1 || x == n - 1) return false;
        for (unsigned long i = 1; i < s; ++i) {
            x = x * x % n;
            if (x == n - 1) return false;
        }
        return true;  // a proves n composite
    };
    // deterministic for n < 3.317e24 with the first 13 primes as witnesses
    static const Int kDetBound("3317044064679887385961981");
    if (n < kDetBound) {
        for (unsigned a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41})
            if (witness(Int(a))) return false;
        return true;
    }
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

// Brent's variant of Pollard rho; returns a nontrivial factor or nullopt if
// the iteration budget runs out. n must be odd composite.
std::optional<Int> brent_rho(const Int& n, uint64_t max_iter) {
    if (n % 2 == 0) return Int(2);
    gmp_randstate_t rs;
    gmp_randinit_mt(rs);
    gmp_randseed_ui(rs, 0x5eed5eedULL);  // fixed seed: deterministic outputs
    Int result = 0;
    uint64_t used = 0;
    while (used < max_iter && result == 0) {
        Int y, c;
        mpz_urandomm(y.get_mpz_t(), rs, n.get_mpz_t());
        mpz_urandomm(c.get_mpz_t(), rs, n.get_mpz_t());
        if (c == 0) c = 1;
        Int g = 1, q = 1, x, ys;
        uint64_t r = 1;
        while (g == 1 && used < max_iter) {
            x = y;
            for (uint64_t i = 0; i < r; ++i) y = (y * y + c) % n;
            for (uint64_t k = 0; k < r && g == 1 && used < max_iter; k += 128) {
                ys = y;
                uint64_t lim = std::min<uint64_t>(128, r - k);
                for (uint64_t i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(Int(x - y)) % n;
                }
                used += lim;
                g = gcd_int(q, n);
            }
            r *= 2;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {  // backtrack a step at a time
                ys = (ys * ys + c) % n;
                g = gcd_int(abs(Int(x - ys)), n);
            }
        }
        if (g != n && g > 1) result = g;
    }
    gmp_randclear(rs);
    if (result > 1) return result;
    return std::nullopt;
}

void merge_factor(std::map<Int, unsigned>& acc, const Int& p, unsigned e) { acc[p] += e; }

// factor m into acc; returns false (and records m in unfactored) on budget exhaustion
bool factor_rec(const Int& m, const FactorBudget& budget, const FactorHints* hints, std::map<Int, unsigned>& acc,
                std::vector<Int>& unfactored) {
    if (m == 1) return true;
    if (hints != nullptr) {
        if (const auto* known = hints->lookup(m)) {
            for (const auto& [p, e] : *known) merge_factor(acc, p, e);
            return true;
        }
    }
    if (is_probable_prime(m)) {
        merge_factor(acc, m, 1);
        return true;
    }
    // perfect power?
    if (mpz_perfect_power_p(m.get_mpz_t())) {
        for (unsigned long k = 2; k <= mpz_sizeinbase(m.get_mpz_t(), 2); ++k) {
            Int r = iroot(m, k);
            if (pow_int(r, k) == m) {
                std::map<Int, unsigned> sub;
                bool ok = factor_rec(r, budget, hints, sub, unfactored);
                for (const auto& [p, e] : sub) merge_factor(acc, p, e * k);
                return ok;
            }
        }
    }
    auto f = brent_rho(m, budget.rho_iterations);
    if (!f) {
        unfactored.push_back(m);
        return false;
    }
    bool ok1 = factor_rec(*f, budget, hints, acc, unfactored);
    bool ok2 = factor_rec(m / *f, budget, hints, acc, unfactored);
    return ok1 && ok2;
}

}  // namespace

Factorization factorize(const Int& n, const FactorBudget& budget, const FactorHints* hints) {
    if (n < 1) throw std::invalid_argument("factorize: argument must be >= 1");
    Factorization out;
    out.value = n;
    if (n == 1) return out;

    std::map<Int, unsigned> acc;
    Int rem = n;
    if (hints != nullptr) {
        if (const auto* known = hints->lookup(n)) {
            out.factors.assign(known->begin(), known->end());
            return out;
        }
    }
    // trial division
    for (uint32_t p : primes_upto(budget.trial_limit)) {
        if (Int(p) * p > rem) break;
        while (rem % p == 0) {
            merge_factor(acc, Int(p), 1);
            rem /= p;
        }
    }
    if (rem > 1) {
        if (rem < Int(budget.trial_limit) * budget.trial_limit) {
            merge_factor(acc, rem, 1);  // below the trial square: prime
        } else {
            out.complete = factor_rec(rem, budget, hints, acc, out.unfactored);
        }
    }
    out.factors.assign(acc.begin(), acc.end());
    return out;
}

Int cyclotomic_value(uint32_t m, const Int& q) {
    if (m == 0) throw std::invalid_argument("cyclotomic_value: m must be positive");
    // Phi_m(q) = prod_{d | m} (q^d - 1)^{mu(m/d)}
    Int num = 1, den = 1;
    for (uint32_t d : divisors_of(m)) {
        int mu = moebius(factorize(Int(m / d)));
        if (mu == 1)
            num *= pow_int(q, d) - 1;
        else if (mu == -1)
            den *= pow_int(q, d) - 1;
    }
    return num / den;
}

Factorization factor_q_pow_n_minus_1(const Int& q, uint32_t n, const FactorBudget& budget, const FactorHints* hints) {
    if (n == 0) throw std::invalid_argument("factor_q_pow_n_minus_1: n must be positive");
    auto [p, k] = split_prime_power(q);
    uint32_t kn = k * n;
    Factorization out;
    out.value = pow_int(q, n) - 1;
    if (out.value == 1) return out;
    if (hints != nullptr) {
        if (const auto* known = hints->lookup(out.value)) {
            out.factors.assign(known->begin(), known->end());
            return out;
        }
    }

    std::map<Int, unsigned> acc;
    for (uint32_t m : divisors_of(kn)) {
        Int piece = cyclotomic_value(m, p);
        if (piece == 1) continue;
        Factorization pf = factorize(piece, budget, hints);
        for (const auto& [pp, e] : pf.factors) acc[pp] += e;
        if (!pf.complete) {
            out.complete = false;
            for (const auto& u : pf.unfactored) out.unfactored.push_back(u);
        }
    }
    out.factors.assign(acc.begin(), acc.end());

    if (out.complete) {
        Int check = 1;
        for (const auto& [pp, e] : out.factors) check *= pow_int(pp, e);
        if (check != out.value) throw std::logic_error("factor_q_pow_n_minus_1: cyclotomic split product mismatch");
    }
    return out;
}

Int W_int(const Factorization& f) {
    if (!f.complete) throw std::invalid_argument("W_int: factorization incomplete");
    return pow2(f.omega());
}

Int W_int(const Int& n, const FactorBudget& budget) { return W_int(factorize(n, budget)); }

Int euler_phi(const Factorization& f) {
    if (!f.complete) throw std::invalid_argument("euler_phi: factorization incomplete");
    Int r = 1;
    for (const auto& [p, e] : f.factors) r *= pow_int(p, e - 1) * (p - 1);
    return r;
}

Int euler_phi(const Int& n, const FactorBudget& budget) { return euler_phi(factorize(n, budget)); }

int moebius(const Factorization& f) {
    if (!f.complete) throw std::invalid_argument("moebius: factorization incomplete");
    for (const auto& [p, e] : f.factors)
        if (e > 1) return 0;
    return f.omega() % 2 == 0 ? 1 : -1;
}

int moebius(const Int& n, const FactorBudget& budget) { return moebius(factorize(n, budget)); }

std::vector<uint32_t> primes_upto(uint32_t limit) {
    std::vector<uint32_t> out;
    if (limit < 2) return out;
    std::vector<bool> sieve(static_cast<std::size_t>(limit) + 1, true);
    sieve[0] = sieve[1] = false;
    for (uint64_t i = 2; i <= limit; ++i) {
        if (!sieve[i]) continue;
        out.push_back(static_cast<uint32_t>(i));
        for (uint64_t j = i * i; j <= limit; j += i) sieve[j] = false;
    }
    return out;
}

std::pair<Int, uint32_t> split_prime_power(const Int& q) {
    if (q < 2) throw std::invalid_argument("split_prime_power: q must be >= 2");
    Int p = q;
    // smallest prime factor by trial division (p <= 1e6 covers every base in scope),
    // falling back to q itself when q is prime
    for (uint32_t t : primes_upto(1'000'000)) {
        if (Int(t) * t > q) break;
        if (q % t == 0) {
            p = t;
            break;
        }
    }
    if (!is_probable_prime(p)) throw std::invalid_argument("split_prime_power: no small prime factor found");
    uint32_t k = 0;
    Int rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++k;
    }
    if (rest != 1) throw std::invalid_argument("split_prime_power: " + to_string(q) + " is not a prime power");
    return {p, k};
}

std::vector<uint32_t> divisors_of(uint32_t n) {
    std::vector<uint32_t> out;
    for (uint32_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        if (d != n / d) out.push_back(n / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

void FactorHints::add(const Int& value, std::vector<std::pair<Int, unsigned>> factors) {
    Int prod = 1;
    for (const auto& [p, e] : factors) {
        if (!is_probable_prime(p)) throw std::invalid_argument("factor hint for " + to_string(value) + ": " + to_string(p) + " is not prime");
        prod *= pow_int(p, e);
    }
    if (prod != value) throw std::invalid_argument("factor hint for " + to_string(value) + ": product mismatch");
    std::sort(factors.begin(), factors.end());
    table_[value] = std::move(factors);
}

const std::vector<std::pair<Int, unsigned>>* FactorHints::lookup(const Int& value) const {
    auto it = table_.find(value);
    return it == table_.end() ? nullptr : &it->second;
}

FactorHints FactorHints::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open factor hint file: " + path);
    FactorHints hints;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw std::runtime_error("malformed hint line: " + line);
        Int value(line.substr(0, eq));
        std::istringstream rest(line.substr(eq + 1));
        std::vector<std::pair<Int, unsigned>> factors;
        std::string tok;
        while (rest >> tok) {
            auto caret = tok.find('^');
            Int p(caret == std::string::npos ? tok : tok.substr(0, caret));
            unsigned e = caret == std::string::npos ? 1 : std::stoul(tok.substr(caret + 1));
            factors.emplace_back(p, e);
        }
        hints.add(value, std::move(factors));
    }
    return hints;
}

}  // namespace pnp::arith
