#ifndef PNPAIR_RATFUNC_HPP
#define PNPAIR_RATFUNC_HPP

#include <memory>
#include <optional>
#include <string>

#include "pnpair/ffield.hpp"
#include "pnpair/fpoly.hpp"

namespace pnp {

/// f1/f2 over F_{q^n} in simplest form: gcd(f1, f2) = 1, f2 monic (its
/// leading coefficient is moved into f1 on normalization).
struct RationalFunction {
    const FieldTower* tower = nullptr;
    FqnPoly num, den;

    int m1() const { return degree(num); }
    int m2() const { return degree(den); }
    bool operator==(const RationalFunction& o) const {
        return tower == o.tower && poly_eq(num, o.num) && poly_eq(den, o.den);
    }

    // lazily filled factorization caches (fill happens on first membership test;
    // call membership_R before sharing one object across threads)
    mutable std::shared_ptr<const PolyFactorization<ExtField>> num_fact, den_fact;
};

RationalFunction make_ratfunc(const FieldTower& t, FqnPoly f1, FqnPoly f2);

/// f1(alpha)/f2(alpha); nullopt marks a pole. A pole is a value, not an error.
std::optional<FFElement> eval_at(const RationalFunction& f, const FFElement& alpha);

const PolyFactorization<ExtField>& num_factorization(const RationalFunction& f);
const PolyFactorization<ExtField>& den_factorization(const RationalFunction& f);

struct MembershipVerdict {
    enum class Failed { none, cond_i, cond_ii };
    bool member = false;
    Failed failed = Failed::none;
    /// cond_i witness: the prime d dividing every signed multiplicity
    Int witness_prime;
    /// signed multiplicities of the distinct non-x irreducible factors of
    /// f1*f2 (positive from f1, negative from f2), canonical factor order
    std::vector<std::pair<FqnPoly, int>> exponents;
    int x_exponent = 0;
    std::string note;
};

/// Definition of R_{q^n}(m1, m2): condition (i) fails iff some prime divisor
/// d of q^n - 1 divides every entry of the signed multiplicity vector (an
/// empty vector means f = c x^j, which fails for any prime); condition (ii)
/// fails iff m2 = 0 or q^n divides the multiplicity of every irreducible
/// factor of f2.
MembershipVerdict membership_R(const RationalFunction& f);

/// Candidate shells for R_{q^n}(2, 2): numerator u x^2 + c1 x + c0 with u a
/// unit, denominator monic x^2 + d1 x + d0, lexicographic on
/// (u, c1, c0, d1, d0) under the element order of iterate_elements.
/// Shells with gcd(f1, f2) != 1 or failing membership are skipped.
class R22Stream {
public:
    explicit R22Stream(const FieldTower& t, uint64_t start_shell = 0);

    /// next member of R_{q^n}(2,2), or nullopt when the space is exhausted
    std::optional<RationalFunction> next();
    /// index of the next shell to be examined (resume point)
    uint64_t shell_index() const { return shell_; }
    uint64_t total_shells() const { return total_; }

    /// decode one shell; returns the member rational function or nullopt
    /// when the shell is reducible or fails membership
    static std::optional<RationalFunction> try_shell(const FieldTower& t, uint64_t shell);
    static uint64_t shell_count(const FieldTower& t);

private:
    const FieldTower* t_;
    uint64_t shell_, total_;
};

std::string failed_condition_name(MembershipVerdict::Failed f);

}  // namespace pnp

#endif
