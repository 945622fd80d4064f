#ifndef PNPAIR_FREENESS_HPP
#define PNPAIR_FREENESS_HPP

#include <cstdint>
#include <vector>

#include "pnpair/ffield.hpp"
#include "pnpair/fpoly.hpp"

namespace pnp {

/// budget refusals carry the size that would have been needed
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// g o beta = sum a_i beta^{q^i} for g = sum a_i x^i over F_q
FFElement module_action(const FqPoly& g, const FFElement& beta);

/// least-degree monic divisor g of x^n - 1 with g o beta = 0, found by
/// peeling irreducible factors of x^n - 1 in canonical order
FqPoly fq_order(const FFElement& beta);

/// true iff gcd(e, (q^n - 1) / mult_order(beta)) = 1
bool is_e_free(const FFElement& beta, const Int& e);

/// true iff gcd(g, (x^n - 1) / fq_order(beta)) = 1 over F_q[x]
bool is_g_free(const FFElement& beta, const FqPoly& g);

bool is_primitive(const FFElement& beta);
bool is_normal(const FFElement& beta);

/// independent normality criterion: the n x n matrix of coordinates of
/// beta, beta^q, ..., beta^{q^{n-1}} over F_q is nonsingular
bool is_normal_matrix(const FFElement& beta);

struct FreenessProfile {
    FFElement element;
    Int mult_order;   // 0 for the zero element
    FqPoly fq_order;
    bool is_primitive;
    bool is_normal;
};

FreenessProfile profile(const FFElement& beta);

/// Per-tower element table for brute-force work: elements indexed as powers
/// of a fixed generator, with per-element defect masks against the primes of
/// q^n - 1 and the distinct irreducible factors of x^n - 1. Built once,
/// read-only afterwards.
class FreenessCensus {
public:
    /// throws BudgetError when q^n exceeds max_field_size
    FreenessCensus(const FieldTower& t, uint64_t max_field_size = 1ull << 20);

    const FieldTower& tower() const { return *t_; }
    uint64_t field_size() const { return size_; }
    uint64_t unit_count() const { return N_; }

    const FFElement& generator() const { return gamma_; }
    uint64_t log_of_index(uint64_t elem_index) const { return log_[elem_index]; }  // N_ for zero
    uint64_t index_of_log(uint64_t j) const { return pow_[j % N_]; }

    bool primitive_at(uint64_t elem_index) const { return mult_defect_[elem_index] == 0 && elem_index != zero_index_; }
    bool normal_at(uint64_t elem_index) const { return add_defect_[elem_index] == 0; }
    bool pn_at(uint64_t elem_index) const { return primitive_at(elem_index) && normal_at(elem_index); }

    /// bitmask of census primes dividing d (d must divide q^n - 1)
    uint32_t prime_mask(const Int& d) const;
    /// bitmask of distinct irreducible factors of x^n - 1 dividing h (h | x^n - 1 required)
    uint32_t factor_mask(const FqPoly& h) const;

    bool e_free_at(uint64_t elem_index, uint32_t mask) const {
        return elem_index != zero_index_ && (mult_defect_[elem_index] & mask) == 0;
    }
    bool g_free_at(uint64_t elem_index, uint32_t mask) const { return (add_defect_[elem_index] & mask) == 0; }

    uint64_t zero_index() const { return zero_index_; }
    const std::vector<uint64_t>& pn_indices() const { return pn_indices_; }

    const std::vector<Int>& primes() const { return primes_; }
    const std::vector<FqPoly>& xn1_distinct_factors() const { return xn1_factors_; }

private:
    const FieldTower* t_;
    uint64_t size_, N_, zero_index_;
    FFElement gamma_;
    std::vector<uint64_t> pow_;   // j -> element index of gamma^j
    std::vector<uint64_t> log_;   // element index -> j (N_ for zero)
    std::vector<uint32_t> mult_defect_, add_defect_;
    std::vector<Int> primes_;
    std::vector<uint64_t> primes_u64_;
    std::vector<FqPoly> xn1_factors_;
    std::vector<uint64_t> pn_indices_;
};

}  // namespace pnp

#endif
