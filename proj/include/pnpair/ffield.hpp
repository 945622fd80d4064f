#ifndef PNPAIR_FFIELD_HPP
#define PNPAIR_FFIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "pnpair/arith.hpp"
#include "pnpair/bigint.hpp"

namespace pnp {

/// Element of F_q = F_p[a]/(base_modulus): coefficients of a^j, low degree
/// first, always of length k and reduced mod p.
using FqElem = std::vector<uint32_t>;

/// Runtime handle for F_q = F_p[a]/(base). Dense schoolbook arithmetic; field
/// sizes in scope never justify anything fancier.
class FqField {
public:
    using Elem = FqElem;

    FqField(uint32_t p, std::vector<uint32_t> modulus);

    uint32_t p() const { return p_; }
    uint32_t k() const { return k_; }
    const std::vector<uint32_t>& modulus() const { return modulus_; }
    const Int& size() const { return q_; }
    uint64_t size_u64() const;

    Elem zero() const { return Elem(k_, 0); }
    Elem one() const { return from_uint(1); }
    Elem from_uint(uint64_t c) const;
    Elem gen() const;  // the class of a (root of the base modulus)

    bool is_zero(const Elem& x) const;
    bool eq(const Elem& x, const Elem& y) const { return x == y; }

    Elem add(const Elem& x, const Elem& y) const;
    Elem sub(const Elem& x, const Elem& y) const;
    Elem neg(const Elem& x) const;
    Elem mul(const Elem& x, const Elem& y) const;
    Elem inv(const Elem& x) const;
    Elem pow(Elem base, Int e) const;  // negative e via inverse
    Elem pth_root(const Elem& x) const;

    /// Lexicographic index over coefficient vectors (c_0 compared first).
    uint64_t enc(const Elem& x) const;
    Elem dec(uint64_t idx) const;

    Elem random(std::mt19937_64& rng) const;

private:
    uint32_t p_, k_;
    std::vector<uint32_t> modulus_;  // length k+1, monic
    Int q_;
};

/// F_{q^n} = F_q[b]/(ext_modulus); elements are length-n vectors over F_q.
class ExtField {
public:
    using Elem = std::vector<FqElem>;

    ExtField(const FqField* base, std::vector<FqElem> modulus);

    const FqField& base() const { return *base_; }
    uint32_t n() const { return n_; }
    const std::vector<FqElem>& modulus() const { return modulus_; }
    const Int& size() const { return qn_; }
    uint32_t p() const { return base_->p(); }

    Elem zero() const { return Elem(n_, base_->zero()); }
    Elem one() const;
    Elem from_uint(uint64_t c) const;
    Elem embed(const FqElem& c) const;
    Elem gen() const;  // the class of b (root of the ext modulus)

    bool is_zero(const Elem& x) const;
    bool eq(const Elem& x, const Elem& y) const { return x == y; }

    Elem add(const Elem& x, const Elem& y) const;
    Elem sub(const Elem& x, const Elem& y) const;
    Elem neg(const Elem& x) const;
    Elem mul(const Elem& x, const Elem& y) const;
    Elem scalar_mul(const FqElem& c, const Elem& x) const;
    Elem inv(const Elem& x) const;
    Elem pow(Elem base, Int e) const;
    Elem pth_root(const Elem& x) const;

    uint64_t enc(const Elem& x) const;
    Elem dec(uint64_t idx) const;

    Elem random(std::mt19937_64& rng) const;

private:
    const FqField* base_;
    uint32_t n_;
    std::vector<FqElem> modulus_;  // length n+1, monic over F_q
    Int qn_;
};

class FieldTower;

/// Element of F_{q^n} bound to its tower; cross-tower arithmetic is rejected.
struct FFElement {
    const FieldTower* tower = nullptr;
    ExtField::Elem v;

    bool is_zero() const;
    bool operator==(const FFElement& o) const { return tower == o.tower && v == o.v; }
    bool operator!=(const FFElement& o) const { return !(*this == o); }
    FFElement operator+(const FFElement& o) const;
    FFElement operator-(const FFElement& o) const;
    FFElement operator*(const FFElement& o) const;
    FFElement operator/(const FFElement& o) const;
    FFElement operator-() const;
};

// forward declarations; definitions live in fpoly.hpp
template <class F>
struct Poly;
template <class F>
struct PolyFactorization;

/// The pair (F_q, F_{q^n}) with q = p^k: both moduli, the factorization of
/// q^n - 1, and the factorization of x^n - 1 over F_q.
class FieldTower {
public:
    /// Verifies the supplied moduli (or searches for defaults: the
    /// lexicographically smallest monic irreducible of the right degree whose
    /// root is primitive, coefficients compared low-degree-first).
    static std::unique_ptr<FieldTower> build(uint32_t p, uint32_t k, uint32_t n,
                                             std::optional<std::vector<uint32_t>> base_modulus = std::nullopt,
                                             std::optional<std::vector<FqElem>> ext_modulus = std::nullopt,
                                             const arith::FactorBudget& budget = {},
                                             const arith::FactorHints* hints = nullptr);

    FieldTower(const FieldTower&) = delete;
    FieldTower& operator=(const FieldTower&) = delete;

    uint32_t p() const { return p_; }
    uint32_t k() const { return k_; }
    uint32_t n() const { return n_; }
    const FqField& fq() const { return *fq_; }
    const ExtField& fqn() const { return *fqn_; }
    const Int& q() const { return fq_->size(); }
    const Int& qn() const { return fqn_->size(); }
    const Int& qn_minus_1() const { return qn1_; }
    const arith::Factorization& order_factorization() const { return order_fact_; }
    const PolyFactorization<FqField>& xn1_factorization() const { return *xn1_fact_; }

    FFElement zero() const { return {this, fqn_->zero()}; }
    FFElement one() const { return {this, fqn_->one()}; }
    FFElement gen() const { return {this, fqn_->gen()}; }
    FFElement make(ExtField::Elem v) const { return {this, std::move(v)}; }
    FFElement from_index(uint64_t idx) const { return {this, fqn_->dec(idx)}; }
    uint64_t index_of(const FFElement& x) const;

    uint64_t element_count_u64() const;  // throws when q^n does not fit

    FFElement mul(const FFElement& x, const FFElement& y) const;
    FFElement add(const FFElement& x, const FFElement& y) const;
    FFElement sub(const FFElement& x, const FFElement& y) const;
    FFElement inv(const FFElement& x) const;
    FFElement pow(const FFElement& x, const Int& e) const;
    /// x^(q^i), computed by square-and-multiply on q
    FFElement frobenius(const FFElement& x, uint32_t i) const;

    /// Exact multiplicative order via divisor descent over q^n - 1.
    Int mult_order(const FFElement& x) const;

    ~FieldTower();

private:
    FieldTower() = default;
    void check_same(const FFElement& x, const FFElement& y) const;
    void check_mine(const FFElement& x) const;

    uint32_t p_ = 0, k_ = 0, n_ = 0;
    std::unique_ptr<FqField> fq_;
    std::unique_ptr<ExtField> fqn_;
    Int qn1_;
    arith::Factorization order_fact_;
    std::unique_ptr<PolyFactorization<FqField>> xn1_fact_;
};

/// Visits every element exactly once, in lexicographic order on coefficient
/// vectors (c_0 compared first; F_q coefficients by their own lex index).
template <class Fn>
void for_each_element(const FieldTower& t, Fn&& fn) {
    uint64_t total = t.element_count_u64();
    for (uint64_t i = 0; i < total; ++i) fn(t.from_index(i));
}

template <class Fn>
void for_each_unit(const FieldTower& t, Fn&& fn) {
    for_each_element(t, [&](const FFElement& e) {
        if (!e.is_zero()) fn(e);
    });
}

std::vector<FFElement> iterate_elements(const FieldTower& t);
std::vector<FFElement> iterate_units(const FieldTower& t);

}  // namespace pnp

#endif
