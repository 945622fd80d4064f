#include "pnpair/freeness.hpp"

#include <numeric>

namespace pnp {

FFElement module_action(const FqPoly& g, const FFElement& beta) {
    const FieldTower& t = *beta.tower;
    const ExtField& ext = t.fqn();
    ExtField::Elem acc = ext.zero();
    FFElement frob = beta;  // beta^{q^i}
    for (std::size_t i = 0; i < g.c.size(); ++i) {
        if (i > 0) frob = t.frobenius(frob, 1);
        if (!t.fq().is_zero(g.c[i])) acc = ext.add(acc, ext.scalar_mul(g.c[i], frob.v));
    }
    return {&t, acc};
}

FqPoly fq_order(const FFElement& beta) {
    const FieldTower& t = *beta.tower;
    const FqField& fq = t.fq();
    const auto& fact = t.xn1_factorization();
    FqPoly g = poly_xm_minus_1(fq, t.n());
    // strip irreducible factors in canonical order while the action stays zero;
    // minimality is unique, so the peeling order cannot change the result
    for (const auto& [h, mult] : fact.factors) {
        for (unsigned i = 0; i < mult; ++i) {
            FqPoly candidate = poly_div_exact(fq, g, h);
            if (module_action(candidate, beta).is_zero())
                g = candidate;
            else
                break;
        }
    }
    return g;
}

bool is_e_free(const FFElement& beta, const Int& e) {
    const FieldTower& t = *beta.tower;
    if (t.qn_minus_1() % e != 0) throw std::invalid_argument("is_e_free: e does not divide q^n - 1");
    if (beta.is_zero()) throw std::invalid_argument("is_e_free: zero element");
    Int idx = t.qn_minus_1() / t.mult_order(beta);
    return gcd_int(e, idx) == 1;
}

bool is_g_free(const FFElement& beta, const FqPoly& g) {
    const FieldTower& t = *beta.tower;
    const FqField& fq = t.fq();
    FqPoly xn1 = poly_xm_minus_1(fq, t.n());
    if (poly_is_zero(g) || !divides(fq, g, xn1)) throw std::invalid_argument("is_g_free: g does not divide x^n - 1");
    FqPoly quot = poly_div_exact(fq, xn1, fq_order(beta));
    if (degree(quot) == 0 || degree(g) == 0) return true;
    return degree(poly_gcd(fq, g, quot)) == 0;
}

bool is_primitive(const FFElement& beta) {
    if (beta.is_zero()) return false;
    return beta.tower->mult_order(beta) == beta.tower->qn_minus_1();
}

bool is_normal(const FFElement& beta) {
    const FieldTower& t = *beta.tower;
    return degree(fq_order(beta)) == static_cast<int>(t.n());
}

bool is_normal_matrix(const FFElement& beta) {
    const FieldTower& t = *beta.tower;
    const FqField& fq = t.fq();
    uint32_t n = t.n();
    std::vector<std::vector<FqElem>> rows;
    FFElement cur = beta;
    for (uint32_t i = 0; i < n; ++i) {
        rows.push_back(cur.v);
        cur = t.frobenius(cur, 1);
    }
    // Gaussian elimination over F_q
    uint32_t rank = 0;
    for (uint32_t col = 0; col < n && rank < n; ++col) {
        uint32_t piv = rank;
        while (piv < n && fq.is_zero(rows[piv][col])) ++piv;
        if (piv == n) continue;
        std::swap(rows[rank], rows[piv]);
        FqElem inv = fq.inv(rows[rank][col]);
        for (uint32_t j = 0; j < n; ++j) rows[rank][j] = fq.mul(inv, rows[rank][j]);
        for (uint32_t r = 0; r < n; ++r) {
            if (r == rank || fq.is_zero(rows[r][col])) continue;
            FqElem f = rows[r][col];
            for (uint32_t j = 0; j < n; ++j) rows[r][j] = fq.sub(rows[r][j], fq.mul(f, rows[rank][j]));
        }
        ++rank;
    }
    return rank == n;
}

FreenessProfile profile(const FFElement& beta) {
    FreenessProfile p{beta, 0, fq_order(beta), false, false};
    if (!beta.is_zero()) p.mult_order = beta.tower->mult_order(beta);
    p.is_primitive = !beta.is_zero() && p.mult_order == beta.tower->qn_minus_1();
    p.is_normal = degree(p.fq_order) == static_cast<int>(beta.tower->n());
    return p;
}

FreenessCensus::FreenessCensus(const FieldTower& t, uint64_t max_field_size) : t_(&t), gamma_(t.zero()) {
    Int qn = t.qn();
    if (qn > Int(max_field_size) || !fits_u64(qn))
        throw BudgetError("field size " + to_string(qn) + " exceeds enumeration budget " +
                          std::to_string(max_field_size));
    if (!t.order_factorization().complete)
        throw std::invalid_argument("census requires a complete factorization of q^n - 1");
    size_ = to_u64(qn);
    N_ = size_ - 1;
    zero_index_ = t.index_of(t.zero());

    for (const auto& [r, e] : t.order_factorization().factors) {
        primes_.push_back(r);
        primes_u64_.push_back(to_u64(r));
    }
    for (const auto& [h, mult] : t.xn1_factorization().factors) xn1_factors_.push_back(h);
    if (primes_.size() > 32 || xn1_factors_.size() > 32) throw std::logic_error("census mask overflow");

    // generator: the tower generator when primitive (so discrete logs match
    // the paper's b^i listings), otherwise the first primitive element
    gamma_ = t.gen();
    if (t.mult_order(gamma_) != t.qn_minus_1()) {
        bool found = false;
        for (uint64_t i = 0; i < size_ && !found; ++i) {
            FFElement cand = t.from_index(i);
            if (cand.is_zero()) continue;
            if (t.mult_order(cand) == t.qn_minus_1()) {
                gamma_ = cand;
                found = true;
            }
        }
        if (!found) throw std::logic_error("no primitive element found");
    }

    pow_.assign(N_, 0);
    log_.assign(size_, N_);
    {
        FFElement cur = t.one();
        for (uint64_t j = 0; j < N_; ++j) {
            uint64_t idx = t.index_of(cur);
            pow_[j] = idx;
            log_[idx] = j;
            cur = t.mul(cur, gamma_);
        }
    }

    // multiplicative defects: primes of q^n - 1 dividing gcd(j, q^n - 1)
    mult_defect_.assign(size_, 0);
    mult_defect_[zero_index_] = 0xffffffffu;
    for (uint64_t j = 0; j < N_; ++j) {
        uint64_t g = std::gcd(j, N_);
        uint32_t mask = 0;
        for (std::size_t b = 0; b < primes_u64_.size(); ++b)
            if (g % primes_u64_[b] == 0) mask |= 1u << b;
        mult_defect_[pow_[j]] = mask;
    }

    // additive defects: factors u of x^n - 1 with ((x^n - 1)/u) o beta = 0
    const FqField& fq = t.fq();
    const ExtField& ext = t.fqn();
    uint32_t n = t.n();
    std::vector<FqPoly> cofactors;
    for (const auto& u : xn1_factors_) cofactors.push_back(poly_div_exact(fq, poly_xm_minus_1(fq, n), u));

    std::vector<uint64_t> q_pow_mod(n, 0);  // q^i mod N (N > 0)
    {
        Int q = t.q();
        Int Nz = t.qn_minus_1();
        Int cur = 1;
        for (uint32_t i = 0; i < n; ++i) {
            q_pow_mod[i] = to_u64(cur % Nz);
            cur = cur * q;
        }
    }

    add_defect_.assign(size_, 0);
    add_defect_[zero_index_] = (1u << xn1_factors_.size()) - 1;  // every action kills 0
    std::vector<ExtField::Elem> frob(n);
    for (uint64_t j = 0; j < N_; ++j) {
        for (uint32_t i = 0; i < n; ++i) {
            uint64_t jj = N_ == 1 ? 0 : static_cast<uint64_t>((static_cast<unsigned __int128>(j) * q_pow_mod[i]) % N_);
            frob[i] = ext.dec(pow_[jj]);
        }
        uint32_t mask = 0;
        for (std::size_t b = 0; b < cofactors.size(); ++b) {
            ExtField::Elem acc = ext.zero();
            const auto& co = cofactors[b];
            for (std::size_t i = 0; i < co.c.size(); ++i) {
                if (fq.is_zero(co.c[i])) continue;
                acc = ext.add(acc, ext.scalar_mul(co.c[i], frob[i % n]));
            }
            if (ext.is_zero(acc)) mask |= 1u << b;
        }
        add_defect_[pow_[j]] = mask;
    }

    for (uint64_t i = 0; i < size_; ++i)
        if (pn_at(i)) pn_indices_.push_back(i);
}

uint32_t FreenessCensus::prime_mask(const Int& d) const {
    if (t_->qn_minus_1() % d != 0) throw std::invalid_argument("prime_mask: not a divisor of q^n - 1");
    uint32_t mask = 0;
    for (std::size_t b = 0; b < primes_.size(); ++b)
        if (d % primes_[b] == 0) mask |= 1u << b;
    return mask;
}

uint32_t FreenessCensus::factor_mask(const FqPoly& h) const {
    const FqField& fq = t_->fq();
    if (poly_is_zero(h) || !divides(fq, h, poly_xm_minus_1(fq, t_->n())))
        throw std::invalid_argument("factor_mask: not a divisor of x^n - 1");
    uint32_t mask = 0;
    for (std::size_t b = 0; b < xn1_factors_.size(); ++b)
        if (divides(fq, xn1_factors_[b], h)) mask |= 1u << b;
    return mask;
}

}  // namespace pnp
