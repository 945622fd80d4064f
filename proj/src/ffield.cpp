#include "pnpair/ffield.hpp"

#include <sstream>

#include "pnpair/fpoly.hpp"

namespace pnp {

namespace {

// extended-Euclid inverse of a modulo m, both coefficient vectors over a
// scalar domain S providing add/sub/mul/inv/is_zero/zero/one
template <class S>
std::vector<typename S::Elem> euclid_inverse(const S& K, std::vector<typename S::Elem> a,
                                             std::vector<typename S::Elem> m) {
    using Vec = std::vector<typename S::Elem>;
    auto trim = [&](Vec& v) {
        while (!v.empty() && K.is_zero(v.back())) v.pop_back();
    };
    auto divstep = [&](Vec num, const Vec& den) {
        // returns (quot, rem)
        Vec quot;
        if (num.size() >= den.size()) quot.assign(num.size() - den.size() + 1, K.zero());
        auto lead_inv = K.inv(den.back());
        while (num.size() >= den.size() && !num.empty()) {
            std::size_t shift = num.size() - den.size();
            auto c = K.mul(num.back(), lead_inv);
            quot[shift] = c;
            for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] = K.sub(num[shift + i], K.mul(c, den[i]));
            trim(num);
        }
        trim(quot);
        return std::make_pair(quot, num);
    };
    trim(a);
    if (a.empty()) throw std::domain_error("division by zero in finite field");
    Vec r0 = m, r1 = a;
    Vec t0, t1{K.one()};
    while (!r1.empty()) {
        auto [q, r2] = divstep(r0, r1);
        // t2 = t0 - q * t1
        Vec qt(q.size() + t1.size() == 0 ? 0 : q.size() + (t1.empty() ? 1 : t1.size()) - 1, K.zero());
        if (!q.empty() && !t1.empty()) {
            qt.assign(q.size() + t1.size() - 1, K.zero());
            for (std::size_t i = 0; i < q.size(); ++i)
                for (std::size_t j = 0; j < t1.size(); ++j) qt[i + j] = K.add(qt[i + j], K.mul(q[i], t1[j]));
        } else {
            qt.clear();
        }
        Vec t2(std::max(t0.size(), qt.size()), K.zero());
        for (std::size_t i = 0; i < t2.size(); ++i) {
            auto x = i < t0.size() ? t0[i] : K.zero();
            auto y = i < qt.size() ? qt[i] : K.zero();
            t2[i] = K.sub(x, y);
        }
        trim(t2);
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.size() != 1) throw std::domain_error("inverse does not exist: modulus not irreducible");
    auto scale = K.inv(r0[0]);
    for (auto& c : t0) c = K.mul(scale, c);
    return t0;
}

// scalar ops over F_p for euclid_inverse at the bottom level
struct PrimeOps {
    using Elem = uint32_t;
    uint32_t p;
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(Elem x) const { return x == 0; }
    Elem add(Elem x, Elem y) const { return (x + static_cast<uint64_t>(y)) % p; }
    Elem sub(Elem x, Elem y) const { return (x + static_cast<uint64_t>(p) - y) % p; }
    Elem mul(Elem x, Elem y) const { return static_cast<uint64_t>(x) * y % p; }
    Elem inv(Elem x) const {
        if (x == 0) throw std::domain_error("division by zero in F_p");
        int64_t t = 0, newt = 1, r = p, newr = x;
        while (newr != 0) {
            int64_t q = r / newr;
            std::swap(t -= q * newt, newt);
            std::swap(r -= q * newr, newr);
        }
        return static_cast<Elem>(t < 0 ? t + p : t);
    }
};

}  // namespace

// ---------------------------------------------------------------- FqField --

FqField::FqField(uint32_t p, std::vector<uint32_t> modulus) : p_(p), modulus_(std::move(modulus)) {
    if (modulus_.size() < 2) throw std::invalid_argument("FqField: modulus must have degree >= 1");
    k_ = static_cast<uint32_t>(modulus_.size()) - 1;
    if (modulus_.back() != 1) throw std::invalid_argument("FqField: modulus must be monic");
    for (auto c : modulus_)
        if (c >= p_) throw std::invalid_argument("FqField: modulus coefficient out of range");
    q_ = pow_int(Int(p_), k_);
}

uint64_t FqField::size_u64() const { return to_u64(q_); }

FqElem FqField::from_uint(uint64_t c) const {
    FqElem e(k_, 0);
    e[0] = static_cast<uint32_t>(c % p_);
    return e;
}

FqElem FqField::gen() const {
    if (k_ == 1) {
        // root of the linear modulus x + c0 is -c0
        FqElem e(1, 0);
        e[0] = (p_ - modulus_[0]) % p_;
        return e;
    }
    FqElem e(k_, 0);
    e[1] = 1;
    return e;
}

bool FqField::is_zero(const Elem& x) const {
    for (auto c : x)
        if (c != 0) return false;
    return true;
}

FqElem FqField::add(const Elem& x, const Elem& y) const {
    FqElem r(k_);
    for (uint32_t i = 0; i < k_; ++i) r[i] = (x[i] + static_cast<uint64_t>(y[i])) % p_;
    return r;
}

FqElem FqField::sub(const Elem& x, const Elem& y) const {
    FqElem r(k_);
    for (uint32_t i = 0; i < k_; ++i) r[i] = (x[i] + static_cast<uint64_t>(p_) - y[i]) % p_;
    return r;
}

FqElem FqField::neg(const Elem& x) const {
    FqElem r(k_);
    for (uint32_t i = 0; i < k_; ++i) r[i] = (p_ - x[i]) % p_;
    return r;
}

FqElem FqField::mul(const Elem& x, const Elem& y) const {
    if (k_ == 1) return {static_cast<uint32_t>(static_cast<uint64_t>(x[0]) * y[0] % p_)};
    std::vector<uint64_t> prod(2 * k_ - 1, 0);
    for (uint32_t i = 0; i < k_; ++i) {
        if (x[i] == 0) continue;
        for (uint32_t j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + static_cast<uint64_t>(x[i]) * y[j]) % p_;
    }
    for (int d = 2 * k_ - 2; d >= static_cast<int>(k_); --d) {
        uint64_t c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (uint32_t j = 0; j < k_; ++j)
            prod[d - k_ + j] = (prod[d - k_ + j] + c * (p_ - modulus_[j])) % p_;
    }
    FqElem r(k_);
    for (uint32_t i = 0; i < k_; ++i) r[i] = static_cast<uint32_t>(prod[i]);
    return r;
}

FqElem FqField::inv(const Elem& x) const {
    if (is_zero(x)) throw std::domain_error("FqField: inverse of zero");
    if (k_ == 1) return {PrimeOps{p_}.inv(x[0])};
    PrimeOps ops{p_};
    std::vector<uint32_t> a(x.begin(), x.end());
    std::vector<uint32_t> m(modulus_.begin(), modulus_.end());
    auto t = euclid_inverse(ops, a, m);
    t.resize(k_, 0);
    return FqElem(t.begin(), t.end());
}

FqElem FqField::pow(Elem base, Int e) const {
    if (e < 0) {
        base = inv(base);
        e = -e;
    }
    FqElem r = one();
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = mul(r, base);
        e >>= 1;
        if (e > 0) base = mul(base, base);
    }
    return r;
}

FqElem FqField::pth_root(const Elem& x) const { return pow(x, q_ / p_); }

uint64_t FqField::enc(const Elem& x) const {
    uint64_t idx = 0;
    for (uint32_t i = 0; i < k_; ++i) idx = idx * p_ + x[i];
    return idx;
}

FqElem FqField::dec(uint64_t idx) const {
    FqElem e(k_);
    for (int i = k_ - 1; i >= 0; --i) {
        e[i] = static_cast<uint32_t>(idx % p_);
        idx /= p_;
    }
    return e;
}

FqElem FqField::random(std::mt19937_64& rng) const {
    FqElem e(k_);
    for (auto& c : e) c = static_cast<uint32_t>(rng() % p_);
    return e;
}

// --------------------------------------------------------------- ExtField --

ExtField::ExtField(const FqField* base, std::vector<FqElem> modulus) : base_(base), modulus_(std::move(modulus)) {
    if (modulus_.size() < 2) throw std::invalid_argument("ExtField: modulus must have degree >= 1");
    n_ = static_cast<uint32_t>(modulus_.size()) - 1;
    if (!base_->eq(modulus_.back(), base_->one())) throw std::invalid_argument("ExtField: modulus must be monic");
    qn_ = pow_int(base_->size(), n_);
}

ExtField::Elem ExtField::one() const {
    Elem e = zero();
    e[0] = base_->one();
    return e;
}

ExtField::Elem ExtField::from_uint(uint64_t c) const { return embed(base_->from_uint(c)); }

ExtField::Elem ExtField::embed(const FqElem& c) const {
    Elem e = zero();
    e[0] = c;
    return e;
}

ExtField::Elem ExtField::gen() const {
    if (n_ == 1) return {base_->neg(modulus_[0])};
    Elem e = zero();
    e[1] = base_->one();
    return e;
}

bool ExtField::is_zero(const Elem& x) const {
    for (const auto& c : x)
        if (!base_->is_zero(c)) return false;
    return true;
}

ExtField::Elem ExtField::add(const Elem& x, const Elem& y) const {
    Elem r(n_);
    for (uint32_t i = 0; i < n_; ++i) r[i] = base_->add(x[i], y[i]);
    return r;
}

ExtField::Elem ExtField::sub(const Elem& x, const Elem& y) const {
    Elem r(n_);
    for (uint32_t i = 0; i < n_; ++i) r[i] = base_->sub(x[i], y[i]);
    return r;
}

ExtField::Elem ExtField::neg(const Elem& x) const {
    Elem r(n_);
    for (uint32_t i = 0; i < n_; ++i) r[i] = base_->neg(x[i]);
    return r;
}

ExtField::Elem ExtField::mul(const Elem& x, const Elem& y) const {
    if (n_ == 1) return {base_->mul(x[0], y[0])};
    std::vector<FqElem> prod(2 * n_ - 1, base_->zero());
    for (uint32_t i = 0; i < n_; ++i) {
        if (base_->is_zero(x[i])) continue;
        for (uint32_t j = 0; j < n_; ++j) prod[i + j] = base_->add(prod[i + j], base_->mul(x[i], y[j]));
    }
    for (int d = 2 * n_ - 2; d >= static_cast<int>(n_); --d) {
        if (base_->is_zero(prod[d])) continue;
        FqElem c = prod[d];
        prod[d] = base_->zero();
        for (uint32_t j = 0; j < n_; ++j) prod[d - n_ + j] = base_->sub(prod[d - n_ + j], base_->mul(c, modulus_[j]));
    }
    prod.resize(n_);
    return prod;
}

ExtField::Elem ExtField::scalar_mul(const FqElem& c, const Elem& x) const {
    Elem r(n_);
    for (uint32_t i = 0; i < n_; ++i) r[i] = base_->mul(c, x[i]);
    return r;
}

ExtField::Elem ExtField::inv(const Elem& x) const {
    if (is_zero(x)) throw std::domain_error("ExtField: inverse of zero");
    if (n_ == 1) return {base_->inv(x[0])};
    auto t = euclid_inverse(*base_, x, modulus_);
    t.resize(n_, base_->zero());
    return t;
}

ExtField::Elem ExtField::pow(Elem base, Int e) const {
    if (e < 0) {
        base = inv(base);
        e = -e;
    }
    Elem r = one();
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = mul(r, base);
        e >>= 1;
        if (e > 0) base = mul(base, base);
    }
    return r;
}

ExtField::Elem ExtField::pth_root(const Elem& x) const { return pow(x, qn_ / p()); }

uint64_t ExtField::enc(const Elem& x) const {
    uint64_t q = base_->size_u64();
    uint64_t idx = 0;
    for (uint32_t i = 0; i < n_; ++i) idx = idx * q + base_->enc(x[i]);
    return idx;
}

ExtField::Elem ExtField::dec(uint64_t idx) const {
    uint64_t q = base_->size_u64();
    Elem e(n_);
    for (int i = n_ - 1; i >= 0; --i) {
        e[i] = base_->dec(idx % q);
        idx /= q;
    }
    return e;
}

ExtField::Elem ExtField::random(std::mt19937_64& rng) const {
    Elem e(n_);
    for (auto& c : e) c = base_->random(rng);
    return e;
}

// -------------------------------------------------------------- FFElement --

bool FFElement::is_zero() const { return tower->fqn().is_zero(v); }
FFElement FFElement::operator+(const FFElement& o) const { return tower->add(*this, o); }
FFElement FFElement::operator-(const FFElement& o) const { return tower->sub(*this, o); }
FFElement FFElement::operator*(const FFElement& o) const { return tower->mul(*this, o); }
FFElement FFElement::operator/(const FFElement& o) const { return tower->mul(*this, tower->inv(o)); }
FFElement FFElement::operator-() const { return {tower, tower->fqn().neg(v)}; }

// ------------------------------------------------------------- FieldTower --

FieldTower::~FieldTower() = default;

void FieldTower::check_mine(const FFElement& x) const {
    if (x.tower != this) throw std::invalid_argument("FFElement belongs to a different tower");
}

void FieldTower::check_same(const FFElement& x, const FFElement& y) const {
    check_mine(x);
    if (y.tower != this) throw std::invalid_argument("cross-tower operands rejected");
}

uint64_t FieldTower::index_of(const FFElement& x) const {
    check_mine(x);
    return fqn_->enc(x.v);
}

uint64_t FieldTower::element_count_u64() const { return to_u64(qn()); }

FFElement FieldTower::mul(const FFElement& x, const FFElement& y) const {
    check_same(x, y);
    return {this, fqn_->mul(x.v, y.v)};
}

FFElement FieldTower::add(const FFElement& x, const FFElement& y) const {
    check_same(x, y);
    return {this, fqn_->add(x.v, y.v)};
}

FFElement FieldTower::sub(const FFElement& x, const FFElement& y) const {
    check_same(x, y);
    return {this, fqn_->sub(x.v, y.v)};
}

FFElement FieldTower::inv(const FFElement& x) const {
    check_mine(x);
    return {this, fqn_->inv(x.v)};
}

FFElement FieldTower::pow(const FFElement& x, const Int& e) const {
    check_mine(x);
    return {this, fqn_->pow(x.v, e)};
}

FFElement FieldTower::frobenius(const FFElement& x, uint32_t i) const {
    check_mine(x);
    ExtField::Elem r = x.v;
    for (uint32_t j = 0; j < i; ++j) r = fqn_->pow(r, q());
    return {this, r};
}

Int FieldTower::mult_order(const FFElement& x) const {
    check_mine(x);
    if (x.is_zero()) throw std::invalid_argument("mult_order: zero element");
    if (!order_fact_.complete) throw std::invalid_argument("mult_order: order factorization incomplete");
    Int o = qn1_;
    for (const auto& [r, e] : order_fact_.factors) {
        for (unsigned i = 0; i < e; ++i) {
            if (o % r != 0) break;
            if (!fqn_->eq(fqn_->pow(x.v, o / r), fqn_->one())) break;
            o /= r;
        }
    }
    return o;
}

namespace {

// F_p viewed through the FqField interface, for checking base moduli
FqField prime_view(uint32_t p) { return FqField(p, {0, 1}); }

FqPoly lift_to_poly(const FqField& K, const std::vector<FqElem>& coeffs) {
    FqPoly f;
    f.c = coeffs;
    trim(K, f);
    return f;
}

bool root_is_primitive(const ExtField& ext, const arith::Factorization& nf) {
    auto root = ext.gen();
    if (ext.is_zero(root)) return false;
    const Int& N = nf.value;
    if (!ext.eq(ext.pow(root, N), ext.one())) return false;
    for (const auto& [r, e] : nf.factors)
        if (ext.eq(ext.pow(root, N / r), ext.one())) return false;
    return true;
}

std::string poly_text_fp(const std::vector<uint32_t>& coeffs);

// lexicographically smallest monic irreducible of degree k over F_p whose
// root is primitive; the enumeration index carries c_0 as the most
// significant digit, so ascending index is ascending low-degree-first order
std::vector<uint32_t> default_base_modulus(uint32_t p, uint32_t k, const arith::Factorization& q_minus_1_fact) {
    FqField fp = prime_view(p);
    Int total = pow_int(Int(p), k);
    // c_0 is the most significant enumeration digit; the whole c_0 = 0 block
    // is divisible by x (or has the non-primitive root 0 when k = 1)
    for (Int idx = pow_int(Int(p), k - 1); idx < total; ++idx) {
        std::vector<uint32_t> cand(k + 1, 0);
        Int rest = idx;
        for (int i = k - 1; i >= 0; --i) {
            cand[i] = static_cast<uint32_t>(mpz_fdiv_ui(rest.get_mpz_t(), p));
            rest /= p;
        }
        cand[k] = 1;
        FqPoly f = lift_to_poly(fp, [&] {
            std::vector<FqElem> cs;
            for (auto c : cand) cs.push_back(FqElem{c});
            return cs;
        }());
        if (!is_irreducible(fp, f)) continue;
        FqField candidate_field(p, cand);
        // view F_q as a degree-1 extension of itself so the generic order
        // check applies to the root a of the candidate modulus
        ExtField root_field(&candidate_field,
                            {candidate_field.neg(candidate_field.gen()), candidate_field.one()});
        if (root_is_primitive(root_field, q_minus_1_fact)) return cand;
    }
    throw std::logic_error("no primitive base modulus found");
}

std::vector<FqElem> default_ext_modulus(const FqField& fq, uint32_t n, const arith::Factorization& order_fact) {
    uint64_t q = fq.size_u64();
    Int total = pow_int(fq.size(), n);
    for (Int idx = pow_int(fq.size(), n - 1); idx < total; ++idx) {
        std::vector<FqElem> cand(n + 1, fq.zero());
        Int rest = idx;
        for (int i = n - 1; i >= 0; --i) {
            cand[i] = fq.dec(mpz_fdiv_ui(rest.get_mpz_t(), q));
            rest /= q;
        }
        cand[n] = fq.one();
        Poly<FqField> f;
        f.c = cand;
        trim(fq, f);
        if (!is_irreducible(fq, f)) continue;
        ExtField ext(&fq, cand);
        if (root_is_primitive(ext, order_fact)) return cand;
    }
    throw std::logic_error("no primitive extension modulus found");
}

std::string poly_text_fp(const std::vector<uint32_t>& coeffs) {
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
        if (coeffs[i] == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0 || coeffs[i] != 1) os << coeffs[i];
        if (i > 0) {
            if (coeffs[i] != 1) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace

std::unique_ptr<FieldTower> FieldTower::build(uint32_t p, uint32_t k, uint32_t n,
                                              std::optional<std::vector<uint32_t>> base_modulus,
                                              std::optional<std::vector<FqElem>> ext_modulus,
                                              const arith::FactorBudget& budget, const arith::FactorHints* hints) {
    if (!arith::is_probable_prime(Int(p))) throw std::invalid_argument("build_tower: p = " + std::to_string(p) + " is not prime");
    if (k == 0 || n == 0) throw std::invalid_argument("build_tower: k and n must be positive");
    if (p >= (1u << 31)) throw std::invalid_argument("build_tower: p too large");

    std::unique_ptr<FieldTower> t(new FieldTower());
    t->p_ = p;
    t->k_ = k;
    t->n_ = n;

    arith::Factorization q1_fact = arith::factor_q_pow_n_minus_1(Int(p), k, budget, hints);

    if (base_modulus) {
        auto& bm = *base_modulus;
        for (auto& c : bm) c %= p;
        if (bm.size() != k + 1 || bm.back() != 1)
            throw std::invalid_argument("build_tower: base modulus must be monic of degree k");
        FqField fp = prime_view(p);
        FqPoly f;
        for (auto c : bm) f.c.push_back(FqElem{c});
        trim(fp, f);
        if (!is_irreducible(fp, f)) {
            auto fact = factor_poly(fp, f);
            std::vector<uint32_t> factor_coeffs;
            for (const auto& ce : fact.factors.front().first.c) factor_coeffs.push_back(ce[0]);
            throw std::invalid_argument("build_tower: base modulus reducible over F_p; factor: " +
                                        poly_text_fp(factor_coeffs));
        }
        t->fq_ = std::make_unique<FqField>(p, bm);
    } else {
        if (!q1_fact.complete)
            throw std::invalid_argument("build_tower: cannot pick default base modulus, q-1 factorization incomplete");
        t->fq_ = std::make_unique<FqField>(p, default_base_modulus(p, k, q1_fact));
    }

    t->order_fact_ = arith::factor_q_pow_n_minus_1(t->fq_->size(), n, budget, hints);
    t->qn1_ = t->order_fact_.value;

    if (ext_modulus) {
        auto& em = *ext_modulus;
        if (em.size() != n + 1 || !t->fq_->eq(em.back(), t->fq_->one()))
            throw std::invalid_argument("build_tower: ext modulus must be monic of degree n");
        Poly<FqField> f;
        f.c = em;
        trim(*t->fq_, f);
        if (degree(f) != static_cast<int>(n) || !is_irreducible(*t->fq_, f)) {
            std::string factor_text = "?";
            if (degree(f) == static_cast<int>(n)) {
                auto fact = factor_poly(*t->fq_, f);
                std::ostringstream os;
                os << "degree-" << degree(fact.factors.front().first) << " factor";
                factor_text = os.str();
            }
            throw std::invalid_argument("build_tower: ext modulus reducible over F_q (" + factor_text + ")");
        }
        t->fqn_ = std::make_unique<ExtField>(t->fq_.get(), em);
    } else {
        if (!t->order_fact_.complete)
            throw std::invalid_argument(
                "build_tower: cannot pick default ext modulus, q^n-1 factorization incomplete (supply moduli or hints)");
        t->fqn_ = std::make_unique<ExtField>(t->fq_.get(), default_ext_modulus(*t->fq_, n, t->order_fact_));
    }

    t->xn1_fact_ = std::make_unique<PolyFactorization<FqField>>(factor_xn_minus_1(*t->fq_, n));
    return t;
}

std::vector<FFElement> iterate_elements(const FieldTower& t) {
    std::vector<FFElement> out;
    out.reserve(t.element_count_u64());
    for_each_element(t, [&](const FFElement& e) { out.push_back(e); });
    return out;
}

std::vector<FFElement> iterate_units(const FieldTower& t) {
    std::vector<FFElement> out;
    for_each_unit(t, [&](const FFElement& e) { out.push_back(e); });
    return out;
}

// ---------------------------------------------------------------- fpoly ----

PolyFactorization<FqField> factor_xn_minus_1(const FqField& K, uint32_t n) {
    if (n == 0) throw std::invalid_argument("factor_xn_minus_1: n must be positive");
    uint32_t p = K.p();
    uint32_t m = n;
    unsigned pe = 1;
    while (m % p == 0) {
        m /= p;
        pe *= p;
    }
    auto fact = factor_poly(K, poly_xm_minus_1(K, m));
    if (pe > 1)
        for (auto& [f, mult] : fact.factors) mult *= pe;
    return fact;
}

Int phi_q(const FqField& K, const FqPoly& g) {
    if (poly_is_zero(g)) throw std::invalid_argument("phi_q: zero polynomial");
    if (degree(g) == 0) return 1;
    Int r = 1;
    for (const auto& [h, mult] : factor_poly(K, g).factors) {
        Int qd = pow_int(K.size(), degree(h));
        r *= pow_int(qd, mult - 1) * (qd - 1);
    }
    return r;
}

int mu_prime(const FqField& K, const FqPoly& g) {
    if (poly_is_zero(g)) throw std::invalid_argument("mu_prime: zero polynomial");
    if (degree(g) == 0) return 1;
    auto fact = factor_poly(K, g);
    for (const auto& [h, mult] : fact.factors)
        if (mult > 1) return 0;
    return fact.factors.size() % 2 == 0 ? 1 : -1;
}

}  // namespace pnp
