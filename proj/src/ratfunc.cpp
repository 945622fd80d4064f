#include "pnpair/ratfunc.hpp"

namespace pnp {

RationalFunction make_ratfunc(const FieldTower& t, FqnPoly f1, FqnPoly f2) {
    const ExtField& ext = t.fqn();
    trim(ext, f1);
    trim(ext, f2);
    if (poly_is_zero(f2)) throw std::invalid_argument("make_ratfunc: zero denominator");
    if (!poly_is_zero(f1)) {
        FqnPoly g = poly_gcd(ext, f1, f2);
        if (degree(g) > 0) {
            f1 = poly_div_exact(ext, f1, g);
            f2 = poly_div_exact(ext, f2, g);
        }
    }
    // move the denominator's leading coefficient into the numerator
    auto lead_inv = ext.inv(f2.c.back());
    f2 = scalar_mul(ext, lead_inv, f2);
    f1 = scalar_mul(ext, lead_inv, f1);
    RationalFunction r;
    r.tower = &t;
    r.num = std::move(f1);
    r.den = std::move(f2);
    return r;
}

std::optional<FFElement> eval_at(const RationalFunction& f, const FFElement& alpha) {
    const FieldTower& t = *f.tower;
    if (alpha.tower != &t) throw std::invalid_argument("eval_at: element from a different tower");
    const ExtField& ext = t.fqn();
    auto d = eval(ext, f.den, alpha.v);
    if (ext.is_zero(d)) return std::nullopt;
    auto n = eval(ext, f.num, alpha.v);
    return FFElement{&t, ext.mul(n, ext.inv(d))};
}

const PolyFactorization<ExtField>& num_factorization(const RationalFunction& f) {
    if (!f.num_fact) {
        if (degree(f.num) < 1) {
            auto pf = std::make_shared<PolyFactorization<ExtField>>();
            pf->unit = poly_is_zero(f.num) ? f.tower->fqn().zero() : f.num.c[0];
            f.num_fact = pf;
        } else {
            f.num_fact = std::make_shared<PolyFactorization<ExtField>>(factor_poly(f.tower->fqn(), f.num));
        }
    }
    return *f.num_fact;
}

const PolyFactorization<ExtField>& den_factorization(const RationalFunction& f) {
    if (!f.den_fact) {
        if (degree(f.den) < 1) {
            auto pf = std::make_shared<PolyFactorization<ExtField>>();
            pf->unit = f.den.c[0];
            f.den_fact = pf;
        } else {
            f.den_fact = std::make_shared<PolyFactorization<ExtField>>(factor_poly(f.tower->fqn(), f.den));
        }
    }
    return *f.den_fact;
}

MembershipVerdict membership_R(const RationalFunction& f) {
    const FieldTower& t = *f.tower;
    const ExtField& ext = t.fqn();
    if (!t.order_factorization().complete)
        throw std::invalid_argument("membership_R: factorization of q^n - 1 incomplete");
    if (poly_is_zero(f.num)) throw std::invalid_argument("membership_R: zero function");

    MembershipVerdict v;
    const auto& nf = num_factorization(f);
    const auto& df = den_factorization(f);

    FqnPoly x = poly_x(ext);
    for (const auto& [h, mult] : nf.factors) {
        if (poly_eq(h, x))
            v.x_exponent += static_cast<int>(mult);
        else
            v.exponents.emplace_back(h, static_cast<int>(mult));
    }
    for (const auto& [h, mult] : df.factors) {
        if (poly_eq(h, x))
            v.x_exponent -= static_cast<int>(mult);
        else
            v.exponents.emplace_back(h, -static_cast<int>(mult));
    }

    // condition (i): f = c x^j h^d for a prime d | q^n - 1
    for (const auto& [p, e] : t.order_factorization().factors) {
        bool divides_all = true;
        for (const auto& [h, s] : v.exponents) {
            long a = s < 0 ? -static_cast<long>(s) : s;
            if (Int(a) % p != 0) {
                divides_all = false;
                break;
            }
        }
        if (divides_all) {
            v.failed = MembershipVerdict::Failed::cond_i;
            v.witness_prime = p;
            v.note = v.exponents.empty() ? "f = c x^j (h = 1)" : "every multiplicity divisible by " + to_string(p);
            return v;
        }
    }

    // condition (ii): some irreducible factor of f2 has multiplicity r with q^n not dividing r
    if (f.m2() == 0) {
        v.failed = MembershipVerdict::Failed::cond_ii;
        v.note = "m2 = 0: denominator has no irreducible factor";
        return v;
    }
    bool found = false;
    for (const auto& [h, mult] : df.factors) {
        if (Int(mult) % t.qn() != 0) {
            found = true;
            break;
        }
    }
    if (!found) {
        v.failed = MembershipVerdict::Failed::cond_ii;
        v.note = "every irreducible factor of f2 has multiplicity divisible by q^n";
        return v;
    }

    v.member = true;
    return v;
}

uint64_t R22Stream::shell_count(const FieldTower& t) {
    uint64_t qn = t.element_count_u64();
    // (q^n - 1) * q^n^4 must fit; fields past the enumeration budget never get here
    uint64_t c = qn - 1;
    for (int i = 0; i < 4; ++i) {
        if (c > UINT64_MAX / qn) throw std::overflow_error("R22 shell space exceeds 64 bits");
        c *= qn;
    }
    return c;
}

std::optional<RationalFunction> R22Stream::try_shell(const FieldTower& t, uint64_t shell) {
    const ExtField& ext = t.fqn();
    uint64_t qn = t.element_count_u64();
    uint64_t d0 = shell % qn;
    shell /= qn;
    uint64_t d1 = shell % qn;
    shell /= qn;
    uint64_t c0 = shell % qn;
    shell /= qn;
    uint64_t c1 = shell % qn;
    shell /= qn;
    uint64_t u = shell + 1;  // unit index: element indices 1 .. q^n - 1

    FqnPoly f1 = make_poly(ext, {ext.dec(c0), ext.dec(c1), ext.dec(u)});
    FqnPoly f2 = make_poly(ext, {ext.dec(d0), ext.dec(d1), ext.one()});
    if (degree(poly_gcd(ext, f1, f2)) > 0) return std::nullopt;
    RationalFunction f = make_ratfunc(t, std::move(f1), std::move(f2));
    if (!membership_R(f).member) return std::nullopt;
    return f;
}

R22Stream::R22Stream(const FieldTower& t, uint64_t start_shell)
    : t_(&t), shell_(start_shell), total_(shell_count(t)) {}

std::optional<RationalFunction> R22Stream::next() {
    while (shell_ < total_) {
        auto f = try_shell(*t_, shell_++);
        if (f) return f;
    }
    return std::nullopt;
}

std::string failed_condition_name(MembershipVerdict::Failed f) {
    switch (f) {
        case MembershipVerdict::Failed::none: return "none";
        case MembershipVerdict::Failed::cond_i: return "cond_i";
        case MembershipVerdict::Failed::cond_ii: return "cond_ii";
    }
    return "?";
}

}  // namespace pnp
