#include "pnpair/hunt.hpp"

#include <algorithm>
#include <sstream>

#include "pnpair/parse.hpp"

namespace pnp::hunt {

PairCensus count_Nf(const FreenessCensus& census, const RationalFunction& f, const Int& l1, const Int& l2,
                    const FqPoly& h1, const FqPoly& h2) {
    const FieldTower& t = census.tower();
    if (f.tower != &t) throw std::invalid_argument("count_Nf: rational function from a different tower");
    const ExtField& ext = t.fqn();

    uint32_t m_l1 = census.prime_mask(l1);
    uint32_t m_l2 = census.prime_mask(l2);
    uint32_t m_h1 = census.factor_mask(h1);
    uint32_t m_h2 = census.factor_mask(h2);

    PairCensus out;
    out.tower = &t;
    out.f = f;
    out.l1 = l1;
    out.l2 = l2;
    out.h1 = h1;
    out.h2 = h2;

    uint64_t size = census.field_size();
    for (uint64_t idx = 0; idx < size; ++idx) {
        if (idx == census.zero_index()) continue;  // 0 in S
        if (!census.e_free_at(idx, m_l1) || !census.g_free_at(idx, m_h1)) continue;
        ExtField::Elem alpha = ext.dec(idx);
        auto den = eval(ext, f.den, alpha);
        if (ext.is_zero(den)) continue;  // pole in S
        auto num = eval(ext, f.num, alpha);
        if (ext.is_zero(num)) continue;  // zero of f in S
        // f(alpha) by logs: no inversion needed
        uint64_t jn = census.log_of_index(ext.enc(num));
        uint64_t jd = census.log_of_index(ext.enc(den));
        uint64_t N = census.unit_count();
        uint64_t vidx = census.index_of_log((jn + N - jd) % N);
        if (!census.e_free_at(vidx, m_l2) || !census.g_free_at(vidx, m_h2)) continue;
        ++out.count;
        if (!out.witness) out.witness = t.make(alpha);
    }
    return out;
}

PairCensus count_Nf(const FieldTower& t, const RationalFunction& f, const Int& l1, const Int& l2, const FqPoly& h1,
                    const FqPoly& h2, uint64_t budget) {
    FreenessCensus census(t, budget);
    return count_Nf(census, f, l1, l2, h1, h2);
}

std::pair<bool, std::optional<FFElement>> exists_pnp(const FreenessCensus& census, const RationalFunction& f) {
    const FieldTower& t = census.tower();
    if (f.tower != &t) throw std::invalid_argument("exists_pnp: rational function from a different tower");
    const ExtField& ext = t.fqn();
    uint64_t N = census.unit_count();
    for (uint64_t idx : census.pn_indices()) {
        ExtField::Elem alpha = ext.dec(idx);
        auto den = eval(ext, f.den, alpha);
        if (ext.is_zero(den)) continue;
        auto num = eval(ext, f.num, alpha);
        if (ext.is_zero(num)) continue;
        uint64_t jn = census.log_of_index(ext.enc(num));
        uint64_t jd = census.log_of_index(ext.enc(den));
        uint64_t vidx = census.index_of_log((jn + N - jd) % N);
        if (census.pn_at(vidx)) return {true, t.make(alpha)};
    }
    return {false, std::nullopt};
}

std::pair<bool, std::optional<FFElement>> exists_pnp(const FieldTower& t, const RationalFunction& f, uint64_t budget) {
    FreenessCensus census(t, budget);
    return exists_pnp(census, f);
}

std::vector<uint64_t> list_primitive_normal(const FreenessCensus& census) { return census.pn_indices(); }

bool spnbt_check(uint32_t p, uint32_t k, uint32_t n, uint64_t budget) {
    auto t = FieldTower::build(p, k, n);
    FreenessCensus census(*t, budget);
    uint64_t N = census.unit_count();
    for (uint64_t idx : census.pn_indices()) {
        uint64_t j = census.log_of_index(idx);
        uint64_t inv_idx = census.index_of_log((N - j % N) % N);
        if (census.pn_at(inv_idx)) return true;
    }
    return false;
}

Table3Report verify_table3_row(const Table3Row& row, uint64_t budget) {
    Table3Report rep;
    rep.row = row;

    auto t = parse::build_tower_from_spec(row.field_spec);
    FreenessCensus census(*t, budget);
    std::ostringstream detail;

    // the census generator is the tower generator whenever that root is
    // primitive; the fixture's exponent list is relative to it
    rep.generator_primitive = census.generator() == t->gen();
    if (!rep.generator_primitive) detail << "ext modulus root is not primitive; exponent lists not comparable. ";

    uint64_t N = census.unit_count();
    for (uint64_t idx : census.pn_indices()) {
        uint64_t j = census.log_of_index(idx);
        rep.computed_exponents.push_back(j == 0 ? N : j);
    }
    std::sort(rep.computed_exponents.begin(), rep.computed_exponents.end());

    std::vector<uint64_t> expected = row.exponents;
    std::sort(expected.begin(), expected.end());
    rep.set_match = rep.generator_primitive && rep.computed_exponents == expected;
    if (!rep.set_match) {
        detail << "exponent set mismatch: computed {";
        for (std::size_t i = 0; i < rep.computed_exponents.size(); ++i)
            detail << (i ? "," : "") << rep.computed_exponents[i];
        detail << "} vs listed {";
        for (std::size_t i = 0; i < expected.size(); ++i) detail << (i ? "," : "") << expected[i];
        detail << "}. ";
    }

    RationalFunction f = parse::parse_ratfunc(*t, row.f_text);
    rep.membership = membership_R(f);
    rep.membership_ok = rep.membership.member;
    if (!rep.membership_ok)
        detail << "listed f fails membership (" << failed_condition_name(rep.membership.failed) << ": "
               << rep.membership.note << "). ";

    auto [found, witness] = exists_pnp(census, f);
    rep.no_pnp = !found;
    if (found) detail << "unexpected primitive normal pair at alpha = " << parse::ffelement_text(*witness) << ". ";

    rep.pass = rep.set_match && rep.membership_ok && rep.no_pnp;
    rep.detail = detail.str();
    return rep;
}

ExceptionSearch search_exceptions(const FreenessCensus& census, uint64_t max_shells, uint64_t resume_index) {
    const FieldTower& t = census.tower();
    ExceptionSearch out;
    uint64_t total = R22Stream::shell_count(t);
    uint64_t shell = resume_index;
    while (shell < total && out.shells_examined < max_shells) {
        auto f = R22Stream::try_shell(t, shell);
        ++shell;
        ++out.shells_examined;
        if (!f) continue;
        auto [found, witness] = exists_pnp(census, *f);
        if (!found) out.exceptions.push_back(std::move(*f));
    }
    out.next_index = shell;
    out.exhausted = shell >= total;
    return out;
}

Section3Report section3_check() {
    Section3Report rep;
    auto t = parse::build_tower_from_spec("p=2,k=1,n=3,ext=x^3+x+1");
    RationalFunction f = parse::parse_ratfunc(*t, "(b*x^2+x+b)/(x^2+(b+1)*x+1)");
    const ExtField& ext = t->fqn();
    FFElement b = t->gen();

    auto at = [&](const FqnPoly& g, uint32_t i) { return eval(ext, g, t->pow(b, i).v); };
    rep.f1_roots_ok = ext.is_zero(at(f.num, 3)) && ext.is_zero(at(f.num, 4));
    rep.f2_roots_ok = ext.is_zero(at(f.den, 2)) && ext.is_zero(at(f.den, 5));
    rep.f1_eq_f2_ok = ext.eq(at(f.num, 1), at(f.den, 1)) && ext.eq(at(f.num, 6), at(f.den, 6));

    // primitive alpha never maps to a primitive value
    FreenessCensus census(*t);
    bool bad = false;
    for (uint64_t idx = 0; idx < census.field_size(); ++idx) {
        if (!census.primitive_at(idx)) continue;
        ExtField::Elem alpha = ext.dec(idx);
        auto den = eval(ext, f.den, alpha);
        if (ext.is_zero(den)) continue;
        auto num = eval(ext, f.num, alpha);
        if (ext.is_zero(num)) continue;
        auto val = ext.mul(num, ext.inv(den));
        if (census.primitive_at(ext.enc(val))) bad = true;
    }
    rep.no_primitive_pair = !bad;
    rep.pass = rep.f1_roots_ok && rep.f2_roots_ok && rep.f1_eq_f2_ok && rep.no_primitive_pair;
    return rep;
}

}  // namespace pnp::hunt
