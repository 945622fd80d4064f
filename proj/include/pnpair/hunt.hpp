#ifndef PNPAIR_HUNT_HPP
#define PNPAIR_HUNT_HPP

#include <optional>
#include <string>
#include <vector>

#include "pnpair/freeness.hpp"
#include "pnpair/ratfunc.hpp"

namespace pnp::hunt {

constexpr uint64_t kDefaultEnumBudget = 1ull << 20;

/// N_f(l1, l2, h1, h2): the number of alpha outside S = {0} u zeros u poles
/// of f with alpha l1-free and h1-free and f(alpha) l2-free and h2-free.
struct PairCensus {
    const FieldTower* tower = nullptr;
    RationalFunction f;
    Int l1, l2;
    FqPoly h1, h2;
    uint64_t count = 0;
    std::optional<FFElement> witness;  // first qualifying alpha
};

PairCensus count_Nf(const FreenessCensus& census, const RationalFunction& f, const Int& l1, const Int& l2,
                    const FqPoly& h1, const FqPoly& h2);
/// convenience: builds a census; refuses fields beyond the budget
PairCensus count_Nf(const FieldTower& t, const RationalFunction& f, const Int& l1, const Int& l2, const FqPoly& h1,
                    const FqPoly& h2, uint64_t budget = kDefaultEnumBudget);

/// true (with witness) iff N_f(q^n-1, q^n-1, x^n-1, x^n-1) > 0
std::pair<bool, std::optional<FFElement>> exists_pnp(const FreenessCensus& census, const RationalFunction& f);
std::pair<bool, std::optional<FFElement>> exists_pnp(const FieldTower& t, const RationalFunction& f,
                                                     uint64_t budget = kDefaultEnumBudget);

std::vector<uint64_t> list_primitive_normal(const FreenessCensus& census);

/// exists alpha primitive normal with alpha^{-1} primitive normal, by direct
/// scan (1/x is not in R, so this cannot go through the R machinery)
bool spnbt_check(uint32_t p, uint32_t k, uint32_t n, uint64_t budget = kDefaultEnumBudget);

struct Table3Row {
    std::string label;       // e.g. "(2,5)"
    std::string field_spec;  // e.g. "p=2,k=1,n=5,ext=x^5+x^2+1"
    std::vector<uint64_t> exponents;
    std::string f_text;  // e.g. "(b*x^2+b*x+b^2)/(x^2+1)"
};

struct Table3Report {
    Table3Row row;
    bool generator_primitive = false;
    std::vector<uint64_t> computed_exponents;
    bool set_match = false;
    MembershipVerdict membership;
    bool membership_ok = false;
    bool no_pnp = false;
    bool pass = false;
    std::string detail;
};

/// (a) recompute the primitive-normal exponent set and compare, (b) check
/// the row's f against membership_R, (c) check exists_pnp(f) = false.
/// Mismatches produce a structured diff in `detail` rather than silence.
Table3Report verify_table3_row(const Table3Row& row, uint64_t budget = kDefaultEnumBudget);

struct ExceptionSearch {
    std::vector<RationalFunction> exceptions;
    uint64_t next_index = 0;  // resume point
    bool exhausted = false;
    uint64_t shells_examined = 0;
};

/// Stream R_{q^n}(2,2) shells from resume_index, keeping every member f with
/// exists_pnp(f) = false. Examines at most max_shells shells.
ExceptionSearch search_exceptions(const FreenessCensus& census, uint64_t max_shells, uint64_t resume_index = 0);

struct Section3Report {
    bool f1_roots_ok = false;   // f1(b^3) = f1(b^4) = 0
    bool f2_roots_ok = false;   // f2(b^2) = f2(b^5) = 0
    bool f1_eq_f2_ok = false;   // f1(b^i) = f2(b^i) for i = 1, 6
    bool no_primitive_pair = false;
    bool pass = false;
};

/// regression fixture: F_8 with b^3+b+1 = 0 and f = (bx^2+x+b)/(x^2+(b+1)x+1)
Section3Report section3_check();

}  // namespace pnp::hunt

#endif
