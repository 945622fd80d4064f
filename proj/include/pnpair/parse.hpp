#ifndef PNPAIR_PARSE_HPP
#define PNPAIR_PARSE_HPP

#include <memory>
#include <optional>
#include <string>

#include "pnpair/ffield.hpp"
#include "pnpair/fpoly.hpp"
#include "pnpair/ratfunc.hpp"

namespace pnp::parse {

/// `p=2,k=2,n=3,base=x^2+x+1,ext=x^3+a*x^2+a*x+a`; base and ext are optional
/// (defaults are searched). Base coefficients are integers; ext coefficients
/// may use the base generator `a`.
struct FieldSpec {
    uint32_t p = 0, k = 1, n = 1;
    std::optional<std::string> base_text, ext_text;
};

FieldSpec parse_field_spec(const std::string& text);

std::unique_ptr<FieldTower> build_tower_from_spec(const std::string& text, const arith::FactorBudget& budget = {},
                                                  const arith::FactorHints* hints = nullptr);

/// polynomial in x over F_q; symbols: integers and `a`
FqPoly parse_fq_poly(const FqField& fq, const std::string& text);

/// rational function in x over F_{q^n}; symbols: integers, `a`, `b`
RationalFunction parse_ratfunc(const FieldTower& t, const std::string& text);

/// expression that must reduce to a single field element (no `x`)
FFElement parse_element(const FieldTower& t, const std::string& text);

std::string fq_elem_text(const FqField& fq, const FqElem& c);
std::string fq_poly_text(const FqField& fq, const FqPoly& f);
std::string ffelement_text(const FFElement& e);
std::string ext_poly_text(const FieldTower& t, const FqnPoly& f);
std::string ratfunc_text(const RationalFunction& f);
std::string field_spec_text(const FieldTower& t);

}  // namespace pnp::parse

#endif
