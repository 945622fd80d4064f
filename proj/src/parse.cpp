#include "pnpair/parse.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace pnp::parse {

namespace {

// ------------------------------------------------------------- expression --
// expr   := term (('+'|'-') term)*
// term   := factor ('*' factor | '/' factor)*
// factor := atom ('^' int)?
// atom   := symbol | integer | 'x' | '(' expr ')' | '-' factor
// Values are rational functions in x so the one grammar serves moduli,
// elements and rational functions alike.

template <class F>
struct RatValue {
    Poly<F> num, den;
};

template <class F>
class ExprParser {
public:
    ExprParser(const F& K, std::string text, std::map<char, typename F::Elem> symbols)
        : K_(K), s_(std::move(text)), symbols_(std::move(symbols)) {}

    RatValue<F> parse() {
        auto v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return v;
    }

private:
    RatValue<F> constant(typename F::Elem c) const { return {make_poly(K_, {std::move(c)}), poly_one(K_)}; }

    RatValue<F> reduce(Poly<F> n, Poly<F> d) const {
        if (poly_is_zero(d)) fail("division by zero polynomial");
        if (!poly_is_zero(n)) {
            auto g = poly_gcd(K_, n, d);
            if (degree(g) > 0) {
                n = poly_div_exact(K_, n, g);
                d = poly_div_exact(K_, d, g);
            }
        }
        auto lead = K_.inv(d.c.back());
        return {scalar_mul(K_, lead, n), scalar_mul(K_, lead, d)};
    }

    RatValue<F> add_vals(const RatValue<F>& a, const RatValue<F>& b, bool minus) const {
        Poly<F> n1 = mul(K_, a.num, b.den);
        Poly<F> n2 = mul(K_, b.num, a.den);
        Poly<F> n = minus ? sub(K_, n1, n2) : add(K_, n1, n2);
        return reduce(std::move(n), mul(K_, a.den, b.den));
    }

    RatValue<F> mul_vals(const RatValue<F>& a, const RatValue<F>& b) const {
        return reduce(mul(K_, a.num, b.num), mul(K_, a.den, b.den));
    }

    RatValue<F> div_vals(const RatValue<F>& a, const RatValue<F>& b) const {
        if (poly_is_zero(b.num)) fail("division by zero");
        return reduce(mul(K_, a.num, b.den), mul(K_, a.den, b.num));
    }

    RatValue<F> pow_val(const RatValue<F>& a, long e) const {
        RatValue<F> base = a;
        if (e < 0) {
            base = div_vals(constant(K_.one()), a);
            e = -e;
        }
        RatValue<F> r = constant(K_.one());
        while (e > 0) {
            if (e & 1) r = mul_vals(r, base);
            e >>= 1;
            if (e > 0) base = mul_vals(base, base);
        }
        return r;
    }

    RatValue<F> expr() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        } else if (peek() == '+') {
            ++pos_;
        }
        auto v = term();
        if (neg) v.num = sub(K_, poly_zero(K_), v.num);
        while (true) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            v = add_vals(v, term(), c == '-');
        }
        return v;
    }

    RatValue<F> term() {
        auto v = factor();
        while (true) {
            skip_ws();
            char c = peek();
            if (c != '*' && c != '/') break;
            ++pos_;
            auto rhs = factor();
            v = c == '*' ? mul_vals(v, rhs) : div_vals(v, rhs);
        }
        return v;
    }

    RatValue<F> factor() {
        auto v = atom();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            bool neg = false;
            if (peek() == '-') {
                neg = true;
                ++pos_;
            }
            long e = read_int();
            v = pow_val(v, neg ? -e : e);
        }
        return v;
    }

    RatValue<F> atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            auto v = expr();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return v;
        }
        if (c == '-') {
            ++pos_;
            auto v = factor();
            v.num = sub(K_, poly_zero(K_), v.num);
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long val = read_int();
            auto e = K_.zero();
            for (long i = 0; i < val % static_cast<long>(K_.p()); ++i) e = K_.add(e, K_.one());
            return constant(e);
        }
        if (c == 'x') {
            ++pos_;
            return {poly_x(K_), poly_one(K_)};
        }
        auto it = symbols_.find(c);
        if (it != symbols_.end()) {
            ++pos_;
            return constant(it->second);
        }
        fail(std::string("unexpected character '") + c + "'");
        return {};
    }

    long read_int() {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 1'000'000'000L) fail("integer literal too large");
            ++pos_;
        }
        return v;
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("parse error at position " + std::to_string(pos_) + ": " + msg + " in \"" + s_ +
                                    "\"");
    }

    const F& K_;
    std::string s_;
    std::size_t pos_ = 0;
    std::map<char, typename F::Elem> symbols_;
};

std::string trim_copy(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

FieldSpec parse_field_spec(const std::string& text) {
    FieldSpec spec;
    std::stringstream ss(text);
    std::string part;
    bool have_p = false, have_n = false;
    while (std::getline(ss, part, ',')) {
        part = trim_copy(part);
        if (part.empty()) continue;
        auto eq = part.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("field spec: expected key=value, got " + part);
        std::string key = trim_copy(part.substr(0, eq));
        std::string val = trim_copy(part.substr(eq + 1));
        if (key == "p") {
            spec.p = static_cast<uint32_t>(std::stoul(val));
            have_p = true;
        } else if (key == "k") {
            spec.k = static_cast<uint32_t>(std::stoul(val));
        } else if (key == "n") {
            spec.n = static_cast<uint32_t>(std::stoul(val));
            have_n = true;
        } else if (key == "base") {
            spec.base_text = val;
        } else if (key == "ext") {
            spec.ext_text = val;
        } else {
            throw std::invalid_argument("field spec: unknown key " + key);
        }
    }
    if (!have_p || !have_n) throw std::invalid_argument("field spec: p and n are required");
    return spec;
}

FqPoly parse_fq_poly(const FqField& fq, const std::string& text) {
    ExprParser<FqField> parser(fq, text, {{'a', fq.gen()}});
    auto v = parser.parse();
    if (degree(v.den) != 0) throw std::invalid_argument("polynomial expected, got a proper rational function: " + text);
    auto inv = fq.inv(v.den.c[0]);
    return scalar_mul(fq, inv, v.num);
}

namespace {

std::vector<uint32_t> parse_fp_poly_coeffs(uint32_t p, const std::string& text) {
    FqField fp(p, {0, 1});  // F_p view
    FqPoly f = parse_fq_poly(fp, text);
    std::vector<uint32_t> out;
    for (const auto& c : f.c) out.push_back(c[0]);
    return out;
}

}  // namespace

std::unique_ptr<FieldTower> build_tower_from_spec(const std::string& text, const arith::FactorBudget& budget,
                                                  const arith::FactorHints* hints) {
    FieldSpec spec = parse_field_spec(text);
    std::optional<std::vector<uint32_t>> base_coeffs;
    if (spec.base_text) base_coeffs = parse_fp_poly_coeffs(spec.p, *spec.base_text);

    if (!spec.ext_text)
        return FieldTower::build(spec.p, spec.k, spec.n, std::move(base_coeffs), std::nullopt, budget, hints);

    // the ext polynomial needs F_q to parse its coefficients; resolve the
    // base modulus first (the default rule for a degree-k base over F_p is
    // the default-ext rule of the (p, 1, k) tower)
    std::vector<uint32_t> bc;
    if (base_coeffs) {
        bc = *base_coeffs;
    } else if (spec.k == 1) {
        auto tmp = FieldTower::build(spec.p, 1, 1, std::nullopt, std::nullopt, budget, hints);
        for (const auto& c : tmp->fqn().modulus()) bc.push_back(c[0]);
    } else {
        auto tmp = FieldTower::build(spec.p, 1, spec.k, std::nullopt, std::nullopt, budget, hints);
        for (const auto& c : tmp->fqn().modulus()) bc.push_back(c[0]);
    }
    FqField fq(spec.p, bc);
    FqPoly ext = parse_fq_poly(fq, *spec.ext_text);
    if (degree(ext) != static_cast<int>(spec.n))
        throw std::invalid_argument("field spec: ext modulus degree != n");
    return FieldTower::build(spec.p, spec.k, spec.n, bc, ext.c, budget, hints);
}

RationalFunction parse_ratfunc(const FieldTower& t, const std::string& text) {
    const ExtField& ext = t.fqn();
    std::map<char, ExtField::Elem> symbols{{'b', ext.gen()}};
    if (t.k() >= 1) symbols['a'] = ext.embed(t.fq().gen());
    ExprParser<ExtField> parser(ext, text, std::move(symbols));
    auto v = parser.parse();
    if (poly_is_zero(v.den)) throw std::invalid_argument("ratfunc: zero denominator");
    return make_ratfunc(t, v.num, v.den);
}

FFElement parse_element(const FieldTower& t, const std::string& text) {
    RationalFunction f = parse_ratfunc(t, text);
    if (f.m2() != 0 || f.m1() > 0)
        throw std::invalid_argument("element expression must reduce to a constant: " + text);
    if (poly_is_zero(f.num)) return t.zero();
    // den is the constant 1 after normalization, so the value is the numerator's constant term
    return t.make(f.num.c[0]);
}

std::string fq_elem_text(const FqField& fq, const FqElem& c) {
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(fq.k()) - 1; i >= 0; --i) {
        if (c[i] == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0) {
            os << c[i];
        } else {
            if (c[i] != 1) os << c[i] << "*";
            os << "a";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

namespace {

bool is_single_term(const std::string& s) {
    return s.find('+') == std::string::npos && s.find('-') == std::string::npos;
}

// one rendered coefficient attached to var^i
void append_term(std::ostringstream& os, bool& first, const std::string& coeff, const std::string& var, int i) {
    if (coeff == "0") return;
    if (!first) os << "+";
    first = false;
    if (i == 0) {
        os << (is_single_term(coeff) ? coeff : "(" + coeff + ")");
        return;
    }
    if (coeff != "1") {
        os << (is_single_term(coeff) ? coeff : "(" + coeff + ")") << "*";
    }
    os << var;
    if (i > 1) os << "^" << i;
}

}  // namespace

std::string fq_poly_text(const FqField& fq, const FqPoly& f) {
    if (poly_is_zero(f)) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(f); i >= 0; --i) append_term(os, first, fq_elem_text(fq, f.c[i]), "x", i);
    if (first) os << "0";
    return os.str();
}

std::string ffelement_text(const FFElement& e) {
    const FieldTower& t = *e.tower;
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(t.n()) - 1; i >= 0; --i)
        append_term(os, first, fq_elem_text(t.fq(), e.v[i]), "b", i);
    if (first) os << "0";
    return os.str();
}

std::string ext_poly_text(const FieldTower& t, const FqnPoly& f) {
    if (poly_is_zero(f)) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(f); i >= 0; --i) append_term(os, first, ffelement_text({&t, f.c[i]}), "x", i);
    if (first) os << "0";
    return os.str();
}

std::string ratfunc_text(const RationalFunction& f) {
    std::ostringstream os;
    os << "(" << ext_poly_text(*f.tower, f.num) << ")/(" << ext_poly_text(*f.tower, f.den) << ")";
    return os.str();
}

std::string field_spec_text(const FieldTower& t) {
    std::ostringstream os;
    os << "p=" << t.p() << ",k=" << t.k() << ",n=" << t.n();
    if (t.k() > 1) {
        FqField fp(t.p(), {0, 1});
        FqPoly f;
        for (auto c : t.fq().modulus()) f.c.push_back(FqElem{c});
        trim(fp, f);
        os << ",base=" << fq_poly_text(fp, f);
    }
    FqPoly ext;
    ext.c = t.fqn().modulus();
    trim(t.fq(), ext);
    os << ",ext=" << fq_poly_text(t.fq(), ext);
    return os.str();
}

}  // namespace pnp::parse
