#include "qgwa/poly.hpp"

#include <numeric>
#include <sstream>
#include <vector>

namespace qgwa {

std::string to_string(RingFlag r) { return r == RingFlag::Poly ? "poly" : "laurent"; }

LaurentPoly LaurentPoly::constant(const FieldSpec& f, RingFlag ring, const FieldElement& c) {
    LaurentPoly p(f, ring);
    p.add_term(0, c);
    return p;
}

LaurentPoly LaurentPoly::monomial(const FieldSpec& f, RingFlag ring, long exp, const FieldElement& c) {
    LaurentPoly p(f, ring);
    p.add_term(exp, c);
    return p;
}

LaurentPoly LaurentPoly::h(const FieldSpec& f, RingFlag ring) {
    return monomial(f, ring, 1, FieldElement::one(f));
}

void LaurentPoly::add_term(long exp, const FieldElement& c) {
    if (!(c.field() == field_)) throw MixedFields("polynomial coefficient");
    if (ring_ == RingFlag::Poly && exp < 0) throw NegativeExponentInPolyRing(exp);
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(exp, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

long LaurentPoly::min_exp() const {
    if (is_zero()) throw ZeroPolynomial("min_exp");
    return terms_.begin()->first;
}

long LaurentPoly::max_exp() const {
    if (is_zero()) throw ZeroPolynomial("max_exp");
    return terms_.rbegin()->first;
}

FieldElement LaurentPoly::coeff(long exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? FieldElement::zero(field_) : it->second;
}

void LaurentPoly::check_compatible(const LaurentPoly& o, const char* op) const {
    if (!(field_ == o.field_)) throw MixedFields(op);
    if (ring_ != o.ring_) throw MixedRings(op);
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p(field_, ring_);
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    check_compatible(o, "+");
    LaurentPoly p = *this;
    for (const auto& [e, c] : o.terms_) p.add_term(e, c);
    return p;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    check_compatible(o, "-");
    LaurentPoly p = *this;
    for (const auto& [e, c] : o.terms_) p.add_term(e, -c);
    return p;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    check_compatible(o, "*");
    LaurentPoly p(field_, ring_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) p.add_term(e1 + e2, c1 * c2);
    return p;
}

LaurentPoly LaurentPoly::operator*(const FieldElement& s) const {
    LaurentPoly p(field_, ring_);
    if (s.is_zero()) return p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, c * s);
    return p;
}

LaurentPoly LaurentPoly::pow(long e) const {
    if (e < 0) throw ValidationError("LaurentPoly::pow: exponent must be >= 0");
    LaurentPoly acc = constant(field_, ring_, FieldElement::one(field_));
    for (long i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    return field_ == o.field_ && ring_ == o.ring_ && terms_ == o.terms_;
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string cs = c.to_string();
        const bool composite = cs.find(" + ") != std::string::npos ||
                               cs.find(" - ") != std::string::npos;
        bool negative = false;
        if (!composite && !cs.empty() && cs[0] == '-') {
            negative = true;
            cs = cs.substr(1);
        }
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        std::string mono;
        if (e != 0) {
            mono = "h";
            if (e != 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty()) {
            out << (composite ? cs : cs);
        } else if (composite) {
            out << "(" << cs << ")*" << mono;
        } else if (cs == "1") {
            out << mono;
        } else {
            out << cs << "*" << mono;
        }
    }
    return out.str();
}

LaurentPoly twist(const LaurentPoly& f, const FieldElement& c, int eps) {
    if (!(c.field() == f.field())) throw MixedFields("twist");
    if (c.is_zero()) throw ZeroElement("twist scale");
    if (eps != 1 && eps != -1) throw ValidationError("twist: eps must be +1 or -1");
    if (eps == -1 && f.ring() == RingFlag::Poly && !f.is_constant())
        throw NegativeExponentInPolyRing(-f.max_exp());
    LaurentPoly out(f.field(), f.ring());
    for (const auto& [e, a] : f.terms()) out.add_term(eps * e, a * c.pow(e));
    return out;
}

long gap_gcd(const LaurentPoly& f) {
    if (f.is_zero()) throw ZeroPolynomial("gap_gcd");
    long g = 0;
    const long base = f.min_exp();
    for (const auto& [e, c] : f.terms()) g = std::gcd(g, e - base);
    return g;
}

bool is_unit(const LaurentPoly& f) {
    if (f.is_zero()) return false;
    if (f.ring() == RingFlag::Poly) return f.is_constant();
    return f.term_count() == 1;
}

namespace {

// Extended gcd: returns g = gcd(a, b) >= 0 and (s, t) with s*a + t*b = g.
struct ExtGcd {
    long g, s, t;
};

ExtGcd ext_gcd(long a, long b) {
    if (b == 0) {
        if (a < 0) return {-a, -1, 0};
        return {a, 1, 0};
    }
    ExtGcd sub = ext_gcd(b, a % b);
    return {sub.g, sub.t, sub.s - (a / b) * sub.t};
}

}  // namespace

std::optional<SymmetryWitness> is_symmetric(const LaurentPoly& f) {
    if (f.is_zero()) throw ZeroPolynomial("is_symmetric");
    const FieldSpec& k = f.field();
    const long l = f.min_exp() + f.max_exp();

    // The support must be preserved by e -> l - e.
    for (const auto& [e, c] : f.terms())
        if (f.coeff(l - e).is_zero()) return std::nullopt;

    if (f.term_count() == 1) {
        // Monomials reflect onto themselves with gamma = 1, delta = 1.
        return SymmetryWitness{l, FieldElement::one(k), FieldElement::one(k)};
    }

    // Matching coefficients of delta * f(h) = h^l * f(gamma/h) at exponent e
    // requires delta * f_e = gamma^{l-e} * f_{l-e}; with rho_e = f_{l-e}/f_e
    // and anchor e0 = min support, this reduces to gamma^{e-e0} = rho_e/rho_e0.
    const long e0 = f.min_exp();
    std::map<long, FieldElement> rho;
    for (const auto& [e, c] : f.terms()) rho.emplace(e, f.coeff(l - e) / c);

    // Combine the power equations into gamma^g0 = c_gamma via Bezout.
    long g0 = 0;
    std::map<long, long> combo;  // exponent applied to rho_e / rho_e0
    for (const auto& [e, r] : rho) {
        if (e == e0) continue;
        ExtGcd eg = ext_gcd(g0, e - e0);
        for (auto& [_, m] : combo) m *= eg.s;
        combo[e] += eg.t;
        g0 = eg.g;
    }
    FieldElement c_gamma = FieldElement::one(k);
    const FieldElement rho0 = rho.at(e0);
    for (const auto& [e, m] : combo) {
        if (m == 0) continue;
        c_gamma = c_gamma * (rho.at(e) / rho0).pow(m);
    }
    // Necessary consistency: each ratio must be the matching power of c_gamma.
    for (const auto& [e, r] : rho) {
        if ((r / rho0) != c_gamma.pow((e - e0) / g0)) return std::nullopt;
    }
    auto search = root_in_field(c_gamma, g0);
    if (!search.root) return std::nullopt;
    const FieldElement gamma = *search.root;
    const FieldElement delta = gamma.pow(l - e0) * rho0;

    // Exact final check of the full identity.
    for (const auto& [e, c] : f.terms())
        if (delta * c != gamma.pow(l - e) * f.coeff(l - e)) return std::nullopt;
    return SymmetryWitness{l, gamma, delta};
}

}  // namespace qgwa
