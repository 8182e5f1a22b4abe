#include "qgwa/algebra.hpp"

#include <sstream>

namespace qgwa {

AlgebraSpec AlgebraSpec::make(const FieldSpec& field, RingFlag ring,
                              const FieldElement& q, const LaurentPoly& a) {
    if (!(q.field() == field)) throw MixedFields("algebra parameter q");
    if (!(a.field() == field)) throw MixedFields("algebra parameter a");
    if (a.ring() != ring) throw MixedRings("algebra parameter a");
    if (q.is_zero()) throw ValidationError("q must be nonzero");
    if (q.is_one()) throw ValidationError("q must differ from 1");
    if (a.is_zero()) throw ValidationError("a must be nonzero");

    Data d{field, ring, q, a, is_unit(a), order_as_root_of_unity(q),
           a.min_exp(), a.max_exp(), gap_gcd(a)};
    return AlgebraSpec(std::make_shared<const Data>(std::move(d)));
}

bool AlgebraSpec::operator==(const AlgebraSpec& o) const {
    if (d_ == o.d_) return true;
    return d_->field == o.d_->field && d_->ring == o.d_->ring &&
           d_->q == o.d_->q && d_->a == o.d_->a;
}

std::string AlgebraSpec::to_string() const {
    std::ostringstream out;
    out << "A(" << qgwa::to_string(d_->ring) << ", q=" << d_->q.to_string()
        << ", a=" << d_->a.to_string() << ") over " << d_->field.to_string();
    return out.str();
}

AlgebraElement AlgebraElement::zero(const AlgebraSpec& A) { return AlgebraElement(A); }

AlgebraElement AlgebraElement::one(const AlgebraSpec& A) {
    return scalar(A, FieldElement::one(A.field()));
}

AlgebraElement AlgebraElement::scalar(const AlgebraSpec& A, const FieldElement& c) {
    return monomial(A, 0, 0, c);
}

AlgebraElement AlgebraElement::monomial(const AlgebraSpec& A, long s, long j,
                                        const FieldElement& c) {
    if (!(c.field() == A.field())) throw MixedFields("element coefficient");
    if (A.ring() == RingFlag::Poly && j < 0) throw NegativeExponentInPolyRing(j);
    AlgebraElement u(A);
    u.add_term({s, j}, c);
    return u;
}

AlgebraElement AlgebraElement::gen_y(const AlgebraSpec& A) {
    return monomial(A, 1, 0, FieldElement::one(A.field()));
}

AlgebraElement AlgebraElement::gen_h(const AlgebraSpec& A) {
    return monomial(A, 0, 1, FieldElement::one(A.field()));
}

AlgebraElement AlgebraElement::gen_hinv(const AlgebraSpec& A) {
    if (A.ring() != RingFlag::Laurent)
        throw InvalidGenerator("h^-1 exists only over the Laurent ring");
    return monomial(A, 0, -1, FieldElement::one(A.field()));
}

AlgebraElement AlgebraElement::gen_x(const AlgebraSpec& A) {
    return monomial(A, -1, 0, FieldElement::one(A.field()));
}

AlgebraElement AlgebraElement::from_poly(const AlgebraSpec& A, const LaurentPoly& f) {
    if (!(f.field() == A.field())) throw MixedFields("from_poly");
    if (f.ring() != A.ring()) throw MixedRings("from_poly");
    AlgebraElement u(A);
    for (const auto& [e, c] : f.terms()) u.add_term({0, e}, c);
    return u;
}

void AlgebraElement::add_term(const StdMonomial& m, const FieldElement& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void AlgebraElement::check_same(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.spec_ != b.spec_) throw MixedAlgebras(a.spec_.to_string() + " vs " +
                                                b.spec_.to_string());
}

FieldElement AlgebraElement::coeff(long s, long j) const {
    auto it = terms_.find({s, j});
    return it == terms_.end() ? FieldElement::zero(spec_.field()) : it->second;
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement u(spec_);
    for (const auto& [m, c] : terms_) u.terms_.emplace(m, -c);
    return u;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    check_same(*this, o);
    AlgebraElement u = *this;
    for (const auto& [m, c] : o.terms_) u.add_term(m, c);
    return u;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    check_same(*this, o);
    AlgebraElement u = *this;
    for (const auto& [m, c] : o.terms_) u.add_term(m, -c);
    return u;
}

namespace {

// Product over t in [t_lo, t_hi] of a(q^t h), the coefficient polynomial
// produced when a y-block and an x-block annihilate step by step.
LaurentPoly a_product(const AlgebraSpec& A, long t_lo, long t_hi) {
    LaurentPoly acc = LaurentPoly::constant(A.field(), A.ring(),
                                            FieldElement::one(A.field()));
    for (long t = t_lo; t <= t_hi; ++t) acc = acc * twist(A.a(), A.qpow(t), 1);
    return acc;
}

}  // namespace

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
    check_same(*this, o);
    const AlgebraSpec& A = spec_;
    AlgebraElement out(A);
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) {
            const FieldElement c = c1 * c2;
            if (m1.s >= 0 && m2.s >= 0) {
                // (y^s1 h^j1)(y^s2 h^j2) = q^{j1 s2} y^{s1+s2} h^{j1+j2}
                out.add_term({m1.s + m2.s, m1.j + m2.j}, c * A.qpow(m1.j * m2.s));
            } else if (m1.s <= 0 && m2.s <= 0) {
                // (h^j1 x^k1)(h^j2 x^k2) = q^{k1 j2} h^{j1+j2} x^{k1+k2}
                out.add_term({m1.s + m2.s, m1.j + m2.j},
                             c * A.qpow((-m1.s) * m2.j));
            } else if (m1.s > 0) {
                // y^i h^J x^k with J = j1 + j2: push h^J right past x^k,
                // contract y^i x^k = prod_t a(q^{-t} h) times the survivor.
                const long i = m1.s, k = -m2.s, J = m1.j + m2.j;
                if (i >= k) {
                    const long s = i - k;
                    const LaurentPoly p = a_product(A, -(i - 1), -(i - k));
                    const FieldElement base = c * A.qpow(-J * k);
                    for (const auto& [e, pc] : p.terms())
                        out.add_term({s, e + J}, base * pc * A.qpow(s * e));
                } else {
                    const long s = i - k;  // negative
                    const LaurentPoly p = a_product(A, -(i - 1), 0);
                    const FieldElement base = c * A.qpow(-J * i);
                    for (const auto& [e, pc] : p.terms())
                        out.add_term({s, e + J}, base * pc);
                }
            } else {
                // h^j1 x^k y^i h^j2: contract x^k y^i = prod_t a(q^t h)
                // times the survivor, then absorb the outer h-powers.
                const long k = -m1.s, i = m2.s, J = m1.j + m2.j;
                if (k >= i) {
                    const long s = i - k;  // <= 0
                    const LaurentPoly p = a_product(A, k - i + 1, k);
                    const FieldElement base = c * A.qpow(m2.j * (k - i));
                    for (const auto& [e, pc] : p.terms())
                        out.add_term({s, e + J}, base * pc);
                } else {
                    const long s = i - k;  // positive
                    const LaurentPoly p = a_product(A, 1, k);
                    const FieldElement base = c * A.qpow(m1.j * s);
                    for (const auto& [e, pc] : p.terms())
                        out.add_term({s, e + J}, base * pc * A.qpow(s * e));
                }
            }
        }
    }
    return out;
}

AlgebraElement AlgebraElement::operator*(const FieldElement& c) const {
    if (!(c.field() == spec_.field())) throw MixedFields("scalar multiple");
    AlgebraElement u(spec_);
    if (c.is_zero()) return u;
    for (const auto& [m, tc] : terms_) u.terms_.emplace(m, tc * c);
    return u;
}

AlgebraElement AlgebraElement::pow(long e) const {
    if (e < 0) {
        auto inv = invert_monomial(*this);
        if (!inv) throw ValidationError("negative power of a non-invertible element");
        return inv->pow(-e);
    }
    AlgebraElement acc = one(spec_);
    for (long i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
    return spec_ == o.spec_ && terms_ == o.terms_;
}

std::map<long, AlgebraElement> AlgebraElement::weight_components() const {
    std::map<long, AlgebraElement> comps;
    for (const auto& [m, c] : terms_) {
        auto it = comps.find(m.s);
        if (it == comps.end()) it = comps.emplace(m.s, zero(spec_)).first;
        it->second.add_term(m, c);
    }
    return comps;
}

std::optional<long> AlgebraElement::homogeneous_weight() const {
    if (terms_.empty()) return std::nullopt;
    const long s = terms_.begin()->first.s;
    for (const auto& [m, c] : terms_)
        if (m.s != s) return std::nullopt;
    return s;
}

std::string AlgebraElement::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    // Print highest weight first, then highest h-exponent.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
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
        auto append = [&mono](const char* g, long e) {
            if (e == 0) return;
            if (!mono.empty()) mono += "*";
            mono += g;
            if (e != 1) mono += "^" + std::to_string(e);
        };
        append("y", m.yexp());
        append("h", m.j);
        append("x", m.xexp());
        if (mono.empty()) {
            out << cs;
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

int units_mod_scalars_rank(const AlgebraSpec& A) {
    if (!A.unit_case()) return 0;
    return A.ring() == RingFlag::Poly ? 1 : 2;
}

std::optional<AlgebraElement> invert_monomial(const AlgebraElement& u) {
    if (u.term_count() != 1) return std::nullopt;
    const AlgebraSpec& A = u.spec();
    const auto& [m, c] = *u.terms().begin();
    if (m.s == 0) {
        if (m.j != 0 && A.ring() == RingFlag::Poly) return std::nullopt;
        return AlgebraElement::monomial(A, 0, -m.j, c.inverse());
    }
    if (!A.unit_case()) return std::nullopt;
    // Invert in the skew-Laurent picture: (c h^m x^n)^{-1} = c^{-1} q^{nm} h^{-m} x^{-n}.
    auto [sk, sc] = std_to_skew(A, m, c);
    if (A.ring() == RingFlag::Poly && sk.m != 0) return std::nullopt;
    SkewMonomial inv{-sk.m, -sk.n};
    auto [mono, coeff] = skew_to_std(A, inv, sc.inverse() * A.qpow(sk.n * sk.m));
    return AlgebraElement::monomial(A, mono.s, mono.j, coeff);
}

AlgebraElement evaluate_poly_at(const LaurentPoly& f, const AlgebraElement& u) {
    const AlgebraSpec& A = u.spec();
    if (!(f.field() == A.field())) throw MixedFields("evaluate_poly_at");
    AlgebraElement out = AlgebraElement::zero(A);
    if (f.is_zero()) return out;
    std::optional<AlgebraElement> inv;
    if (f.min_exp() < 0) {
        inv = invert_monomial(u);
        if (!inv) throw NonInvertibleImageOfH();
    }
    for (const auto& [e, c] : f.terms()) {
        AlgebraElement p = e >= 0 ? u.pow(e) : inv->pow(-e);
        out = out + p * c;
    }
    return out;
}

std::pair<SkewMonomial, FieldElement> std_to_skew(const AlgebraSpec& A,
                                                  const StdMonomial& mono,
                                                  const FieldElement& c) {
    if (!A.unit_case()) throw UnitCaseOnly("std_to_skew");
    if (mono.s <= 0) return {SkewMonomial{mono.j, -mono.s}, c};
    // y^s h^j = alpha^s q^{-N s(s-1)/2 - s j} h^{sN + j} x^{-s} with a = alpha h^N.
    const long N = A.max_support();
    const FieldElement alpha = A.a().coeff(N);
    const long s = mono.s, j = mono.j;
    const FieldElement coeff =
        c * alpha.pow(s) * A.qpow(-N * s * (s - 1) / 2 - s * j);
    return {SkewMonomial{s * N + j, -s}, coeff};
}

std::pair<StdMonomial, FieldElement> skew_to_std(const AlgebraSpec& A,
                                                 const SkewMonomial& mono,
                                                 const FieldElement& c) {
    if (!A.unit_case()) throw UnitCaseOnly("skew_to_std");
    if (mono.n >= 0) return {StdMonomial{-mono.n, mono.m}, c};
    // h^m x^{-i} = alpha^{-i} q^{N i(i-1)/2 + i(m - iN)} y^i h^{m - iN}.
    const long N = A.max_support();
    const FieldElement alpha = A.a().coeff(N);
    const long i = -mono.n, m = mono.m;
    const FieldElement coeff =
        c * alpha.pow(-i) * A.qpow(N * i * (i - 1) / 2 + i * (m - i * N));
    return {StdMonomial{i, m - i * N}, coeff};
}

}  // namespace qgwa
