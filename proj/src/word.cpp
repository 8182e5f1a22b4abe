#include "qgwa/word.hpp"

namespace qgwa {

namespace {

// Right-multiplies the single term c * y^max(s,0) h^j x^max(-s,0) by one
// generator, emitting the rewritten terms into out. Each branch applies
// exactly one defining relation (or its immediate h^{-1} consequence) the
// minimal number of times, so this path never consults the closed-form
// product.
void term_times_gen(const AlgebraSpec& A, const StdMonomial& m,
                    const FieldElement& c, Gen g, AlgebraElement& out) {
    switch (g) {
        case Gen::Y:
            if (m.s >= 0) {
                // h y = q y h moved past h^j: y^s h^j y = q^j y^{s+1} h^j.
                out = out + AlgebraElement::monomial(A, m.s + 1, m.j,
                                                     c * A.qpow(m.j));
            } else {
                // Peel one x: h^j x^k y = h^j x^{k-1} a(qh)
                //            = sum_e a_e q^{ek} h^{j+e} x^{k-1}.
                const long k = -m.s;
                for (const auto& [e, ae] : A.a().terms())
                    out = out + AlgebraElement::monomial(
                                    A, m.s + 1, m.j + e,
                                    c * ae * A.qpow(e * k));
            }
            break;
        case Gen::H:
            if (m.s >= 0) {
                out = out + AlgebraElement::monomial(A, m.s, m.j + 1, c);
            } else {
                // x h = q h x applied once per x: x^k h = q^k h x^k.
                out = out + AlgebraElement::monomial(A, m.s, m.j + 1,
                                                     c * A.qpow(-m.s));
            }
            break;
        case Gen::Hinv:
            if (A.ring() != RingFlag::Laurent)
                throw InvalidGenerator("h^-1 exists only over the Laurent ring");
            if (m.s >= 0) {
                out = out + AlgebraElement::monomial(A, m.s, m.j - 1, c);
            } else {
                // x h^{-1} = q^{-1} h^{-1} x, once per x.
                out = out + AlgebraElement::monomial(A, m.s, m.j - 1,
                                                     c * A.qpow(m.s));
            }
            break;
        case Gen::X:
            if (m.s <= 0) {
                out = out + AlgebraElement::monomial(A, m.s - 1, m.j, c);
            } else {
                // h^j x = q^{-j} x h^j, then peel one y: y x = a(h).
                for (const auto& [e, ae] : A.a().terms())
                    out = out + AlgebraElement::monomial(
                                    A, m.s - 1, e + m.j,
                                    c * ae * A.qpow(-m.j));
            }
            break;
    }
}

}  // namespace

AlgebraElement mul_gen(const AlgebraElement& u, Gen g) {
    AlgebraElement out = AlgebraElement::zero(u.spec());
    for (const auto& [m, c] : u.terms()) term_times_gen(u.spec(), m, c, g, out);
    return out;
}

AlgebraElement word_monomial(const AlgebraSpec& A, const Word& w,
                             const FieldElement& c) {
    AlgebraElement acc = AlgebraElement::scalar(A, c);
    for (Gen g : w) acc = mul_gen(acc, g);
    return acc;
}

AlgebraElement from_word(const AlgebraSpec& A,
                         const std::vector<std::pair<FieldElement, Word>>& sum) {
    AlgebraElement acc = AlgebraElement::zero(A);
    for (const auto& [c, w] : sum) acc = acc + word_monomial(A, w, c);
    return acc;
}

Word word_of_monomial(const StdMonomial& m) {
    Word w;
    for (long i = 0; i < m.yexp(); ++i) w.push_back(Gen::Y);
    for (long j = 0; j < m.j; ++j) w.push_back(Gen::H);
    for (long j = 0; j > m.j; --j) w.push_back(Gen::Hinv);
    for (long k = 0; k < m.xexp(); ++k) w.push_back(Gen::X);
    return w;
}

}  // namespace qgwa
