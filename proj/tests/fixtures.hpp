#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "qgwa/algebra.hpp"

namespace fx {

using namespace qgwa;

inline LaurentPoly poly_of(const FieldSpec& f, RingFlag ring,
                           std::initializer_list<std::pair<long, long>> terms) {
    LaurentPoly p(f, ring);
    for (const auto& [e, c] : terms) p.add_term(e, FieldElement::from_long(f, c));
    return p;
}

// Q, polynomial ring, q = -1, a = h^2 - 1.
inline AlgebraSpec qm1_poly_h2m1() {
    auto f = FieldSpec::rationals();
    return AlgebraSpec::make(f, RingFlag::Poly, FieldElement::from_long(f, -1),
                             poly_of(f, RingFlag::Poly, {{2, 1}, {0, -1}}));
}

// Q(zeta_3), polynomial ring, q = zeta_3, a = h^3 + h.
inline AlgebraSpec z3_poly_h3ph() {
    auto f = FieldSpec::cyclotomic(3);
    return AlgebraSpec::make(f, RingFlag::Poly, FieldElement::zeta(f),
                             poly_of(f, RingFlag::Poly, {{3, 1}, {1, 1}}));
}

// Q(zeta_4), polynomial ring, q = zeta_4, a = h^2 - 1.
inline AlgebraSpec z4_poly_h2m1() {
    auto f = FieldSpec::cyclotomic(4);
    return AlgebraSpec::make(f, RingFlag::Poly, FieldElement::zeta(f),
                             poly_of(f, RingFlag::Poly, {{2, 1}, {0, -1}}));
}

// Q, polynomial ring, q = 2 (not a root of unity), a = 3: the unit case
// over the polynomial ring.
inline AlgebraSpec q2_poly_const3() {
    auto f = FieldSpec::rationals();
    return AlgebraSpec::make(f, RingFlag::Poly, FieldElement::from_long(f, 2),
                             poly_of(f, RingFlag::Poly, {{0, 3}}));
}

// Q, Laurent ring, q = -1, a = h + 2 + h^-1 (symmetric).
inline AlgebraSpec qm1_lau_sym() {
    auto f = FieldSpec::rationals();
    return AlgebraSpec::make(f, RingFlag::Laurent, FieldElement::from_long(f, -1),
                             poly_of(f, RingFlag::Laurent, {{1, 1}, {0, 2}, {-1, 1}}));
}

// Q(zeta_3), Laurent ring, q = zeta_3, a = h^3: the unit case over the
// Laurent ring.
inline AlgebraSpec z3_lau_h3() {
    auto f = FieldSpec::cyclotomic(3);
    return AlgebraSpec::make(f, RingFlag::Laurent, FieldElement::zeta(f),
                             poly_of(f, RingFlag::Laurent, {{3, 1}}));
}

// Q(zeta_4), Laurent ring, q = zeta_4, a = h + 1.
inline AlgebraSpec z4_lau_hp1() {
    auto f = FieldSpec::cyclotomic(4);
    return AlgebraSpec::make(f, RingFlag::Laurent, FieldElement::zeta(f),
                             poly_of(f, RingFlag::Laurent, {{1, 1}, {0, 1}}));
}

// Q, Laurent ring, q = 2, a = h^2: unit case with a positive shift.
inline AlgebraSpec q2_lau_h2() {
    auto f = FieldSpec::rationals();
    return AlgebraSpec::make(f, RingFlag::Laurent, FieldElement::from_long(f, 2),
                             poly_of(f, RingFlag::Laurent, {{2, 1}}));
}

inline std::vector<AlgebraSpec> all_fixtures() {
    return {qm1_poly_h2m1(), z3_poly_h3ph(), z4_poly_h2m1(), q2_poly_const3(),
            qm1_lau_sym(),   z3_lau_h3(),    z4_lau_hp1(),   q2_lau_h2()};
}

inline std::vector<AlgebraSpec> unit_fixtures() {
    return {q2_poly_const3(), z3_lau_h3(), q2_lau_h2()};
}

}  // namespace fx
