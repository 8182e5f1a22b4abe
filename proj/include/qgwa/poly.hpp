#pragma once

#include <map>
#include <optional>
#include <string>

#include "qgwa/field.hpp"

namespace qgwa {

// Coefficient ring of the algebra: k[h] or k[h, h^-1].
enum class RingFlag { Poly, Laurent };

std::string to_string(RingFlag r);

// Witness for the reflection identity  delta * f(h) = h^l * f(gamma * h^-1).
struct SymmetryWitness {
    long l;
    FieldElement gamma;
    FieldElement delta;
};

// A (Laurent) polynomial in h over the field, stored sparsely and kept
// canonical (no explicit zero coefficients).
class LaurentPoly {
public:
    LaurentPoly() : LaurentPoly(FieldSpec::rationals(), RingFlag::Poly) {}
    LaurentPoly(const FieldSpec& f, RingFlag ring) : field_(f), ring_(ring) {}

    static LaurentPoly zero(const FieldSpec& f, RingFlag ring) { return LaurentPoly(f, ring); }
    static LaurentPoly constant(const FieldSpec& f, RingFlag ring, const FieldElement& c);
    static LaurentPoly monomial(const FieldSpec& f, RingFlag ring, long exp, const FieldElement& c);
    static LaurentPoly h(const FieldSpec& f, RingFlag ring);

    const FieldSpec& field() const { return field_; }
    RingFlag ring() const { return ring_; }
    const std::map<long, FieldElement>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }
    long min_exp() const;  // pre: nonzero
    long max_exp() const;  // pre: nonzero
    FieldElement coeff(long exp) const;

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator*(const FieldElement& s) const;
    LaurentPoly pow(long e) const;  // e >= 0

    bool operator==(const LaurentPoly& o) const;
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    std::string to_string() const;

    // Adds c * h^exp in place (validating the exponent against the ring flag).
    void add_term(long exp, const FieldElement& c);

private:
    void check_compatible(const LaurentPoly& o, const char* op) const;

    FieldSpec field_;
    RingFlag ring_;
    std::map<long, FieldElement> terms_;
};

// f(c * h^eps) as a polynomial in h; eps is +1 or -1. Substituting h^-1 into
// a plain polynomial ring is rejected unless f is constant.
LaurentPoly twist(const LaurentPoly& f, const FieldElement& c, int eps);

// gcd of all support gaps of f (0 for monomials). f must be nonzero.
long gap_gcd(const LaurentPoly& f);

// True when f is a unit of its coefficient ring: a nonzero constant in k[h],
// a nonzero monomial in k[h, h^-1].
bool is_unit(const LaurentPoly& f);

// Searches for (l, gamma, delta) with delta * f(h) = h^l * f(gamma * h^-1).
// gamma is resolved through root_in_field, so over higher cyclotomic fields
// an absent answer inherits that search's restricted regime.
std::optional<SymmetryWitness> is_symmetric(const LaurentPoly& f);

}  // namespace qgwa
