#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qgwa/rational.hpp"

namespace qgwa {

// The coefficient field k: either Q or a cyclotomic field Q(zeta_n).
struct FieldSpec {
    enum class Kind { Rationals, Cyclotomic };

    Kind kind = Kind::Rationals;
    long n = 0;  // conductor, meaningful for Cyclotomic only

    static FieldSpec rationals() { return FieldSpec{}; }
    static FieldSpec cyclotomic(long n);

    // Extension degree over Q (1 for Rationals, phi(n) otherwise).
    long degree() const;
    // Order of the group of roots of unity contained in the field
    // (2 for Rationals, lcm(2, n) otherwise).
    long unity_order() const;

    bool operator==(const FieldSpec&) const = default;
    std::string to_string() const;
};

// An element of the field, held exactly. Cyclotomic elements are stored as
// coordinate vectors in the power basis 1, z, ..., z^{phi(n)-1} where z is a
// primitive n-th root of unity, reduced modulo the n-th cyclotomic polynomial.
class FieldElement {
public:
    FieldElement() : FieldElement(FieldSpec::rationals(), {Rational(0)}) {}

    static FieldElement zero(const FieldSpec& f);
    static FieldElement one(const FieldSpec& f);
    static FieldElement from_rational(const FieldSpec& f, const Rational& r);
    static FieldElement from_long(const FieldSpec& f, long v);
    // The canonical generator zeta_n (errors for Rationals).
    static FieldElement zeta(const FieldSpec& f);
    // A primitive m-th root of unity, when the field contains one.
    static FieldElement root_of_unity(const FieldSpec& f, long m);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    Rational as_rational() const;  // pre: is_rational()
    const std::vector<Rational>& coords() const { return coords_; }

    FieldElement operator-() const;
    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;  // DivisionByZero
    FieldElement inverse() const;
    FieldElement pow(long e) const;  // negative e inverts first

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    FieldElement(FieldSpec f, std::vector<Rational> coords);
    void check_same_field(const FieldElement& o, const char* op) const;

    FieldSpec field_;
    std::vector<Rational> coords_;  // size == field_.degree()
};

// Least m >= 1 with e^m == 1, absent when e has infinite (or no) torsion
// order. Exact: finite orders always divide unity_order().
std::optional<long> order_as_root_of_unity(const FieldElement& e);

// Result of a g-th root search. When `root` is absent, `search_complete`
// says whether that absence is a proof (true) or only the exhaustion of the
// restricted search regime r * zeta^t with r rational (false).
struct RootSearch {
    std::optional<FieldElement> root;
    bool search_complete = true;
};

// Finds beta in the field with beta^g == c (c != 0, g >= 1), if possible.
// Over Q the search is complete; over Q(zeta_n) it covers every root of the
// form r * zeta^t and reports `search_complete = false` on absent answers.
RootSearch root_in_field(const FieldElement& c, long g);

// Coefficients of the n-th cyclotomic polynomial, ascending, monic.
std::vector<Integer> cyclotomic_polynomial(long n);

long euler_phi(long n);

}  // namespace qgwa
