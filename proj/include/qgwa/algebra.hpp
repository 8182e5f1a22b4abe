#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "qgwa/errors.hpp"
#include "qgwa/field.hpp"
#include "qgwa/poly.hpp"

namespace qgwa {

// Standard basis monomial y^i h^j x^k with ik = 0, encoded by
// s = i - k (so i = max(s,0), k = max(-s,0)) and the h-exponent j.
// The weight of the monomial under the Z-grading is s.
struct StdMonomial {
    long s = 0;
    long j = 0;

    long yexp() const { return s > 0 ? s : 0; }
    long xexp() const { return s < 0 ? -s : 0; }
    long weight() const { return s; }

    friend auto operator<=>(const StdMonomial&, const StdMonomial&) = default;
};

// Immutable description of the algebra A(D, q, a): base ring D (polynomials
// or Laurent polynomials in h over the field), the commutation scalar q and
// the defining polynomial a. Derived data (unit flag, order of q, support
// bounds and the gap gcd of a) is computed once at construction.
class AlgebraSpec {
  public:
    // Validates q not in {0, 1}, a != 0, a compatible with the ring flag and
    // all scalars drawn from the same field. Throws ValidationError.
    static AlgebraSpec make(const FieldSpec& field, RingFlag ring,
                            const FieldElement& q, const LaurentPoly& a);

    const FieldSpec& field() const { return d_->field; }
    RingFlag ring() const { return d_->ring; }
    const FieldElement& q() const { return d_->q; }
    const LaurentPoly& a() const { return d_->a; }

    bool unit_case() const { return d_->unit; }
    std::optional<long> q_order() const { return d_->qord; }
    bool q_is_minus_one() const { return d_->qord && *d_->qord == 2; }
    long min_support() const { return d_->min_sup; }  // least exponent of a
    long max_support() const { return d_->max_sup; }  // greatest exponent of a
    long gap() const { return d_->gap; }              // gap_gcd(a)

    FieldElement qpow(long e) const { return d_->q.pow(e); }

    // Structural equality: same field, ring flag, q and a.
    bool operator==(const AlgebraSpec& o) const;
    bool operator!=(const AlgebraSpec& o) const { return !(*this == o); }

    std::string to_string() const;

  private:
    struct Data {
        FieldSpec field;
        RingFlag ring;
        FieldElement q;
        LaurentPoly a;
        bool unit;
        std::optional<long> qord;
        long min_sup;
        long max_sup;
        long gap;
    };
    std::shared_ptr<const Data> d_;
    explicit AlgebraSpec(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
};

// An element of A in the standard monomial basis: a finite sum of
// StdMonomial terms with nonzero coefficients. Value type; all arithmetic
// returns normal forms.
class AlgebraElement {
  public:
    static AlgebraElement zero(const AlgebraSpec& A);
    static AlgebraElement one(const AlgebraSpec& A);
    static AlgebraElement scalar(const AlgebraSpec& A, const FieldElement& c);
    static AlgebraElement monomial(const AlgebraSpec& A, long s, long j,
                                   const FieldElement& c);
    static AlgebraElement gen_y(const AlgebraSpec& A);
    static AlgebraElement gen_h(const AlgebraSpec& A);
    static AlgebraElement gen_hinv(const AlgebraSpec& A);  // Laurent ring only
    static AlgebraElement gen_x(const AlgebraSpec& A);
    // Embeds f(h) as the weight-zero element with the same coefficients.
    static AlgebraElement from_poly(const AlgebraSpec& A, const LaurentPoly& f);

    const AlgebraSpec& spec() const { return spec_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<StdMonomial, FieldElement>& terms() const { return terms_; }
    FieldElement coeff(long s, long j) const;

    AlgebraElement operator-() const;
    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator*(const AlgebraElement& o) const;
    AlgebraElement operator*(const FieldElement& c) const;
    // Nonnegative exponents always work; negative exponents require an
    // invertible monomial (see invert_monomial) and throw ValidationError
    // otherwise.
    AlgebraElement pow(long e) const;

    bool operator==(const AlgebraElement& o) const;
    bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

    // Splits into homogeneous parts: weight r -> sum of terms with s = r.
    std::map<long, AlgebraElement> weight_components() const;
    // The common weight when the element is nonzero and homogeneous.
    std::optional<long> homogeneous_weight() const;

    std::string to_string() const;

  private:
    explicit AlgebraElement(const AlgebraSpec& A) : spec_(A) {}
    void add_term(const StdMonomial& m, const FieldElement& c);
    static void check_same(const AlgebraElement& a, const AlgebraElement& b);

    AlgebraSpec spec_;
    std::map<StdMonomial, FieldElement> terms_;
};

inline AlgebraElement operator*(const FieldElement& c, const AlgebraElement& u) {
    return u * c;
}

// Rank of the free abelian part of the unit group of A modulo scalars,
// as a function of the unit flag and the base ring: 0 when a is not a
// unit, 1 for the polynomial ring and 2 for the Laurent ring otherwise.
int units_mod_scalars_rank(const AlgebraSpec& A);

// Inverse of a single-term element when it is invertible in A: scalars
// always, h-powers in the Laurent ring, and any monomial in the unit case
// (where x is invertible). Absent for everything else, including sums.
std::optional<AlgebraElement> invert_monomial(const AlgebraElement& u);

// f evaluated at u, i.e. sum of f_e * u^e. Negative exponents of f require
// u to be an invertible monomial; throws NonInvertibleImageOfH otherwise.
AlgebraElement evaluate_poly_at(const LaurentPoly& f, const AlgebraElement& u);

// Skew-Laurent view of the unit case, where a = alpha * h^N is invertible,
// y = a * x^{-1} can be eliminated and A is spanned by monomials h^m x^n.
// Both conversions throw UnitCaseOnly when a is not a unit.
struct SkewMonomial {
    long m = 0;  // h-exponent
    long n = 0;  // x-exponent
    friend auto operator<=>(const SkewMonomial&, const SkewMonomial&) = default;
};

std::pair<SkewMonomial, FieldElement> std_to_skew(const AlgebraSpec& A,
                                                  const StdMonomial& mono,
                                                  const FieldElement& c);
std::pair<StdMonomial, FieldElement> skew_to_std(const AlgebraSpec& A,
                                                 const SkewMonomial& mono,
                                                 const FieldElement& c);

}  // namespace qgwa
