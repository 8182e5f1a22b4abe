#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qgwa/morphisms.hpp"

namespace qgwa {

enum class QMatch { Same, Inverted };

// Constructive certificate that two algebras are isomorphic: q2 agrees with
// q1 or its inverse, and a2(h) = alpha * a1(beta * h^eps) holds exactly,
// with alpha a unit of the base ring (a scalar, or scalar * h^m over the
// Laurent ring). Over the polynomial ring eps = +1 and alpha is a scalar.
struct IsoWitness {
    int eps = 1;  // +1 or -1
    FieldElement beta;
    LaurentPoly alpha;
    QMatch q_match = QMatch::Same;
};

// Outcome of the isomorphism decision. When no witness is returned,
// search_complete tells whether absence is a proof: the only incomplete
// branch is a root search in a cyclotomic field that falls outside the
// regime where membership is decided exactly.
struct IsoResult {
    std::optional<IsoWitness> witness;
    bool search_complete = true;

    bool isomorphic() const { return witness.has_value(); }
};

// Decides whether the two algebras are isomorphic and produces a witness
// when they are. Requires the same field and the same base ring; throws
// MixedFields / MixedRings otherwise.
IsoResult decide_isomorphic(const AlgebraSpec& A1, const AlgebraSpec& A2);

enum class AutCase { NonUnit, UnitPoly, UnitLaurent };

// Shape of the exponent-matrix group acting in the unit case.
enum class HShape {
    None,            // non-unit case
    UpperUni,        // (1 l; 0 1)
    UpperPlusMinus,  // (eps l; 0 1), eps = +-1 (polynomial ring, q = -1)
    SL2,             // det = 1
    GL2,             // det = +-1 (Laurent ring, q = -1)
};

// Symbolic description of the automorphism group. In the non-unit case the
// group is generated by the scaling family eta (a torus k^x and the cyclic
// constraint group C_g of order cg_order, 0 meaning all of k^x) together
// with the flagged involutions. In the unit cases it is a rank-2 torus
// extended by the matrix group of shape h_shape.
struct AutDescriptor {
    AutCase kind = AutCase::NonUnit;
    long g = 0;             // gap gcd of the support of a
    int torus_rank = 1;
    long cg_order = 0;      // order of C_g; 0 means all of k^x
    long exponent = 0;      // top support exponent of a
    bool has_omega = false;      // q = -1
    bool has_omega_sym = false;  // Laurent ring and a symmetric
    HShape h_shape = HShape::None;

    friend bool operator==(const AutDescriptor&, const AutDescriptor&) = default;
};

AutDescriptor automorphism_group(const AlgebraSpec& A);

// Parameter pools for instantiating descriptor elements: nonzero scalars
// for the torus parts, and exponent matrices for the unit cases (a default
// set is used when empty).
struct SampleParams {
    std::vector<FieldElement> scalars;
    std::vector<Mat2> matrices;
};

// Concrete verified automorphisms realizing elements of the descriptor's
// group: the eta family over the sampled scalars and every gamma in C_g,
// the flagged involutions, and unit-case matrix actions with sampled torus
// parts. Every returned morphism passes verify_morphism.
std::vector<MorphismSpec> sample_automorphisms(const AlgebraSpec& A,
                                               const AutDescriptor& d,
                                               const SampleParams& params);

// The nonzero roots of z^g = 1 available in the field; g = 0 is rejected
// (the constraint group is infinite) with ValidationError.
std::vector<FieldElement> roots_of_unity_in_field(const FieldSpec& f, long g);

// Boundary indecomposables of the monoid generated by (1,0), (0,1) and
// (-1,N) inside [-radius, radius]^2. Requires N >= 1 and radius >= N + 2
// (ValidationError otherwise); the result is radius-independent from there
// on and equals {(1,0), (-1,N)}.
std::set<std::pair<long, long>> lambda_indecomposables(long N, long radius);

// Exhaustive small-grid audit of the automorphism classification: every
// candidate with monomial images h -> gamma h^{+-1}, y/x -> scalar * (y or
// x) * h^m is verified, and each verified one must be recognized inside the
// descriptor's group. Unrecognized survivors are reported as failures.
struct AutGrids {
    std::vector<FieldElement> gammas;
    std::vector<FieldElement> scalars;
    long max_h_exponent = 2;  // |m| bound for unit parts over Laurent
};

struct CrossCheckReport {
    long candidates = 0;
    long verified = 0;
    long recognized = 0;
    std::vector<std::string> failures;  // printed images of unrecognized ones

    bool ok() const { return failures.empty(); }
};

CrossCheckReport cross_check_aut(const AlgebraSpec& A, const AutGrids& grids);

}  // namespace qgwa
