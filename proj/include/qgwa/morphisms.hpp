#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qgwa/algebra.hpp"

namespace qgwa {

// An algebra map given by generator images in the target. Construction
// checks structure only (same field, images in the target, and an
// invertible image of h when the source has Laurent base ring); whether the
// defining relations are preserved is the business of verify_morphism.
class MorphismSpec {
  public:
    const AlgebraSpec& source() const { return source_; }
    const AlgebraSpec& target() const { return target_; }
    const AlgebraElement& img_y() const { return img_y_; }
    const AlgebraElement& img_h() const { return img_h_; }
    const AlgebraElement& img_x() const { return img_x_; }

    bool operator==(const MorphismSpec& o) const {
        return source_ == o.source_ && target_ == o.target_ &&
               img_y_ == o.img_y_ && img_h_ == o.img_h_ && img_x_ == o.img_x_;
    }
    bool operator!=(const MorphismSpec& o) const { return !(*this == o); }

  private:
    MorphismSpec(AlgebraSpec s, AlgebraSpec t, AlgebraElement iy,
                 AlgebraElement ih, AlgebraElement ix)
        : source_(std::move(s)), target_(std::move(t)), img_y_(std::move(iy)),
          img_h_(std::move(ih)), img_x_(std::move(ix)) {}

    AlgebraSpec source_, target_;
    AlgebraElement img_y_, img_h_, img_x_;

    friend MorphismSpec make_morphism(const AlgebraSpec&, const AlgebraSpec&,
                                      const AlgebraElement&,
                                      const AlgebraElement&,
                                      const AlgebraElement&);
};

// Structural constructor. Throws MixedAlgebras when an image lives outside
// the target, MixedFields when source and target fields differ, and
// NonInvertibleImageOfH when the source is Laurent but img_h is not an
// invertible monomial of the target.
MorphismSpec make_morphism(const AlgebraSpec& source, const AlgebraSpec& target,
                           const AlgebraElement& img_y,
                           const AlgebraElement& img_h,
                           const AlgebraElement& img_x);

MorphismSpec identity_morphism(const AlgebraSpec& A);

// Outcome of checking the four defining relations on the images; failing
// lists the violated relations by name.
struct VerifyReport {
    bool ok = false;
    std::vector<std::string> failing;
};

// Checks img_h*img_y = q1*img_y*img_h, img_x*img_h = q1*img_h*img_x,
// img_y*img_x = a1(img_h) and img_x*img_y = a1(q1*img_h), with q1 and a1
// taken from the source.
VerifyReport verify_morphism(const MorphismSpec& m);

// The image of u under m: substitute the generator images into each
// standard monomial of u.
AlgebraElement apply(const MorphismSpec& m, const AlgebraElement& u);

// The automorphism y -> mu*y, h -> gamma*h, x -> mu^{-1} gamma^{i0} x where
// i0 is the top support exponent of a over the polynomial ring and the
// bottom one over the Laurent ring. Requires mu != 0 and gamma^g = 1 for
// g = gap(a) (any nonzero gamma when g = 0); throws GammaNotInCg otherwise.
MorphismSpec eta(const AlgebraSpec& A, const FieldElement& gamma,
                 const FieldElement& mu);

// The involution y -> x, h -> -h, x -> y; exists exactly when q = -1.
MorphismSpec omega(const AlgebraSpec& A);

// Laurent ring only: the automorphism y -> x, h -> q^{-1} gamma h^{-1},
// x -> delta q^{-l} y h^{-l} built from the symmetry witness of a; absent
// when a is not symmetric.
std::optional<MorphismSpec> omega_sym(const AlgebraSpec& A);

// Laurent ring with q = -1: y -> x, h -> qh, x -> y.
MorphismSpec omega_minus1(const AlgebraSpec& A);

// Integer 2x2 matrix, row-major.
struct Mat2 {
    long m11 = 1, m12 = 0, m21 = 0, m22 = 1;

    long det() const { return m11 * m22 - m12 * m21; }
    Mat2 operator*(const Mat2& o) const {
        return {m11 * o.m11 + m12 * o.m21, m11 * o.m12 + m12 * o.m22,
                m21 * o.m11 + m22 * o.m21, m21 * o.m12 + m22 * o.m22};
    }
    // Inverse for det = +-1.
    Mat2 inverse() const {
        const long d = det();
        return {m22 * d, -m12 * d, -m21 * d, m11 * d};
    }
    friend bool operator==(const Mat2&, const Mat2&) = default;
};

// Automorphism of the unit case (a = alpha h^N) described in the
// skew-Laurent picture. Over the polynomial ring the matrix acts on the
// basis (x, h): M = (eps l; 0 1) sends x -> x^eps and h -> h x^l, with
// eps = 1 unless q = -1. Over the Laurent ring it acts on (h, x): the
// columns give the (h-exponent, x-exponent) of the images of h and x, and
// det M = 1, or +-1 when q = -1. The torus components scale the two images
// in basis order, and the image of y is a(img of h) * (img of x)^{-1}.
// Throws UnitCaseOnly, MatrixNotInH, or ValidationError (zero torus).
MorphismSpec unit_case_automorphism(
    const AlgebraSpec& A, const Mat2& M,
    const std::pair<FieldElement, FieldElement>& torus);

// Same image construction without the membership test on M; the result may
// fail verify_morphism. Intended for probing which matrices act.
MorphismSpec unit_case_images(const AlgebraSpec& A, const Mat2& M,
                              const std::pair<FieldElement, FieldElement>& torus);

// Reads the matrix back off a unit-case morphism with monomial images.
Mat2 unit_matrix_of(const MorphismSpec& m);

// m2 after m1. Throws NotComposable unless target(m1) = source(m2).
MorphismSpec compose(const MorphismSpec& m2, const MorphismSpec& m1);

// Inverse of a morphism whose images are single monomials, found by
// pattern-matching against the recognized families and verified by
// composing both ways; absent when no verified inverse is found. Images
// with more than one term throw NotRecognizedInvertible.
std::optional<MorphismSpec> invert(const MorphismSpec& m);

}  // namespace qgwa
