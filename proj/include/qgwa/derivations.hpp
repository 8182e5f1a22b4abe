#pragma once

#include <optional>
#include <vector>

#include "qgwa/algebra.hpp"

namespace qgwa {

// A derivation of the algebra, stored by its images on the generators y, h
// and x. The image of h^{-1} in the Laurent case is derived as
// -h^{-1} d(h) h^{-1}. Instances are only produced once the four
// relation-consistency identities have been verified.
class DerivationSpec {
  public:
    const AlgebraSpec& spec() const { return spec_; }
    const AlgebraElement& img_y() const { return img_y_; }
    const AlgebraElement& img_h() const { return img_h_; }
    const AlgebraElement& img_x() const { return img_x_; }

    bool operator==(const DerivationSpec& o) const {
        return img_y_ == o.img_y_ && img_h_ == o.img_h_ && img_x_ == o.img_x_;
    }
    bool operator!=(const DerivationSpec& o) const { return !(*this == o); }

  private:
    DerivationSpec(AlgebraSpec spec, AlgebraElement dy, AlgebraElement dh,
                   AlgebraElement dx)
        : spec_(std::move(spec)), img_y_(std::move(dy)), img_h_(std::move(dh)),
          img_x_(std::move(dx)) {}

    AlgebraSpec spec_;
    AlgebraElement img_y_, img_h_, img_x_;

    friend DerivationSpec derivation_from_images(const AlgebraSpec&,
                                                 const AlgebraElement&,
                                                 const AlgebraElement&,
                                                 const AlgebraElement&);
};

// Builds the derivation with the given generator images after checking that
// the Leibniz rule applied to each defining relation normalizes to zero.
// Throws InconsistentImages naming the violated relation.
DerivationSpec derivation_from_images(const AlgebraSpec& A,
                                      const AlgebraElement& img_y,
                                      const AlgebraElement& img_h,
                                      const AlgebraElement& img_x);

// d extended to the whole algebra: linear in the terms and Leibniz over the
// factors of each standard monomial.
AlgebraElement apply(const DerivationSpec& d, const AlgebraElement& u);

// The largest r <= bound with d^r(u) != 0 and d^{r+1}(u) = 0, or absent when
// d^{bound+1}(u) != 0. Throws ZeroElement on u = 0.
std::optional<long> deg_d(const DerivationSpec& d, const AlgebraElement& u,
                          long bound);

// Bounded local-finiteness probe: true iff for each generator v in {y,h,x}
// the iterates v, d(v), ..., d^bound(v) become linearly dependent within the
// bound (so their span has stabilized and is d-invariant). A probe, not a
// proof.
bool is_locally_finite_probe(const DerivationSpec& d, long bound);

// The Eulerian derivation: y -> y, h -> 0, x -> -x. Diagonal on standard
// monomials with eigenvalue the weight.
DerivationSpec xi(const AlgebraSpec& A);

// The derivation h -> h, x -> N x, y -> 0 where N is the top exponent of a.
// Consistent exactly when a is a monomial; non-monomial a throws
// InconsistentImages.
DerivationSpec tau(const AlgebraSpec& A);

// Basis of the space of derivations homogeneous of the given weight whose
// generator-image coefficient polynomials have h-exponents bounded by
// deg_bound (absolute value in the Laurent case), computed as the exact
// nullspace of the four relation-consistency identities.
std::vector<DerivationSpec> derivation_space(const AlgebraSpec& A, long weight,
                                             long deg_bound);

// Basis of the locally finite derivations. These are homogeneous of weight
// zero and diagonal on the standard monomials (images c1*y, c2*h, c3*x), so
// the solve runs over that three-parameter family: spanned by xi alone for
// non-monomial a, and by xi and tau when a is a monomial.
std::vector<DerivationSpec> locally_finite_derivation_space(const AlgebraSpec& A);

}  // namespace qgwa
