#include "qgwa/classify.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace qgwa {

namespace {

std::vector<long> support_of(const LaurentPoly& f) {
    std::vector<long> s;
    for (const auto& [e, c] : f.terms()) s.push_back(e);
    return s;  // ascending
}

// Extended gcd: g = |gcd(a, b)| with u*a + v*b = g.
struct Ext {
    long g, u, v;
};

Ext extgcd(long a, long b) {
    if (b == 0) return a >= 0 ? Ext{a, 1, 0} : Ext{-a, -1, 0};
    Ext r = extgcd(b, a % b);
    return {r.g, r.v, r.u - (a / b) * r.v};
}

}  // namespace

IsoResult decide_isomorphic(const AlgebraSpec& A1, const AlgebraSpec& A2) {
    if (!(A1.field() == A2.field())) throw MixedFields("isomorphism test");
    if (A1.ring() != A2.ring()) throw MixedRings("isomorphism test");
    const auto f = A1.field();

    std::optional<QMatch> qm;
    if (A2.q() == A1.q())
        qm = QMatch::Same;
    else if (A2.q() == A1.q().inverse())
        qm = QMatch::Inverted;
    if (!qm) return {std::nullopt, true};

    const auto& a1 = A1.a();
    const auto& a2 = A2.a();
    if (A1.unit_case() != A2.unit_case()) return {std::nullopt, true};
    if (A1.unit_case()) {
        // The q condition settles the unit case; rescaling by a2/a1 is a
        // witness with beta = 1.
        IsoWitness w;
        w.beta = FieldElement::one(f);
        w.alpha = LaurentPoly::monomial(
            f, A1.ring(), a2.min_exp() - a1.min_exp(),
            a2.coeff(a2.min_exp()) / a1.coeff(a1.min_exp()));
        w.q_match = *qm;
        return {w, true};
    }

    // Non-units: a twist can't turn a monomial into a longer polynomial.
    if ((a1.term_count() == 1) != (a2.term_count() == 1))
        return {std::nullopt, true};

    const bool laurent = A1.ring() == RingFlag::Laurent;
    const auto S1 = support_of(a1);
    const auto S2 = support_of(a2);
    const long i0 = S1.front();
    bool incomplete = false;

    for (int eps : laurent ? std::vector<int>{1, -1} : std::vector<int>{1}) {
        // The h-power of alpha is pinned by aligning support endpoints.
        long m = 0;
        if (laurent) {
            const long top1 = eps == 1 ? S1.back() : -S1.front();
            m = S2.back() - top1;
        }
        std::vector<long> mapped;
        for (long i : S1) mapped.push_back(m + eps * i);
        std::sort(mapped.begin(), mapped.end());
        if (mapped != S2) continue;

        // Coefficient ratios relative to the anchor force beta^{i-i0};
        // a Bezout combination pins c = beta^{g1}.
        const FieldElement base = a2.coeff(m + eps * i0) / a1.coeff(i0);
        long g = 0;
        FieldElement c = FieldElement::one(f);
        std::vector<std::pair<long, FieldElement>> ratios;
        for (long i : S1) {
            if (i == i0) continue;
            FieldElement r = (a2.coeff(m + eps * i) / a1.coeff(i)) / base;
            ratios.emplace_back(i - i0, r);
            Ext e = extgcd(g, i - i0);
            c = c.pow(e.u) * r.pow(e.v);
            g = e.g;
        }

        FieldElement beta = FieldElement::one(f);
        if (g != 0) {
            bool consistent = true;
            for (const auto& [d, r] : ratios)
                if (!(c.pow(d / g) == r)) {
                    consistent = false;
                    break;
                }
            if (!consistent) continue;
            auto rs = root_in_field(c, g);
            if (!rs.root) {
                if (!rs.search_complete) incomplete = true;
                continue;
            }
            beta = *rs.root;
        }

        const FieldElement alpha0 =
            a2.coeff(m + eps * i0) / (a1.coeff(i0) * beta.pow(i0));
        const LaurentPoly alpha = LaurentPoly::monomial(f, A1.ring(), m, alpha0);
        if (alpha * twist(a1, beta, eps) == a2)
            return {IsoWitness{eps, beta, alpha, *qm}, true};
    }
    return {std::nullopt, !incomplete};
}

AutDescriptor automorphism_group(const AlgebraSpec& A) {
    AutDescriptor d;
    d.g = A.gap();
    d.exponent = A.max_support();
    d.has_omega = A.q_is_minus_one();
    d.has_omega_sym =
        A.ring() == RingFlag::Laurent && is_symmetric(A.a()).has_value();
    if (A.unit_case()) {
        d.torus_rank = 2;
        d.cg_order = 0;
        if (A.ring() == RingFlag::Poly) {
            d.kind = AutCase::UnitPoly;
            d.h_shape =
                A.q_is_minus_one() ? HShape::UpperPlusMinus : HShape::UpperUni;
        } else {
            d.kind = AutCase::UnitLaurent;
            d.h_shape = A.q_is_minus_one() ? HShape::GL2 : HShape::SL2;
        }
        return d;
    }
    d.kind = AutCase::NonUnit;
    d.torus_rank = 1;
    d.cg_order = d.g;
    d.h_shape = HShape::None;
    return d;
}

std::vector<FieldElement> roots_of_unity_in_field(const FieldSpec& f, long g) {
    if (g <= 0) throw ValidationError("order must be a positive integer");
    const long L = f.unity_order();
    FieldElement gen = FieldElement::from_long(f, -1);  // primitive for Q
    if (!(f == FieldSpec::rationals())) {
        gen = FieldElement::zeta(f);
        if (order_as_root_of_unity(gen) != L) gen = -gen;
    }
    const long d = std::gcd(g, L);
    const FieldElement step = gen.pow(L / d);
    std::vector<FieldElement> out;
    FieldElement cur = FieldElement::one(f);
    for (long t = 0; t < d; ++t) {
        out.push_back(cur);
        cur = cur * step;
    }
    return out;
}

std::vector<MorphismSpec> sample_automorphisms(const AlgebraSpec& A,
                                               const AutDescriptor& d,
                                               const SampleParams& params) {
    std::vector<MorphismSpec> out;
    auto push = [&](const MorphismSpec& m) {
        if (!verify_morphism(m).ok)
            throw ValidationError("sampled automorphism failed verification");
        out.push_back(m);
    };
    const auto f = A.field();
    std::vector<FieldElement> scalars;
    for (const auto& s : params.scalars)
        if (!s.is_zero()) scalars.push_back(s);
    if (scalars.empty())
        scalars = {FieldElement::one(f), FieldElement::from_long(f, 2)};

    if (d.kind == AutCase::NonUnit) {
        const auto gammas = d.cg_order == 0
                                ? scalars
                                : roots_of_unity_in_field(f, d.cg_order);
        for (const auto& g1 : gammas)
            for (const auto& mu : scalars) push(eta(A, g1, mu));
        if (d.has_omega) push(omega(A));
        if (d.has_omega_sym)
            if (auto os = omega_sym(A)) push(*os);
        if (A.ring() == RingFlag::Laurent && A.q_is_minus_one())
            push(omega_minus1(A));
        return out;
    }

    std::vector<Mat2> mats = params.matrices;
    if (mats.empty()) {
        if (d.kind == AutCase::UnitPoly) {
            mats = {Mat2{}, Mat2{1, 1, 0, 1}, Mat2{1, -2, 0, 1}};
            if (d.has_omega) mats.push_back(Mat2{-1, 0, 0, 1});
        } else {
            mats = {Mat2{}, Mat2{0, -1, 1, 0}, Mat2{1, 1, 0, 1}};
            if (d.has_omega) mats.push_back(Mat2{1, 0, 0, -1});
        }
    }
    for (const auto& M : mats)
        for (const auto& t1 : scalars)
            for (const auto& t2 : scalars)
                push(unit_case_automorphism(A, M, {t1, t2}));
    return out;
}

std::set<std::pair<long, long>> lambda_indecomposables(long N, long radius) {
    if (N < 1) throw ValidationError("the exponent N must be a positive integer");
    if (radius < N + 2)
        throw ValidationError("radius must be at least N + 2");
    auto member = [N](long x, long y) {
        if (y < 0) return false;
        return x >= 0 || y >= -N * x;
    };
    std::set<std::pair<long, long>> out;
    for (long x = -radius; x <= radius; ++x)
        for (long y = 0; y <= radius; ++y) {
            if ((x == 0 && y == 0) || !member(x, y)) continue;
            if (y != 0 && N * x + y != 0) continue;  // interior to the cone
            bool decomposable = false;
            for (long ux = -y; ux <= x + y && !decomposable; ++ux)
                for (long uy = 0; uy <= y && !decomposable; ++uy) {
                    if (ux == 0 && uy == 0) continue;
                    const long wx = x - ux, wy = y - uy;
                    if (wx == 0 && wy == 0) continue;
                    if (member(ux, uy) && member(wx, wy)) decomposable = true;
                }
            if (!decomposable) out.insert({x, y});
        }
    return out;
}

namespace {

std::optional<std::tuple<long, long, FieldElement>> mono_of(
    const AlgebraElement& u) {
    if (u.term_count() != 1) return std::nullopt;
    const auto& [m, c] = *u.terms().begin();
    return std::make_tuple(m.s, m.j, c);
}

// Membership of a verified automorphism (monomial images) in the group the
// descriptor presents: fold h-inversions and y/x swaps through the flagged
// involutions, then match the scaling-family pattern; in the unit cases,
// check the exponent matrix lies in H.
bool recognized_in(const AlgebraSpec& A, const AutDescriptor& d,
                   MorphismSpec m) {
    if (d.kind != AutCase::NonUnit) {
        Mat2 M;
        try {
            M = unit_matrix_of(m);
        } catch (const Error&) {
            return false;
        }
        if (A.ring() == RingFlag::Poly)
            return M.m21 == 0 && M.m22 == 1 &&
                   (M.m11 == 1 || (M.m11 == -1 && A.q_is_minus_one()));
        const long det = M.det();
        return det == 1 || (det == -1 && A.q_is_minus_one());
    }

    auto hm = mono_of(m.img_h());
    if (!hm || std::get<0>(*hm) != 0) return false;
    if (std::get<1>(*hm) == -1) {
        if (!d.has_omega_sym) return false;
        auto os = omega_sym(A);
        if (!os) return false;
        m = compose(m, *os);
    }
    auto ym = mono_of(m.img_y());
    if (!ym) return false;
    if (std::get<0>(*ym) == -1) {
        if (d.has_omega)
            m = compose(m, omega(A));
        else if (A.ring() == RingFlag::Laurent && A.q_is_minus_one())
            m = compose(m, omega_minus1(A));
        else
            return false;
    }
    ym = mono_of(m.img_y());
    auto xm = mono_of(m.img_x());
    hm = mono_of(m.img_h());
    if (!ym || !xm || !hm) return false;
    if (std::get<0>(*ym) != 1 || std::get<0>(*xm) != -1 ||
        std::get<0>(*hm) != 0 || std::get<1>(*hm) != 1)
        return false;
    const long my = std::get<1>(*ym), mx = std::get<1>(*xm);
    if (A.ring() == RingFlag::Poly ? (my != 0 || mx != 0) : (mx != -my))
        return false;
    if (d.cg_order != 0 && !std::get<2>(*hm).pow(d.cg_order).is_one())
        return false;
    return true;
}

}  // namespace

CrossCheckReport cross_check_aut(const AlgebraSpec& A, const AutGrids& grids) {
    CrossCheckReport rep;
    const AutDescriptor d = automorphism_group(A);
    const bool laurent = A.ring() == RingFlag::Laurent;
    std::vector<long> exps = {0};
    if (laurent)
        for (long e = 1; e <= grids.max_h_exponent; ++e) {
            exps.push_back(e);
            exps.push_back(-e);
        }

    for (int eps : laurent ? std::vector<int>{1, -1} : std::vector<int>{1})
        for (int swap : {0, 1})
            for (const auto& gam : grids.gammas) {
                if (gam.is_zero()) continue;
                auto ih = AlgebraElement::monomial(A, 0, eps, gam);
                for (const auto& cy : grids.scalars) {
                    if (cy.is_zero()) continue;
                    for (const auto& cx : grids.scalars) {
                        if (cx.is_zero()) continue;
                        for (long my : exps)
                            for (long mx : exps) {
                                ++rep.candidates;
                                auto iy = AlgebraElement::monomial(
                                    A, swap ? -1 : 1, my, cy);
                                auto ix = AlgebraElement::monomial(
                                    A, swap ? 1 : -1, mx, cx);
                                auto m = make_morphism(A, A, iy, ih, ix);
                                if (!verify_morphism(m).ok) continue;
                                ++rep.verified;
                                if (recognized_in(A, d, m))
                                    ++rep.recognized;
                                else
                                    rep.failures.push_back(
                                        "y -> " + iy.to_string() + ", h -> " +
                                        ih.to_string() + ", x -> " +
                                        ix.to_string());
                            }
                    }
                }
            }
    return rep;
}

}  // namespace qgwa
