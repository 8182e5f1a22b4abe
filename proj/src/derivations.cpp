#include "qgwa/derivations.hpp"

#include <map>
#include <utility>

#include "qgwa/linalg.hpp"

namespace qgwa {

namespace {

// d(h^m) for the derivation with d(h) = dh: the telescoping sum
// sum_t h^t dh h^{m-1-t} for m >= 0, and -h^m d(h^{-m}) h^m for m < 0.
AlgebraElement d_pow_h(const AlgebraSpec& A, const AlgebraElement& dh, long m) {
    auto out = AlgebraElement::zero(A);
    if (m >= 0) {
        const auto one = FieldElement::one(A.field());
        for (long t = 0; t < m; ++t)
            out = out + AlgebraElement::monomial(A, 0, t, one) * dh *
                            AlgebraElement::monomial(A, 0, m - 1 - t, one);
        return out;
    }
    const auto hm = AlgebraElement::monomial(A, 0, m, FieldElement::one(A.field()));
    return -(hm * d_pow_h(A, dh, -m) * hm);
}

// d(f(h)) for d(h) = dh, by linearity over the terms of f.
AlgebraElement d_of_poly(const AlgebraSpec& A, const AlgebraElement& dh,
                         const LaurentPoly& f) {
    auto out = AlgebraElement::zero(A);
    for (const auto& [m, c] : f.terms()) out = out + d_pow_h(A, dh, m) * c;
    return out;
}

// The four relation-consistency residuals of a candidate image triple; the
// triple defines a derivation exactly when all four vanish.
struct Residuals {
    AlgebraElement hy, xh, yx, xy;
};

Residuals residuals(const AlgebraSpec& A, const AlgebraElement& dy,
                    const AlgebraElement& dh, const AlgebraElement& dx) {
    auto y = AlgebraElement::gen_y(A);
    auto h = AlgebraElement::gen_h(A);
    auto x = AlgebraElement::gen_x(A);
    const auto& q = A.q();
    return {
        dh * y + h * dy - (dy * h + y * dh) * q,
        dx * h + x * dh - (dh * x + h * dx) * q,
        dy * x + y * dx - d_of_poly(A, dh, A.a()),
        dx * y + x * dy - d_of_poly(A, dh, twist(A.a(), q, 1)),
    };
}

void check_same_algebra(const AlgebraSpec& A, const AlgebraElement& u,
                        const char* what) {
    if (u.spec() != A) throw MixedAlgebras(what);
}

}  // namespace

DerivationSpec derivation_from_images(const AlgebraSpec& A,
                                      const AlgebraElement& img_y,
                                      const AlgebraElement& img_h,
                                      const AlgebraElement& img_x) {
    check_same_algebra(A, img_y, "derivation image of y");
    check_same_algebra(A, img_h, "derivation image of h");
    check_same_algebra(A, img_x, "derivation image of x");
    auto r = residuals(A, img_y, img_h, img_x);
    if (!r.hy.is_zero()) throw InconsistentImages("hy = qyh");
    if (!r.xh.is_zero()) throw InconsistentImages("xh = qhx");
    if (!r.yx.is_zero()) throw InconsistentImages("yx = a(h)");
    if (!r.xy.is_zero()) throw InconsistentImages("xy = a(qh)");
    return DerivationSpec(A, img_y, img_h, img_x);
}

AlgebraElement apply(const DerivationSpec& d, const AlgebraElement& u) {
    const AlgebraSpec& A = d.spec();
    if (u.spec() != A) throw MixedAlgebras("derivation argument");
    const auto one = FieldElement::one(A.field());
    auto out = AlgebraElement::zero(A);
    for (const auto& [m, c] : u.terms()) {
        const long i = m.yexp(), k = m.xexp();
        // d(y^i h^j x^k) by Leibniz over the three blocks.
        auto dh_block = d_pow_h(A, d.img_h(), m.j);
        auto ypow = AlgebraElement::monomial(A, i, 0, one);
        auto hpow = AlgebraElement::monomial(A, 0, m.j, one);
        auto xpow = AlgebraElement::monomial(A, -k, 0, one);
        auto term = ypow * dh_block * xpow;
        for (long t = 0; t < i; ++t)
            term = term + AlgebraElement::monomial(A, t, 0, one) * d.img_y() *
                              AlgebraElement::monomial(A, i - 1 - t, 0, one) *
                              hpow * xpow;
        for (long t = 0; t < k; ++t)
            term = term + ypow * hpow *
                              AlgebraElement::monomial(A, -t, 0, one) *
                              d.img_x() *
                              AlgebraElement::monomial(A, -(k - 1 - t), 0, one);
        out = out + term * c;
    }
    return out;
}

std::optional<long> deg_d(const DerivationSpec& d, const AlgebraElement& u,
                          long bound) {
    if (u.is_zero()) throw ZeroElement("deg_d");
    auto v = u;
    for (long r = 0; r <= bound; ++r) {
        v = apply(d, v);
        if (v.is_zero()) return r;
    }
    return std::nullopt;
}

namespace {

// Exact coordinates of the elements with respect to the union of their
// monomial supports, in map order.
std::vector<Vec> coordinates(const FieldSpec& field,
                             const std::vector<AlgebraElement>& elems) {
    std::map<StdMonomial, std::size_t> index;
    for (const auto& e : elems)
        for (const auto& [m, c] : e.terms()) index.emplace(m, 0);
    std::size_t next = 0;
    for (auto& [m, idx] : index) idx = next++;
    std::vector<Vec> coords;
    coords.reserve(elems.size());
    for (const auto& e : elems) {
        Vec v(index.size(), FieldElement::zero(field));
        for (const auto& [m, c] : e.terms()) v[index.at(m)] = c;
        coords.push_back(std::move(v));
    }
    return coords;
}

}  // namespace

bool is_locally_finite_probe(const DerivationSpec& d, long bound) {
    const AlgebraSpec& A = d.spec();
    for (auto gen : {AlgebraElement::gen_y(A), AlgebraElement::gen_h(A),
                     AlgebraElement::gen_x(A)}) {
        std::vector<AlgebraElement> iterates{gen};
        for (long k = 0; k < bound; ++k)
            iterates.push_back(apply(d, iterates.back()));
        auto coords = coordinates(A.field(), iterates);
        RowSpace space;
        bool stabilized = false;
        for (auto& v : coords)
            if (!space.add(std::move(v))) {
                // A dependent iterate makes the span d-invariant, so the
                // whole Krylov sequence stays inside it.
                stabilized = true;
                break;
            }
        if (!stabilized) return false;
    }
    return true;
}

DerivationSpec xi(const AlgebraSpec& A) {
    return derivation_from_images(A, AlgebraElement::gen_y(A),
                                  AlgebraElement::zero(A),
                                  -AlgebraElement::gen_x(A));
}

DerivationSpec tau(const AlgebraSpec& A) {
    const long N = A.max_support();
    return derivation_from_images(
        A, AlgebraElement::zero(A), AlgebraElement::gen_h(A),
        AlgebraElement::gen_x(A) * FieldElement::from_long(A.field(), N));
}

namespace {

// One unknown of the homogeneous ansatz: a single basis monomial placed in
// one of the three image slots.
struct Slot {
    int which;  // 0 = image of y, 1 = image of h, 2 = image of x
    long s;
    long j;
};

std::vector<DerivationSpec> solve_ansatz(const AlgebraSpec& A,
                                         const std::vector<Slot>& slots) {
    const auto one = FieldElement::one(A.field());
    // Rows indexed by (identity, monomial); columns by unknowns.
    std::map<std::pair<int, StdMonomial>, Vec> rows;
    const Vec empty(slots.size(), FieldElement::zero(A.field()));
    for (std::size_t i = 0; i < slots.size(); ++i) {
        const auto& sl = slots[i];
        auto unit = AlgebraElement::monomial(A, sl.s, sl.j, one);
        auto zero = AlgebraElement::zero(A);
        auto r = residuals(A, sl.which == 0 ? unit : zero,
                           sl.which == 1 ? unit : zero,
                           sl.which == 2 ? unit : zero);
        int t = 0;
        for (const auto* res : {&r.hy, &r.xh, &r.yx, &r.xy}) {
            for (const auto& [m, c] : res->terms()) {
                auto [it, inserted] = rows.emplace(std::make_pair(t, m), empty);
                it->second[i] = c;
            }
            ++t;
        }
    }
    std::vector<Vec> matrix;
    matrix.reserve(rows.size());
    for (auto& [key, row] : rows) matrix.push_back(std::move(row));
    auto basis = nullspace(A.field(), std::move(matrix), slots.size());

    std::vector<DerivationSpec> result;
    for (const auto& v : basis) {
        auto dy = AlgebraElement::zero(A);
        auto dh = AlgebraElement::zero(A);
        auto dx = AlgebraElement::zero(A);
        for (std::size_t i = 0; i < slots.size(); ++i) {
            if (v[i].is_zero()) continue;
            auto term = AlgebraElement::monomial(A, slots[i].s, slots[i].j, v[i]);
            if (slots[i].which == 0) dy = dy + term;
            else if (slots[i].which == 1) dh = dh + term;
            else dx = dx + term;
        }
        result.push_back(derivation_from_images(A, dy, dh, dx));
    }
    return result;
}

}  // namespace

std::vector<DerivationSpec> derivation_space(const AlgebraSpec& A, long weight,
                                             long deg_bound) {
    const long lo = A.ring() == RingFlag::Poly ? 0 : -deg_bound;
    std::vector<Slot> slots;
    for (int which = 0; which < 3; ++which) {
        const long s = weight + 1 - which;  // weights r+1, r, r-1
        for (long j = lo; j <= deg_bound; ++j) slots.push_back({which, s, j});
    }
    return solve_ansatz(A, slots);
}

std::vector<DerivationSpec> locally_finite_derivation_space(const AlgebraSpec& A) {
    return solve_ansatz(A, {{0, 1, 0}, {1, 0, 1}, {2, -1, 0}});
}

}  // namespace qgwa
