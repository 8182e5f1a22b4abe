#pragma once

#include <cstddef>
#include <vector>

#include "qgwa/field.hpp"

namespace qgwa {

using Vec = std::vector<FieldElement>;

// Incremental exact row space: add() reduces a vector against the rows
// collected so far and keeps it when independent. Used for rank
// stabilization checks on iterate sequences.
class RowSpace {
  public:
    std::size_t rank() const { return rows_.size(); }

    // Returns true when v was independent of the rows seen so far (and is
    // now part of the space), false when it was already in the span.
    bool add(Vec v) {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const FieldElement c = v[lead_[r]];
            if (c.is_zero()) continue;
            for (std::size_t k = 0; k < v.size(); ++k)
                v[k] = v[k] - c * rows_[r][k];
        }
        std::size_t pivot = v.size();
        for (std::size_t k = 0; k < v.size(); ++k)
            if (!v[k].is_zero()) {
                pivot = k;
                break;
            }
        if (pivot == v.size()) return false;
        const FieldElement inv = v[pivot].inverse();
        for (auto& e : v) e = e * inv;
        rows_.push_back(std::move(v));
        lead_.push_back(pivot);
        return true;
    }

  private:
    std::vector<Vec> rows_;          // echelon rows with leading entry 1
    std::vector<std::size_t> lead_;  // pivot column of each row
};

// Basis of the right nullspace {v : M v = 0} of the matrix with the given
// rows over the field, each row of length ncols. Deterministic: pivots are
// chosen in column order, one basis vector per free column in increasing
// column order, with a 1 in its free coordinate.
inline std::vector<Vec> nullspace(const FieldSpec& field, std::vector<Vec> rows,
                                  std::size_t ncols) {
    const FieldElement zero = FieldElement::zero(field);
    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
    std::size_t r = 0;
    for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
        std::size_t sel = rows.size();
        for (std::size_t i = r; i < rows.size(); ++i)
            if (!rows[i][col].is_zero()) {
                sel = i;
                break;
            }
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        const FieldElement inv = rows[r][col].inverse();
        for (auto& e : rows[r]) e = e * inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r) continue;
            const FieldElement c = rows[i][col];
            if (c.is_zero()) continue;
            for (std::size_t k = 0; k < ncols; ++k)
                rows[i][k] = rows[i][k] - c * rows[r][k];
        }
        pivots.emplace_back(r, col);
        ++r;
    }
    std::vector<bool> is_pivot(ncols, false);
    for (const auto& [pr, pc] : pivots) is_pivot[pc] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        Vec v(ncols, zero);
        v[f] = FieldElement::one(field);
        for (const auto& [pr, pc] : pivots) v[pc] = -rows[pr][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace qgwa
