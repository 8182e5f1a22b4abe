#pragma once

#include <utility>
#include <vector>

#include "qgwa/algebra.hpp"

namespace qgwa {

// Free generators of the algebra as written in words. Hinv is only valid
// over the Laurent ring.
enum class Gen { Y, H, Hinv, X };

// A product of generators, left to right.
using Word = std::vector<Gen>;

// u multiplied on the right by one generator, normalized by single
// applications of the defining relations (hy -> q yh, xh -> q hx,
// yx -> a(h), xy -> a(qh) and their h^{-1} consequences). This is the
// elementary step of the word-rewriting engine and is independent of the
// closed-form monomial product.
AlgebraElement mul_gen(const AlgebraElement& u, Gen g);

// c times the product of the generators in w, normalized step by step.
AlgebraElement word_monomial(const AlgebraSpec& A, const Word& w,
                             const FieldElement& c);

// Normal form of a sum of scalar multiples of generator words. Words with
// h^{-1} over the polynomial ring throw InvalidGenerator.
AlgebraElement from_word(const AlgebraSpec& A,
                         const std::vector<std::pair<FieldElement, Word>>& sum);

// The word y^i h^j x^k (with h^{-1} repeated for j < 0) spelling a standard
// basis monomial; convenient for round-trip tests.
Word word_of_monomial(const StdMonomial& m);

}  // namespace qgwa
