#pragma once

#include <optional>
#include <string>

#include "qgwa/algebra.hpp"

namespace qgwa {

// Recursive-descent parsers for the textual input language. The shared
// expression grammar, from loosest to tightest binding:
//
//     sum     := product (('+' | '-') product)*
//     product := unary (('*' | '/') unary)*
//     unary   := '-' unary | power
//     power   := atom ('^' exponent)?
//     atom    := integer | 'zeta' ['(' integer ')'] | generator | '(' sum ')'
//
// where an exponent is an optionally negated integer, with or without
// parentheses, so both h^-2 and h^(-2) work. Power binds tighter than unary
// minus: -h^2 means -(h^2). Multiplication is always explicit ('*'). Every
// printed form of a scalar, polynomial, or algebra element reparses to an
// equal value. Malformed input raises SyntaxError carrying the character
// offset into the original string.

// Scalar in k. Generators are rejected; zeta(m) must match the field.
FieldElement parse_scalar(const std::string& text, const FieldSpec& field);

// Polynomial in h (h and hinv over the Laurent ring; hinv and negative
// powers of h raise ValidationError over the polynomial ring). y and x are
// rejected. Division is by scalars only.
LaurentPoly parse_poly(const std::string& text, const FieldSpec& field, RingFlag ring);

// Algebra element over the generators y, h, hinv (Laurent ring only), x.
AlgebraElement parse_element(const std::string& text, const AlgebraSpec& spec);

// Field declaration: "Q" or "Q(zeta(n))".
FieldSpec parse_field(const std::string& text);

// Full algebra specification, for example
//
//     field=Q(zeta(4)) algebra d=poly q=zeta(4) a=h^2-1
//
// The input is a sequence of whitespace-separated tokens. A token of the
// form key=... opens the value of that key (known keys: field, d, q, a); an
// expression value extends until the next key token, so "a=h^2 - 1" equals
// "a=h^2-1". The bare token "algebra" is a readability marker and is
// skipped. When "field=" is absent the field is taken from `default_field`
// if present, then from the QGWA_FIELD environment variable, then Q.
// Structural violations (q = 1, a = 0, negative h-exponents over the
// polynomial ring, scalars outside the field) raise ValidationError.
AlgebraSpec parse_spec(const std::string& text,
                       const std::optional<FieldSpec>& default_field = std::nullopt);

}  // namespace qgwa
