#pragma once

#include <json.hpp>

#include "qgwa/classify.hpp"
#include "qgwa/derivations.hpp"
#include "qgwa/morphisms.hpp"

namespace qgwa {

// Machine-readable records for CLI output. Keys are emitted in declaration
// order (ordered_json) so the schema is stable across runs and commands; all
// scalars and polynomials are exact printed strings in the zeta(n) power
// basis, and every such string reparses to an equal value.
using Json = nlohmann::ordered_json;

Json json_of(const FieldSpec& f);           // "Q" or "Q(zeta(n))"
Json json_of(const AlgebraSpec& A);         // {field, ring, q, a}
Json json_of(const AlgebraElement& u);      // {text, terms: [{s, j, coeff}]}
Json json_of(const MorphismSpec& m);        // {source, target, img_y, img_h, img_x}
Json json_of(const VerifyReport& r);        // {ok, failing}
Json json_of(const DerivationSpec& d);      // {img_y, img_h, img_x}
Json json_of(const IsoResult& r);           // {isomorphic, search_complete, witness}
Json json_of(const AutDescriptor& d);       // {case, g, torus_rank, cg_order, ...}
Json json_of(const CrossCheckReport& r);    // {candidates, verified, recognized, ok, failures}

}  // namespace qgwa
