#include "qgwa/jsonio.hpp"

namespace qgwa {

Json json_of(const FieldSpec& f) { return f.to_string(); }

Json json_of(const AlgebraSpec& A) {
    Json j;
    j["field"] = A.field().to_string();
    j["ring"] = to_string(A.ring());
    j["q"] = A.q().to_string();
    j["a"] = A.a().to_string();
    return j;
}

Json json_of(const AlgebraElement& u) {
    Json j;
    j["text"] = u.to_string();
    Json terms = Json::array();
    for (const auto& [m, c] : u.terms()) {
        Json t;
        t["s"] = m.s;
        t["j"] = m.j;
        t["coeff"] = c.to_string();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

Json json_of(const MorphismSpec& m) {
    Json j;
    j["source"] = json_of(m.source());
    j["target"] = json_of(m.target());
    j["img_y"] = json_of(m.img_y());
    j["img_h"] = json_of(m.img_h());
    j["img_x"] = json_of(m.img_x());
    return j;
}

Json json_of(const VerifyReport& r) {
    Json j;
    j["ok"] = r.ok;
    j["failing"] = r.failing;
    return j;
}

Json json_of(const DerivationSpec& d) {
    Json j;
    j["img_y"] = json_of(d.img_y());
    j["img_h"] = json_of(d.img_h());
    j["img_x"] = json_of(d.img_x());
    return j;
}

Json json_of(const IsoResult& r) {
    Json j;
    j["isomorphic"] = r.isomorphic();
    j["search_complete"] = r.search_complete;
    if (r.witness.has_value()) {
        Json w;
        w["eps"] = r.witness->eps;
        w["beta"] = r.witness->beta.to_string();
        w["alpha"] = r.witness->alpha.to_string();
        w["q_match"] = r.witness->q_match == QMatch::Same ? "same" : "inverted";
        j["witness"] = std::move(w);
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

namespace {

const char* case_name(AutCase c) {
    switch (c) {
        case AutCase::NonUnit: return "non-unit";
        case AutCase::UnitPoly: return "unit-poly";
        case AutCase::UnitLaurent: return "unit-laurent";
    }
    return "?";
}

const char* shape_name(HShape s) {
    switch (s) {
        case HShape::None: return "none";
        case HShape::UpperUni: return "upper-unitriangular";
        case HShape::UpperPlusMinus: return "upper-plus-minus";
        case HShape::SL2: return "SL2";
        case HShape::GL2: return "GL2";
    }
    return "?";
}

}  // namespace

Json json_of(const AutDescriptor& d) {
    Json j;
    j["case"] = case_name(d.kind);
    j["g"] = d.g;
    j["torus_rank"] = d.torus_rank;
    j["cg_order"] = d.cg_order;
    j["exponent"] = d.exponent;
    j["has_omega"] = d.has_omega;
    j["has_omega_sym"] = d.has_omega_sym;
    j["h_shape"] = shape_name(d.h_shape);
    return j;
}

Json json_of(const CrossCheckReport& r) {
    Json j;
    j["candidates"] = r.candidates;
    j["verified"] = r.verified;
    j["recognized"] = r.recognized;
    j["ok"] = r.ok();
    j["failures"] = r.failures;
    return j;
}

}  // namespace qgwa
