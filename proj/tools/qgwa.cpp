// Command-line front end: parse algebra specs and element expressions,
// dispatch to the engine, and emit human-readable or JSON output.
//
// Exit codes: 0 on success, 1 on a mathematical "no" (not isomorphic, not a
// homomorphism, not symmetric, cross-check failures, omega_sym absent),
// 2 on errors (syntax, validation, I/O, usage).

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "qgwa/classify.hpp"
#include "qgwa/derivations.hpp"
#include "qgwa/errors.hpp"
#include "qgwa/jsonio.hpp"
#include "qgwa/morphisms.hpp"
#include "qgwa/parse.hpp"

using namespace qgwa;

namespace {

struct SpecOpts {
    std::string text;
    std::string file;
};

void add_spec_opts(CLI::App* sub, SpecOpts& s, const std::string& stem) {
    sub->add_option("--" + stem, s.text, "algebra spec text (grammar: field=... d=... q=... a=...)");
    sub->add_option("--" + stem + "-file", s.file, "file containing an algebra spec");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

AlgebraSpec resolve_spec(const SpecOpts& s, const std::optional<FieldSpec>& default_field,
                         const std::string& stem) {
    if (!s.text.empty() && !s.file.empty())
        throw ValidationError("give either --" + stem + " or --" + stem + "-file, not both");
    if (!s.text.empty()) return parse_spec(s.text, default_field);
    if (!s.file.empty()) return parse_spec(read_file(s.file), default_field);
    throw ValidationError("missing --" + stem + " (or --" + stem + "-file)");
}

void emit(bool json, const Json& j, const std::string& text) {
    if (json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text << "\n";
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

std::string images_text(const MorphismSpec& m) {
    return "y -> " + m.img_y().to_string() + "\nh -> " + m.img_h().to_string() +
           "\nx -> " + m.img_x().to_string();
}

std::string images_text(const DerivationSpec& d) {
    return "y -> " + d.img_y().to_string() + "\nh -> " + d.img_h().to_string() +
           "\nx -> " + d.img_x().to_string();
}

std::string descriptor_text(const AutDescriptor& d) {
    Json j = json_of(d);
    std::string out;
    for (const auto& [key, val] : j.items()) {
        if (!out.empty()) out += "\n";
        out += key + ": " + (val.is_string() ? val.get<std::string>() : val.dump());
    }
    return out;
}

FieldElement scalar_arg(const std::string& text, const FieldSpec& f, const char* what) {
    if (text.empty()) throw ValidationError(std::string("missing ") + what);
    return parse_scalar(text, f);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computation in quantum generalized Weyl algebras"};
    app.require_subcommand(1);

    bool json = false;
    std::string field_decl;
    app.add_flag("--json", json, "emit machine-readable JSON");
    app.add_option("--field", field_decl,
                   "default field when a spec omits field= (overrides QGWA_FIELD)");

    // --- nf ---------------------------------------------------------------
    auto* nf = app.add_subcommand("nf", "normal form of an element expression");
    SpecOpts nf_spec;
    std::string nf_expr;
    add_spec_opts(nf, nf_spec, "spec");
    nf->add_option("expr", nf_expr, "element expression")->required();

    // --- mul --------------------------------------------------------------
    auto* mul = app.add_subcommand("mul", "normal form of a product of two elements");
    SpecOpts mul_spec;
    std::string mul_lhs, mul_rhs;
    add_spec_opts(mul, mul_spec, "spec");
    mul->add_option("lhs", mul_lhs, "left factor")->required();
    mul->add_option("rhs", mul_rhs, "right factor")->required();

    // --- iso --------------------------------------------------------------
    auto* iso = app.add_subcommand("iso", "decide isomorphism of two algebras");
    SpecOpts iso_a, iso_b;
    add_spec_opts(iso, iso_a, "spec");
    add_spec_opts(iso, iso_b, "spec2");

    // --- aut --------------------------------------------------------------
    auto* aut = app.add_subcommand("aut", "automorphism group descriptor");
    SpecOpts aut_spec;
    add_spec_opts(aut, aut_spec, "spec");

    // --- check-hom ----------------------------------------------------------
    auto* hom = app.add_subcommand("check-hom", "verify generator images define an endomorphism");
    SpecOpts hom_spec;
    std::string hom_y, hom_h, hom_x;
    add_spec_opts(hom, hom_spec, "spec");
    hom->add_option("--img-y", hom_y, "image of y")->required();
    hom->add_option("--img-h", hom_h, "image of h")->required();
    hom->add_option("--img-x", hom_x, "image of x")->required();

    // --- aut-gen ------------------------------------------------------------
    auto* gen = app.add_subcommand("aut-gen", "construct a named automorphism");
    SpecOpts gen_spec;
    std::string gen_family, gen_gamma = "1", gen_mu = "1", gen_t1 = "1", gen_t2 = "1";
    std::vector<long> gen_matrix;
    add_spec_opts(gen, gen_spec, "spec");
    gen->add_option("family", gen_family,
                    "eta | omega | omega-sym | omega-minus1 | unit-matrix")
        ->required();
    gen->add_option("--gamma", gen_gamma, "eta: scalar with gamma^g = 1");
    gen->add_option("--mu", gen_mu, "eta: nonzero scalar");
    gen->add_option("--matrix", gen_matrix, "unit-matrix: m11,m12,m21,m22")->delimiter(',');
    gen->add_option("--torus1", gen_t1, "unit-matrix: first torus scalar");
    gen->add_option("--torus2", gen_t2, "unit-matrix: second torus scalar");

    // --- derive -------------------------------------------------------------
    auto* der = app.add_subcommand("derive", "build a derivation from images; optionally apply it");
    SpecOpts der_spec;
    std::string der_y, der_h, der_x, der_arg, der_deg_of;
    long der_bound = 8;
    add_spec_opts(der, der_spec, "spec");
    der->add_option("--img-y", der_y, "d(y)")->required();
    der->add_option("--img-h", der_h, "d(h)")->required();
    der->add_option("--img-x", der_x, "d(x)")->required();
    der->add_option("expr", der_arg, "element to apply the derivation to");
    der->add_option("--deg-of", der_deg_of, "element whose d-degree to compute");
    der->add_option("--deg-bound", der_bound, "iteration bound for --deg-of (default 8)");

    // --- derivation-space -----------------------------------------------------
    auto* dsp = app.add_subcommand("derivation-space",
                                   "basis of homogeneous derivations of a given weight");
    SpecOpts dsp_spec;
    long dsp_weight = 0, dsp_bound = 4;
    bool dsp_lf = false;
    add_spec_opts(dsp, dsp_spec, "spec");
    dsp->add_option("--weight", dsp_weight, "homogeneity weight (default 0)");
    dsp->add_option("--deg-bound", dsp_bound, "h-exponent bound on image coefficients (default 4)");
    dsp->add_flag("--locally-finite", dsp_lf,
                  "basis of the locally finite derivations instead (diagonal family)");

    // --- symmetric ------------------------------------------------------------
    auto* sym = app.add_subcommand("symmetric", "symmetry witness for the defining polynomial a");
    SpecOpts sym_spec;
    add_spec_opts(sym, sym_spec, "spec");

    // --- lambda ----------------------------------------------------------------
    auto* lam = app.add_subcommand("lambda", "indecomposables of the skew-Laurent weight monoid");
    long lam_n = 0, lam_radius = -1;
    lam->add_option("--gwa-exponent", lam_n, "exponent N of the monomial a = alpha*h^N")
        ->required();
    lam->add_option("--radius", lam_radius, "search radius (default N + 4)");

    // --- cross-check-aut ---------------------------------------------------------
    auto* xck = app.add_subcommand("cross-check-aut",
                                   "grid search for automorphisms outside the descriptor group");
    SpecOpts xck_spec;
    long xck_grid = 4, xck_maxh = 2;
    add_spec_opts(xck, xck_spec, "spec");
    xck->add_option("--grid-size", xck_grid, "number of probe scalars (default 4)");
    xck->add_option("--max-h-exponent", xck_maxh, "h-exponent bound for unit parts (default 2)");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        std::optional<FieldSpec> default_field;
        if (!field_decl.empty()) default_field = parse_field(field_decl);

        if (nf->parsed()) {
            AlgebraSpec A = resolve_spec(nf_spec, default_field, "spec");
            AlgebraElement u = parse_element(nf_expr, A);
            emit(json, json_of(u), u.to_string());
            return 0;
        }

        if (mul->parsed()) {
            AlgebraSpec A = resolve_spec(mul_spec, default_field, "spec");
            AlgebraElement u = parse_element(mul_lhs, A) * parse_element(mul_rhs, A);
            emit(json, json_of(u), u.to_string());
            return 0;
        }

        if (iso->parsed()) {
            AlgebraSpec A = resolve_spec(iso_a, default_field, "spec");
            AlgebraSpec B = resolve_spec(iso_b, default_field, "spec2");
            IsoResult r = decide_isomorphic(A, B);
            std::string text = "isomorphic: " + yesno(r.isomorphic()) +
                               "\nsearch_complete: " + yesno(r.search_complete);
            if (r.witness.has_value()) {
                const IsoWitness& w = *r.witness;
                text += "\nwitness: eps=" + std::to_string(w.eps) + " beta=" +
                        w.beta.to_string() + " alpha=" + w.alpha.to_string() + " q_match=" +
                        (w.q_match == QMatch::Same ? "same" : "inverted");
            }
            emit(json, json_of(r), text);
            return r.isomorphic() ? 0 : 1;
        }

        if (aut->parsed()) {
            AlgebraSpec A = resolve_spec(aut_spec, default_field, "spec");
            AutDescriptor d = automorphism_group(A);
            emit(json, json_of(d), descriptor_text(d));
            return 0;
        }

        if (hom->parsed()) {
            AlgebraSpec A = resolve_spec(hom_spec, default_field, "spec");
            MorphismSpec m = make_morphism(A, A, parse_element(hom_y, A),
                                           parse_element(hom_h, A), parse_element(hom_x, A));
            VerifyReport r = verify_morphism(m);
            std::string text = "homomorphism: " + yesno(r.ok);
            for (const std::string& rel : r.failing) text += "\nviolated: " + rel;
            emit(json, json_of(r), text);
            return r.ok ? 0 : 1;
        }

        if (gen->parsed()) {
            AlgebraSpec A = resolve_spec(gen_spec, default_field, "spec");
            const FieldSpec& f = A.field();
            std::optional<MorphismSpec> m;
            if (gen_family == "eta") {
                m = eta(A, scalar_arg(gen_gamma, f, "--gamma"), scalar_arg(gen_mu, f, "--mu"));
            } else if (gen_family == "omega") {
                m = omega(A);
            } else if (gen_family == "omega-minus1") {
                m = omega_minus1(A);
            } else if (gen_family == "omega-sym") {
                m = omega_sym(A);
                if (!m.has_value()) {
                    emit(json, Json(nullptr), "omega_sym: absent (a is not symmetric)");
                    return 1;
                }
            } else if (gen_family == "unit-matrix") {
                if (gen_matrix.size() != 4)
                    throw ValidationError("--matrix needs four entries m11,m12,m21,m22");
                Mat2 M{gen_matrix[0], gen_matrix[1], gen_matrix[2], gen_matrix[3]};
                m = unit_case_automorphism(
                    A, M, {scalar_arg(gen_t1, f, "--torus1"), scalar_arg(gen_t2, f, "--torus2")});
            } else {
                throw ValidationError("unknown family '" + gen_family +
                                      "' (eta | omega | omega-sym | omega-minus1 | unit-matrix)");
            }
            emit(json, json_of(*m), images_text(*m));
            return 0;
        }

        if (der->parsed()) {
            AlgebraSpec A = resolve_spec(der_spec, default_field, "spec");
            DerivationSpec d = derivation_from_images(A, parse_element(der_y, A),
                                                      parse_element(der_h, A),
                                                      parse_element(der_x, A));
            if (!der_deg_of.empty()) {
                std::optional<long> deg = deg_d(d, parse_element(der_deg_of, A), der_bound);
                Json j;
                j["deg"] = deg.has_value() ? Json(*deg) : Json(nullptr);
                j["bound"] = der_bound;
                emit(json, j,
                     deg.has_value() ? "deg: " + std::to_string(*deg)
                                     : "deg: unbounded within " + std::to_string(der_bound));
                return 0;
            }
            if (!der_arg.empty()) {
                AlgebraElement v = apply(d, parse_element(der_arg, A));
                emit(json, json_of(v), v.to_string());
                return 0;
            }
            emit(json, json_of(d), images_text(d));
            return 0;
        }

        if (dsp->parsed()) {
            AlgebraSpec A = resolve_spec(dsp_spec, default_field, "spec");
            std::vector<DerivationSpec> basis =
                dsp_lf ? locally_finite_derivation_space(A)
                       : derivation_space(A, dsp_weight, dsp_bound);
            Json j;
            j["dimension"] = basis.size();
            Json arr = Json::array();
            for (const DerivationSpec& d : basis) arr.push_back(json_of(d));
            j["basis"] = std::move(arr);
            std::string text = "dimension: " + std::to_string(basis.size());
            for (std::size_t k = 0; k < basis.size(); ++k)
                text += "\n[" + std::to_string(k) + "]\n" + images_text(basis[k]);
            emit(json, j, text);
            return 0;
        }

        if (sym->parsed()) {
            AlgebraSpec A = resolve_spec(sym_spec, default_field, "spec");
            std::optional<SymmetryWitness> w = is_symmetric(A.a());
            Json j;
            j["symmetric"] = w.has_value();
            if (w.has_value()) {
                Json wit;
                wit["l"] = w->l;
                wit["gamma"] = w->gamma.to_string();
                wit["delta"] = w->delta.to_string();
                j["witness"] = std::move(wit);
            } else {
                j["witness"] = nullptr;
            }
            std::string text = "symmetric: " + yesno(w.has_value());
            if (w.has_value())
                text += "\nl: " + std::to_string(w->l) + "\ngamma: " + w->gamma.to_string() +
                        "\ndelta: " + w->delta.to_string();
            emit(json, j, text);
            return w.has_value() ? 0 : 1;
        }

        if (lam->parsed()) {
            long radius = lam_radius >= 0 ? lam_radius : lam_n + 4;
            auto indec = lambda_indecomposables(lam_n, radius);
            Json arr = Json::array();
            std::string text;
            for (const auto& [vx, vy] : indec) {
                arr.push_back(Json::array({vx, vy}));
                if (!text.empty()) text += "\n";
                text += "(" + std::to_string(vx) + ", " + std::to_string(vy) + ")";
            }
            emit(json, arr, text);
            return 0;
        }

        if (xck->parsed()) {
            AlgebraSpec A = resolve_spec(xck_spec, default_field, "spec");
            const FieldSpec& f = A.field();
            AutGrids grids;
            grids.max_h_exponent = xck_maxh;
            grids.gammas = roots_of_unity_in_field(f, f.unity_order());
            const long pool[] = {1, -1, 2, 3, 5, 7};
            for (long i = 0; i < xck_grid && i < 6; ++i) {
                FieldElement c = FieldElement::from_long(f, pool[i]);
                grids.scalars.push_back(c);
                if (pool[i] != 1 && pool[i] != -1) grids.scalars.push_back(c.inverse());
            }
            for (const FieldElement& g : grids.gammas)
                if (std::find(grids.scalars.begin(), grids.scalars.end(), g) ==
                    grids.scalars.end())
                    grids.scalars.push_back(g);
            CrossCheckReport r = cross_check_aut(A, grids);
            std::string text = "candidates: " + std::to_string(r.candidates) +
                               "\nverified: " + std::to_string(r.verified) +
                               "\nrecognized: " + std::to_string(r.recognized) +
                               "\nok: " + yesno(r.ok());
            for (const std::string& fail : r.failures) text += "\nunrecognized: " + fail;
            emit(json, json_of(r), text);
            return r.ok() ? 0 : 1;
        }

        std::cerr << "error: no command\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
