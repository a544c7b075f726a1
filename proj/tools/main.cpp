#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "addact/error.hpp"
#include "addact/report.hpp"

using namespace addact;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

struct Output {
    bool json_flag = false;
    std::string format = "text";

    bool as_json() const { return json_flag || format == "json"; }
    void emit(const ordered_json& doc) const {
        if (as_json()) {
            std::cout << doc.dump(2) << "\n";
        } else {
            std::cout << render_text(doc);
        }
    }
};

void add_output_flags(CLI::App* cmd, Output& out) {
    cmd->add_flag("--json", out.json_flag, "emit JSON instead of text");
    cmd->add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
}

void add_decide_flags(CLI::App* cmd, DecideOptions& opts) {
    cmd->add_option("--seed", opts.seed, "seed for randomized witness search");
    cmd->add_option("--samples", opts.samples, "random witness candidates to draw");
    cmd->add_option("--height", opts.height, "coordinate bound for random candidates");
    cmd->add_flag("--enable-quadratic-factoring", opts.quadratic_factoring,
                  "factor binary quadratic vanishing conditions over Q(i)");
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("BadInput", "cannot open '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error("BadInput", std::string("JSON parse error in '") + path + "': " + e.what());
    }
    return j;
}

std::vector<Scalar> parse_scalar_list(const std::string& text) {
    std::vector<Scalar> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) out.push_back(Scalar::parse(part));
    return out;
}

Element combine(const std::vector<Element>& basis, const std::vector<Scalar>& coeffs,
                const LocalAlgebra& a) {
    if (coeffs.size() != basis.size()) {
        throw Error("BadInput", "expected " + std::to_string(basis.size()) +
                                    " coefficients, got " + std::to_string(coeffs.size()));
    }
    Element out = a.zero();
    for (size_t k = 0; k < basis.size(); ++k) out = out + coeffs[k] * basis[k];
    return out;
}

// Validation failures carry exit code 2; a DoesNotGenerate caused by an
// ideal U (m^2 inside U) is the excluded hyperplane case, reported rather
// than rejected.
ordered_json hyperplane_report(const json& j) {
    LocalAlgebra a = algebra_from_json(j.at("algebra"));
    Subspace u = subspace_from_json(j.at("subspace"), a.dim());
    if (!a.max_ideal().contains(u)) throw Error("NotInMaximalIdeal", "U outside m");
    if (!u.contains(a.ideal_power(2))) {
        throw Error("DoesNotGenerate", "U does not generate the algebra with unit");
    }
    ordered_json out;
    out["pair"] = ordered_json{{"dim", a.dim()}, {"mode", "hypersurface"}};
    out["degree"] = 1;
    out["equation"] = ordered_json();
    out["warnings"] = ordered_json::array(
        {"degree 1: U contains m^2, the pair describes a hyperplane and is outside "
         "the hypersurface correspondence; no equation or verdict"});
    return out;
}

int run_analyze(const std::vector<std::string>& files, const Output& out,
                const DecideOptions& opts, bool require_decision) {
    int code = 0;
    for (const std::string& path : files) {
        json j = load_json(path);
        ordered_json report;
        try {
            HPair p = pair_from_json(j);
            report = analysis_report(p, opts);
        } catch (const Error& e) {
            if (std::string(e.kind()) == "DoesNotGenerate" && j.contains("algebra") &&
                j.contains("subspace")) {
                report = hyperplane_report(j);
            } else {
                throw;
            }
        }
        out.emit(report);
        if (require_decision && report.contains("verdict") &&
            report["verdict"]["outcome"] == "unknown") {
            code = 3;
        }
    }
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact analysis of additive actions on projective hypersurfaces"};
    app.require_subcommand(1);

    Output out;
    DecideOptions dopts;
    bool require_decision = false;
    std::vector<std::string> files;
    std::string v_text, shift_text, probe_text, u_text, a_text, points_text, id_text;

    CLI::App* analyze = app.add_subcommand("analyze", "full report for pair files");
    analyze->add_option("files", files, "pair JSON files")->required();
    add_output_flags(analyze, out);
    add_decide_flags(analyze, dopts);
    analyze->add_flag("--require-decision", require_decision,
                      "exit 3 when the verdict is unknown");

    CLI::App* equation_cmd = app.add_subcommand("equation", "defining equation of a pair");
    equation_cmd->add_option("file", files, "pair JSON file")->required()->expected(1);
    add_output_flags(equation_cmd, out);

    CLI::App* limit = app.add_subcommand("limit", "one-parameter limit along v");
    limit->add_option("file", files, "pair JSON file")->required()->expected(1);
    limit->add_option("--v", v_text, "coefficients of v in the U basis")->required();
    limit->add_option("--shift", shift_text, "apply exp(u) to the base point first");
    limit->add_option("--probe", probe_text, "comma-separated t values to evaluate exactly");
    add_output_flags(limit, out);

    CLI::App* act_cmd = app.add_subcommand("act", "apply exp(u) to an element");
    act_cmd->add_option("file", files, "pair JSON file")->required()->expected(1);
    act_cmd->add_option("--u", u_text, "coefficients of u in the U basis")->required();
    act_cmd->add_option("--a", a_text, "coordinates of the element (default 1)");
    add_output_flags(act_cmd, out);

    CLI::App* orbits = app.add_subcommand("orbits", "orbit dimensions at given points");
    orbits->add_option("file", files, "pair JSON file")->required()->expected(1);
    orbits->add_option("--points", points_text, "semicolon-separated coordinate lists")
        ->required();
    add_output_flags(orbits, out);

    CLI::App* decide_cmd = app.add_subcommand("decide", "decide the limit-coverage condition");
    decide_cmd->add_option("file", files, "pair JSON file")->required()->expected(1);
    add_output_flags(decide_cmd, out);
    add_decide_flags(decide_cmd, dopts);
    decide_cmd->add_flag("--require-decision", require_decision,
                         "exit 3 when the verdict is unknown");

    CLI::App* catalog_cmd = app.add_subcommand("catalog", "built-in model catalog");
    CLI::App* cat_list = catalog_cmd->add_subcommand("list", "list model families");
    CLI::App* cat_build = catalog_cmd->add_subcommand("build", "emit a model as pair JSON");
    cat_build->add_option("id", id_text, "model id, e.g. quadric_pair(2)")->required();
    CLI::App* cat_verify =
        catalog_cmd->add_subcommand("verify", "replay the catalog expectation table");
    catalog_cmd->require_subcommand(1);
    for (CLI::App* sub : {cat_list, cat_build, cat_verify}) add_output_flags(sub, out);
    add_decide_flags(cat_verify, dopts);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) return run_analyze(files, out, dopts, require_decision);

        if (*equation_cmd) {
            HPair p = pair_from_json(load_json(files[0]));
            MultiPoly f = equation(p);
            out.emit(ordered_json{{"equation", f.str()},
                                  {"essential_variables", essential_variable_count(f)}});
            return 0;
        }

        if (*limit) {
            HPair p = pair_from_json(load_json(files[0]));
            std::vector<Element> basis = p.u_basis();
            Element v = combine(basis, parse_scalar_list(v_text), p.algebra());
            if (v.is_zero()) throw Error("BadInput", "v must be nonzero");
            Element base = p.algebra().one();
            if (!shift_text.empty()) {
                base = act(p, combine(basis, parse_scalar_list(shift_text), p.algebra()), base);
            }
            TCurve curve = curve_of(p, v, base);
            ordered_json row;
            row["v"] = v_text;
            row["k"] = p.algebra().nilpotency_exponent(v);
            row["limit"] = projective_limit(curve).str();
            if (!probe_text.empty()) {
                ordered_json probes = ordered_json::array();
                for (const Scalar& t : parse_scalar_list(probe_text)) {
                    probes.push_back(ordered_json{
                        {"t", t.str()}, {"point", ProjectivePoint(curve.eval(t)).str()}});
                }
                row["probes"] = std::move(probes);
            }
            out.emit(row);
            return 0;
        }

        if (*act_cmd) {
            HPair p = pair_from_json(load_json(files[0]));
            Element u = combine(p.u_basis(), parse_scalar_list(u_text), p.algebra());
            Element a = p.algebra().one();
            if (!a_text.empty()) {
                std::vector<Scalar> coords = parse_scalar_list(a_text);
                if (static_cast<int>(coords.size()) != p.dim()) {
                    throw Error("BadInput", "element needs " + std::to_string(p.dim()) +
                                                " coordinates");
                }
                a = p.algebra().element(coords);
            }
            Element res = act(p, u, a);
            ordered_json doc;
            ordered_json coords = ordered_json::array();
            for (const Scalar& c : res.coords()) coords.push_back(c.str());
            doc["result"] = std::move(coords);
            doc["point"] = ProjectivePoint(res.coords()).str();
            out.emit(doc);
            return 0;
        }

        if (*orbits) {
            HPair p = pair_from_json(load_json(files[0]));
            MultiPoly f = equation(p);
            ordered_json rows = ordered_json::array();
            std::stringstream ss(points_text);
            std::string part;
            while (std::getline(ss, part, ';')) {
                std::vector<Scalar> coords = parse_scalar_list(part);
                if (static_cast<int>(coords.size()) != p.dim()) {
                    throw Error("BadInput", "point needs " + std::to_string(p.dim()) +
                                                " coordinates");
                }
                Element m = p.algebra().element(coords);
                ordered_json row;
                row["point"] = ProjectivePoint(coords).str();
                row["on_hypersurface"] = contains_point(f, ProjectivePoint(coords));
                row["orbit_dimension"] = orbit_dimension(p, m);
                rows.push_back(std::move(row));
            }
            out.emit(ordered_json{{"orbits", std::move(rows)}});
            return 0;
        }

        if (*decide_cmd) {
            HPair p = pair_from_json(load_json(files[0]));
            Verdict v = decide(p, dopts);
            out.emit(verdict_to_json(v));
            if (require_decision && v.outcome == Outcome::Unknown) return 3;
            return 0;
        }

        if (*cat_list) {
            ordered_json doc;
            doc["families"] = family_list();
            out.emit(doc);
            return 0;
        }

        if (*cat_build) {
            BuiltModel m = build(ModelId::parse(id_text));
            ordered_json doc = m.pair ? pair_to_json(*m.pair) : algebra_to_json(*m.algebra);
            // Built models are machine input for the other commands, so this
            // command always writes JSON.
            std::cout << doc.dump(2) << "\n";
            return 0;
        }

        if (*cat_verify) {
            ordered_json rows = ordered_json::array();
            bool all_ok = true;
            for (const CatalogEntry& entry : catalog()) {
                HPair p = *build(entry.id).pair;
                Verdict v = decide(p, dopts);
                bool replayed = replay(p, v);
                bool eq_ok = true;
                ordered_json row;
                row["id"] = entry.id.str();
                if (!entry.equation.empty()) {
                    std::string eq = equation(p).str();
                    eq_ok = eq == entry.equation;
                    row["degree"] = p.degree();
                    row["equation"] = eq;
                    eq_ok = eq_ok && p.degree() == entry.degree;
                }
                row["outcome"] = outcome_str(v.outcome);
                row["certificate"] = v.certificate.kind_str();
                bool ok = eq_ok && replayed && v.outcome == entry.expected &&
                          v.certificate.kind == entry.expected_kind;
                row["replay"] = replayed;
                row["ok"] = ok;
                all_ok = all_ok && ok;
                rows.push_back(std::move(row));
            }
            out.emit(ordered_json{{"catalog", std::move(rows)}, {"all_ok", all_ok}});
            return all_ok ? 0 : 1;
        }
    } catch (const ValidationError& e) {
        std::cerr << "validation failure: " << e.what() << "\n";
        for (const std::string& line : e.violations()) std::cerr << "  " << line << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error [" << e.kind() << "]: " << e.what() << "\n";
        std::string kind = e.kind();
        bool input_fault = kind == "BadInput" || kind == "BadModelId" ||
                           kind == "BadModelParameter" || kind == "NotInMaximalIdeal" ||
                           kind == "WrongCodimension" || kind == "DoesNotGenerate" ||
                           kind == "DimensionMismatch" || kind == "NotInSubspace";
        return input_fault ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
