#include "addact/json_io.hpp"

#include "addact/error.hpp"

namespace addact {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error("BadInput", what); }

Vec vec_from_json(const json& j, int dim) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim) {
        bad("expected an array of " + std::to_string(dim) + " scalar strings");
    }
    Vec out;
    for (const auto& entry : j) out.push_back(Scalar::parse(entry.get<std::string>()));
    return out;
}

ordered_json vec_to_json(const Vec& v) {
    ordered_json out = ordered_json::array();
    for (const Scalar& c : v) out.push_back(c.str());
    return out;
}

}  // namespace

ModelId model_id_from_family_json(const json& j) try {
    if (!j.contains("name")) bad("family object needs a \"name\"");
    std::string name = j.at("name").get<std::string>();
    ModelId id;
    if (name.find('(') != std::string::npos) {
        id = ModelId::parse(name);  // full textual id, validated by the parser
    } else {
        id.name = name;  // bare family name; parameters follow separately
    }
    if (j.contains("params")) {
        const json& params = j.at("params");
        if (id.name == "socle_extension") {
            if (!params.contains("base") || !params.contains("r")) {
                bad("socle_extension params need \"base\" and \"r\"");
            }
            id.base = std::make_shared<ModelId>(
                ModelId::parse(params.at("base").get<std::string>()));
            id.params = {params.at("r").get<int>()};
        } else if (params.contains("n")) {
            id.params = {params.at("n").get<int>()};
        } else {
            bad("unrecognized family params");
        }
    }
    return id;
} catch (const json::exception& e) {
    bad(e.what());
}

LocalAlgebra algebra_from_json(const json& j) try {
    std::string kind = j.value("kind", "structure_constants");
    if (kind == "family") {
        BuiltModel m = build(model_id_from_family_json(j));
        if (m.algebra) return *m.algebra;
        if (m.pair) return m.pair->algebra();
        bad("family built nothing");
    }
    if (kind != "structure_constants") bad("unknown algebra kind \"" + kind + "\"");
    int dim = j.at("dim").get<int>();
    if (dim < 1) bad("dim must be positive");
    std::vector<std::string> names;
    if (j.contains("basis_names")) {
        for (const auto& n : j.at("basis_names")) names.push_back(n.get<std::string>());
    }
    LocalAlgebra::Table table;
    for (const auto& entry : j.value("table", json::array())) {
        int i = entry.at("i").get<int>();
        int k = entry.at("j").get<int>();
        Vec prod = zero_vec(dim);
        for (const auto& term : entry.at("product")) {
            int idx = term.at(0).get<int>();
            if (idx < 0 || idx >= dim) bad("product index out of range");
            prod[static_cast<size_t>(idx)] = Scalar::parse(term.at(1).get<std::string>());
        }
        table[{std::min(i, k), std::max(i, k)}] = std::move(prod);
    }
    return LocalAlgebra::validate(dim, table, std::move(names));
} catch (const json::exception& e) {
    bad(e.what());
}

ordered_json algebra_to_json(const LocalAlgebra& a) {
    ordered_json out;
    out["kind"] = "structure_constants";
    out["dim"] = a.dim();
    out["basis_names"] = a.basis_names();
    ordered_json table = ordered_json::array();
    for (const auto& [key, prod] : a.table()) {
        if (is_zero_vec(prod)) continue;
        ordered_json entry;
        entry["i"] = key.first;
        entry["j"] = key.second;
        ordered_json terms = ordered_json::array();
        for (size_t k = 0; k < prod.size(); ++k) {
            if (!prod[k].is_zero()) terms.push_back({k, prod[k].str()});
        }
        entry["product"] = std::move(terms);
        table.push_back(std::move(entry));
    }
    out["table"] = std::move(table);
    return out;
}

Subspace subspace_from_json(const json& j, int dim) try {
    Mat rows;
    for (const auto& row : j.at("basis")) rows.push_back(vec_from_json(row, dim));
    return Subspace(dim, rows);
} catch (const json::exception& e) {
    bad(e.what());
}

HPair pair_from_json(const json& j) try {
    if (j.value("kind", "") == "family") {
        BuiltModel m = build(model_id_from_family_json(j));
        if (!m.pair) bad("family \"" + model_id_from_family_json(j).str() +
                         "\" builds an algebra, not a pair");
        return *m.pair;
    }
    if (!j.contains("algebra")) bad("pair object needs an \"algebra\"");
    LocalAlgebra a = algebra_from_json(j.at("algebra"));
    PairMode mode = PairMode::Hypersurface;
    std::string mode_text = j.value("mode", "hypersurface");
    if (mode_text == "projective_space") {
        mode = PairMode::ProjectiveSpace;
    } else if (mode_text != "hypersurface") {
        bad("unknown mode \"" + mode_text + "\"");
    }
    Subspace u(a.dim());
    if (j.contains("subspace")) {
        u = subspace_from_json(j.at("subspace"), a.dim());
    } else if (mode == PairMode::ProjectiveSpace) {
        u = a.max_ideal();
    } else {
        bad("hypersurface pair needs a \"subspace\"");
    }
    return HPair::validate(std::move(a), std::move(u), mode);
} catch (const json::exception& e) {
    bad(e.what());
}

ordered_json pair_to_json(const HPair& p) {
    ordered_json out;
    out["algebra"] = algebra_to_json(p.algebra());
    ordered_json basis = ordered_json::array();
    for (const Vec& row : p.u().basis()) basis.push_back(vec_to_json(row));
    out["subspace"] = ordered_json{{"basis", std::move(basis)}};
    out["mode"] =
        p.mode() == PairMode::ProjectiveSpace ? "projective_space" : "hypersurface";
    return out;
}

ordered_json certificate_to_json(const Certificate& c) {
    ordered_json out;
    out["kind"] = c.kind_str();
    switch (c.kind) {
        case Certificate::Kind::DegreeGate:
            out["degree"] = c.degree;
            break;
        case Certificate::Kind::CoreClassification:
            out["model"] = c.model;
            out["invariants"] = c.invariants;
            break;
        case Certificate::Kind::SocleExtension:
            out["extension_rank"] = c.extension_rank;
            out["core"] = c.core ? certificate_to_json(*c.core) : ordered_json();
            break;
        case Certificate::Kind::UnreachableOrbit:
            out["witness"] = vec_to_json(c.witness);
            out["excluded_strata"] = c.excluded_strata;
            out["quadratic_factoring"] = c.quadratic_factoring;
            break;
        case Certificate::Kind::PnNonSquareZero:
            out["i"] = c.pair_i;
            out["j"] = c.pair_j;
            break;
        default:
            break;
    }
    return out;
}

Certificate certificate_from_json(const json& j) try {
    Certificate c;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "degree_gate") {
        c.kind = Certificate::Kind::DegreeGate;
        c.degree = j.at("degree").get<int>();
    } else if (kind == "core_classification") {
        c.kind = Certificate::Kind::CoreClassification;
        c.model = j.at("model").get<std::string>();
        for (const auto& line : j.at("invariants")) c.invariants.push_back(line.get<std::string>());
    } else if (kind == "socle_extension") {
        c.kind = Certificate::Kind::SocleExtension;
        c.extension_rank = j.at("extension_rank").get<int>();
        c.core = std::make_shared<Certificate>(certificate_from_json(j.at("core")));
    } else if (kind == "unreachable_orbit") {
        c.kind = Certificate::Kind::UnreachableOrbit;
        for (const auto& entry : j.at("witness")) {
            c.witness.push_back(Scalar::parse(entry.get<std::string>()));
        }
        for (const auto& line : j.at("excluded_strata")) {
            c.excluded_strata.push_back(line.get<std::string>());
        }
        c.quadratic_factoring = j.value("quadratic_factoring", false);
    } else if (kind == "pn_square_zero") {
        c.kind = Certificate::Kind::PnSquareZero;
    } else if (kind == "pn_non_square_zero") {
        c.kind = Certificate::Kind::PnNonSquareZero;
        c.pair_i = j.at("i").get<int>();
        c.pair_j = j.at("j").get<int>();
    } else if (kind == "inconclusive") {
        c.kind = Certificate::Kind::Inconclusive;
    } else {
        bad("unknown certificate kind \"" + kind + "\"");
    }
    return c;
} catch (const json::exception& e) {
    bad(e.what());
}

ordered_json verdict_to_json(const Verdict& v) {
    ordered_json out;
    out["outcome"] = outcome_str(v.outcome);
    out["certificate"] = certificate_to_json(v.certificate);
    out["diagnostics"] = v.diagnostics;
    return out;
}

Verdict verdict_from_json(const json& j) try {
    Verdict v;
    std::string o = j.at("outcome").get<std::string>();
    v.outcome = o == "yes" ? Outcome::Yes : o == "no" ? Outcome::No : Outcome::Unknown;
    v.certificate = certificate_from_json(j.at("certificate"));
    for (const auto& line : j.value("diagnostics", json::array())) {
        v.diagnostics.push_back(line.get<std::string>());
    }
    return v;
} catch (const json::exception& e) {
    bad(e.what());
}

}  // namespace addact
