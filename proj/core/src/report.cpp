#include "addact/report.hpp"

#include <sstream>

#include "addact/limits.hpp"

namespace addact {

using nlohmann::ordered_json;

namespace {

ordered_json scalar_row(const Vec& v) {
    ordered_json out = ordered_json::array();
    for (const Scalar& c : v) out.push_back(c.str());
    return out;
}

}  // namespace

ordered_json analysis_report(const HPair& p, const DecideOptions& opts) {
    const LocalAlgebra& a = p.algebra();
    ordered_json out;
    std::vector<std::string> warnings;

    ordered_json pair;
    pair["dim"] = a.dim();
    pair["mode"] =
        p.mode() == PairMode::ProjectiveSpace ? "projective_space" : "hypersurface";
    pair["basis_names"] = a.basis_names();
    ordered_json ub = ordered_json::array();
    for (const Vec& row : p.u().basis()) ub.push_back(scalar_row(row));
    pair["u_basis"] = std::move(ub);
    out["pair"] = std::move(pair);

    bool projective = p.mode() == PairMode::ProjectiveSpace;
    int degree = projective ? 0 : p.degree();
    out["degree"] = projective ? ordered_json() : ordered_json(degree);
    out["nondegenerate"] = projective ? ordered_json() : ordered_json(p.is_nondegenerate());

    if (projective) {
        out["reduction"] = ordered_json();
    } else {
        ReductionTrace tr = reduce(p);
        ordered_json red;
        red["steps"] = tr.steps.size();
        red["core_dim"] = tr.core.dim();
        out["reduction"] = std::move(red);
    }

    if (projective) {
        out["equation"] = ordered_json();
        out["essential_variables"] = ordered_json();
    } else if (degree < 2) {
        out["equation"] = ordered_json();
        out["essential_variables"] = ordered_json();
        warnings.push_back("degree 1: the pair describes a hyperplane, no equation synthesized");
    } else {
        MultiPoly f = equation(p);
        out["equation"] = f.str();
        out["essential_variables"] = essential_variable_count(f);
    }

    {
        ordered_json formula = ordered_json::array();
        for (const std::string& line : action_formula(p).str()) formula.push_back(line);
        out["action_formula"] = std::move(formula);
    }

    {
        // One-parameter limits along each U basis direction, from the base
        // point [1].
        ordered_json limits = ordered_json::array();
        std::vector<Element> ub = p.u_basis();
        for (size_t k = 0; k < ub.size(); ++k) {
            ordered_json row;
            Vec unit = zero_vec(static_cast<int>(ub.size()));
            unit[k] = Scalar(1);
            row["v"] = scalar_row(unit);
            row["k"] = a.nilpotency_exponent(ub[k]);
            row["limit"] = one_param_limit(p, ub[k]).str();
            limits.push_back(std::move(row));
        }
        out["limits"] = std::move(limits);
    }

    out["verdict"] = verdict_to_json(decide(p, opts));
    out["warnings"] = warnings;
    return out;
}

namespace {

void render(const ordered_json& j, const std::string& prefix, std::ostringstream& os) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (value.is_object() || (value.is_array() && !value.empty() &&
                                      (value[0].is_object() || value[0].is_array()))) {
                os << prefix << key << ":\n";
                render(value, prefix + "  ", os);
            } else {
                os << prefix << key << ": " << (value.is_string() ? value.get<std::string>()
                                                                  : value.dump())
                   << "\n";
            }
        }
        return;
    }
    if (j.is_array()) {
        for (const auto& value : j) {
            if (value.is_object() || value.is_array()) {
                os << prefix << "-\n";
                render(value, prefix + "  ", os);
            } else {
                os << prefix << "- "
                   << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
            }
        }
        return;
    }
    os << prefix << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

}  // namespace

std::string render_text(const ordered_json& report) {
    std::ostringstream os;
    render(report, "", os);
    return os.str();
}

}  // namespace addact
