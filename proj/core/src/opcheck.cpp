#include "addact/opcheck.hpp"

#include <map>
#include <random>
#include <sstream>

#include "addact/error.hpp"

namespace addact {

std::string outcome_str(Outcome o) {
    switch (o) {
        case Outcome::Yes: return "yes";
        case Outcome::No: return "no";
        default: return "unknown";
    }
}

std::string Certificate::kind_str() const {
    switch (kind) {
        case Kind::DegreeGate: return "degree_gate";
        case Kind::CoreClassification: return "core_classification";
        case Kind::SocleExtension: return "socle_extension";
        case Kind::UnreachableOrbit: return "unreachable_orbit";
        case Kind::PnSquareZero: return "pn_square_zero";
        case Kind::PnNonSquareZero: return "pn_non_square_zero";
        default: return "inconclusive";
    }
}

namespace {

Verdict inconclusive(std::vector<std::string> diags) {
    Verdict v;
    v.outcome = Outcome::Unknown;
    v.certificate.kind = Certificate::Kind::Inconclusive;
    v.diagnostics = std::move(diags);
    return v;
}

std::string vec_str(const Vec& v) {
    std::string out = "(";
    for (size_t k = 0; k < v.size(); ++k) {
        if (k) out += ", ";
        out += v[k].str();
    }
    return out + ")";
}

// Runs the invariant checks shared by classify_core and replay; on success
// fills model and invariants, on failure records the failing check.
bool core_invariants(const HPair& p, std::string* model,
                     std::vector<std::string>* invariants, std::string* why) {
    const LocalAlgebra& a = p.algebra();
    if (!p.is_nondegenerate()) {
        *why = "pair is degenerate";
        return false;
    }
    int d = p.degree();
    if (d == 2) {
        Subspace m2 = a.ideal_power(2);
        if (m2.dim() != 1) {
            *why = "dim m^2 = " + std::to_string(m2.dim()) + ", expected 1";
            return false;
        }
        if (!(m2 == a.socle())) {
            *why = "m^2 differs from Soc(A)";
            return false;
        }
        std::vector<Element> ub = p.u_basis();
        int n = static_cast<int>(ub.size());
        // Gram matrix of (x, y) -> coordinate of x*y in m^2.
        Mat gram(static_cast<size_t>(n), zero_vec(n));
        for (int i = 0; i < n; ++i) {
            for (int j = i; j < n; ++j) {
                Vec prod = (ub[static_cast<size_t>(i)] * ub[static_cast<size_t>(j)]).coords();
                Vec co = row_space_coords(m2.basis(), prod);
                gram[static_cast<size_t>(i)][static_cast<size_t>(j)] = co[0];
                gram[static_cast<size_t>(j)][static_cast<size_t>(i)] = co[0];
            }
        }
        int r = rank(gram);
        if (r != n) {
            *why = "product form on U has rank " + std::to_string(r) + " < " +
                   std::to_string(n);
            return false;
        }
        *model = "quadric_pair(" + std::to_string(n) + ")";
        *invariants = {"degree = 2", "dim m^2 = 1", "m^2 = Soc(A)",
                       "rank of product form on U = " + std::to_string(n)};
        return true;
    }
    if (d == 3) {
        if (a.dim() != 4) {
            *why = "dim A = " + std::to_string(a.dim()) + ", expected 4";
            return false;
        }
        if (a.ideal_power(2).dim() != 2) {
            *why = "dim m^2 = " + std::to_string(a.ideal_power(2).dim()) + ", expected 2";
            return false;
        }
        if (a.ideal_power(3).dim() != 1) {
            *why = "dim m^3 = " + std::to_string(a.ideal_power(3).dim()) + ", expected 1";
            return false;
        }
        *model = "cubic_pair";
        *invariants = {"degree = 3", "dim A = 4", "dim m^2 = 2", "dim m^3 = 1"};
        return true;
    }
    *why = "degree " + std::to_string(d) + " outside {2, 3}";
    return false;
}

struct SocleSplit {
    Subspace w;   // U cap Soc(A)
    Subspace u0;  // complement of W inside U, from the RREF basis rows
    Subspace b;   // subalgebra generated by U0
};

// The structural decomposition behind the socle-extension certificate;
// empty when W = 0 or when B and W fail to decompose A.
std::optional<SocleSplit> socle_split(const HPair& p, std::string* why) {
    const LocalAlgebra& a = p.algebra();
    Subspace w = intersect(p.u(), a.socle());
    if (w.is_zero()) {
        *why = "U cap Soc(A) = 0";
        return std::nullopt;
    }
    Mat extended = w.basis();
    Mat picked;
    for (const Vec& row : p.u().basis()) {
        Mat test = extended;
        test.push_back(row);
        if (rank(test) > static_cast<int>(extended.size())) {
            extended = std::move(test);
            picked.push_back(row);
        }
    }
    Subspace u0(a.dim(), picked);
    Subspace b = a.subalgebra_generated(u0);
    if (!intersect(b, w).is_zero()) {
        *why = "generated subalgebra meets W";
        return std::nullopt;
    }
    if (b.dim() + w.dim() != a.dim()) {
        *why = "B + W does not fill A (dim B = " + std::to_string(b.dim()) +
               ", dim W = " + std::to_string(w.dim()) + ")";
        return std::nullopt;
    }
    return SocleSplit{std::move(w), std::move(u0), std::move(b)};
}

// Coefficient vectors of the limit coordinates, one per monomial in the
// stratum parameters: every limit point on the stratum is a specialization,
// hence a linear combination of these.
std::vector<Vec> limit_coefficient_vectors(const LimitStratum& s, int dim) {
    std::map<std::vector<int>, Vec, GrlexGreater> cols;
    for (size_t k = 0; k < s.limit_coords.size(); ++k) {
        for (const auto& [exps, c] : s.limit_coords[k].terms()) {
            auto it = cols.find(exps);
            if (it == cols.end()) it = cols.emplace(exps, zero_vec(dim)).first;
            it->second[k] = c;
        }
    }
    std::vector<Vec> out;
    out.reserve(cols.size());
    for (auto& [exps, v] : cols) out.push_back(std::move(v));
    return out;
}

// Sound exclusion of one stratum from the orbit cone of m. Every point of
// the orbit cone has the form c*(m + w) with c != 0 and w in m*m-ideal, so
// it lies in the hull H = span(m) + m*m-ideal with nonzero m-component.
// A stratum is excluded when its limit span meets H only in 0, or when all
// its coefficient vectors lie in H with m-component 0.
std::optional<std::string> stratum_exclusion(const HPair& p, const Subspace& hull,
                                             const Mat& hull_rows, bool alpha_defined,
                                             const LimitStratum& s) {
    std::string label = s.conditions.empty() ? "generic" : "";
    for (size_t k = 0; k < s.conditions.size(); ++k) {
        if (k) label += " & ";
        label += s.conditions[k];
    }
    label += "; k = " + std::to_string(s.power);
    std::vector<Vec> cvecs = limit_coefficient_vectors(s, p.dim());
    if (cvecs.empty()) return label + ": no limit points";
    Subspace span(p.dim(), Mat(cvecs.begin(), cvecs.end()));
    if (intersect(span, hull).is_zero()) return label + ": limit span misses the orbit hull";
    if (alpha_defined) {
        bool all_flat = true;
        for (const Vec& c : cvecs) {
            auto co = solve_combination(hull_rows, c);
            if (!co || !(*co)[0].is_zero()) {
                all_flat = false;
                break;
            }
        }
        if (all_flat) return label + ": limits lie in the hull with zero witness component";
    }
    return std::nullopt;
}

// Exclusion lines for every stratum of the tree, or empty if some stratum
// resists. hull_rows = [m, basis of m*m-ideal] when m is outside m*m-ideal.
std::optional<std::vector<std::string>> exclude_all_strata(
    const HPair& p, const Vec& m, const StratificationTree& tree) {
    const LocalAlgebra& a = p.algebra();
    Element me = a.element(m);
    Subspace mm(a.dim(), Mat{});
    {
        Mat rows;
        for (int k = 1; k < a.dim(); ++k) rows.push_back((me * a.basis_element(k)).coords());
        mm = Subspace(a.dim(), rows);
    }
    Subspace hull(a.dim(), Mat{m});
    hull = hull + mm;
    bool alpha_defined = !mm.contains(m);
    Mat hull_rows;
    if (alpha_defined) {
        hull_rows.push_back(m);
        for (const Vec& row : mm.basis()) hull_rows.push_back(row);
    }
    std::vector<std::string> lines;
    for (const LimitStratum* s : tree.all_strata()) {
        auto line = stratum_exclusion(p, hull, hull_rows, alpha_defined, *s);
        if (!line) return std::nullopt;
        lines.push_back(*line);
    }
    return lines;
}

// Deterministic candidate stream: basis vectors of m, pairwise sums, then
// seeded integer samples with numerators in [-height, height].
std::vector<Vec> witness_candidates(const HPair& p, const DecideOptions& opts) {
    const LocalAlgebra& a = p.algebra();
    std::vector<Vec> out;
    for (int k = 1; k < a.dim(); ++k) out.push_back(unit_vec(a.dim(), k));
    for (int i = 1; i < a.dim(); ++i) {
        for (int j = i + 1; j < a.dim(); ++j) {
            out.push_back(add(unit_vec(a.dim(), i), unit_vec(a.dim(), j)));
        }
    }
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<long> pick(-opts.height, opts.height);
    for (int s = 0; s < opts.samples; ++s) {
        Vec v = zero_vec(a.dim());
        for (int k = 1; k < a.dim(); ++k) v[static_cast<size_t>(k)] = Scalar(pick(rng));
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

Verdict classify_core(const HPair& p) {
    if (!p.is_nondegenerate()) {
        throw Error("Precondition", "classify_core needs a non-degenerate pair");
    }
    int d = p.degree();
    if (d != 2 && d != 3) {
        throw Error("Precondition", "classify_core needs degree 2 or 3");
    }
    Certificate c;
    c.kind = Certificate::Kind::CoreClassification;
    std::string why;
    Verdict v;
    if (core_invariants(p, &c.model, &c.invariants, &why)) {
        v.outcome = Outcome::Yes;
        v.diagnostics.push_back("matched normal form " + c.model);
    } else {
        // The classification proof derives these invariants from
        // non-degeneracy; a failure is recorded as the refuting invariant.
        v.outcome = Outcome::No;
        c.invariants = {why};
        v.diagnostics.push_back("classification invariant failed: " + why);
    }
    v.certificate = std::move(c);
    return v;
}

std::optional<Verdict> recognize_socle_extension(const HPair& p, const DecideOptions&) {
    std::string why;
    auto split = socle_split(p, &why);
    if (!split) return std::nullopt;
    ReductionTrace tr = reduce(p);
    Verdict core_v = classify_core(tr.core);
    if (core_v.outcome != Outcome::Yes) return std::nullopt;
    Verdict v;
    v.outcome = Outcome::Yes;
    v.certificate.kind = Certificate::Kind::SocleExtension;
    v.certificate.core = std::make_shared<Certificate>(core_v.certificate);
    v.certificate.extension_rank = p.dim() - tr.core.dim();
    v.diagnostics.push_back(
        "A splits as B + W with dim W = " + std::to_string(split->w.dim()) +
        "; core matched " + core_v.certificate.model);
    return v;
}

std::optional<Verdict> stratified_refute(const HPair& p, const DecideOptions& opts) {
    GenericLimitOptions lopts;
    lopts.quadratic_factoring = opts.quadratic_factoring;
    StratificationTree tree = generic_limit(p, lopts);
    if (!tree.fully_resolved()) return std::nullopt;
    for (const Vec& m : witness_candidates(p, opts)) {
        if (is_zero_vec(m)) continue;
        Element me = p.algebra().element(m);
        if (!complement_test(p, me)) continue;
        auto lines = exclude_all_strata(p, m, tree);
        if (!lines) continue;
        Verdict v;
        v.outcome = Outcome::No;
        v.certificate.kind = Certificate::Kind::UnreachableOrbit;
        v.certificate.witness = m;
        v.certificate.excluded_strata = std::move(*lines);
        v.certificate.quadratic_factoring = opts.quadratic_factoring;
        v.diagnostics.push_back("orbit of " + vec_str(m) +
                                " is disjoint from every one-parameter limit");
        return v;
    }
    return std::nullopt;
}

Verdict pn_op_check(const HPair& p) {
    const LocalAlgebra& a = p.algebra();
    Verdict v;
    if (a.ideal_power(2).is_zero()) {
        v.outcome = Outcome::Yes;
        v.certificate.kind = Certificate::Kind::PnSquareZero;
        v.diagnostics.push_back("m^2 = 0");
        return v;
    }
    for (int i = 1; i < a.dim(); ++i) {
        for (int j = i; j < a.dim(); ++j) {
            if (!is_zero_vec(a.mul(unit_vec(a.dim(), i), unit_vec(a.dim(), j)))) {
                v.outcome = Outcome::No;
                v.certificate.kind = Certificate::Kind::PnNonSquareZero;
                v.certificate.pair_i = i;
                v.certificate.pair_j = j;
                v.diagnostics.push_back("e" + std::to_string(i) + " * e" +
                                        std::to_string(j) + " != 0");
                return v;
            }
        }
    }
    throw Error("Internal", "nonzero m^2 without a nonzero basis product");
}

Verdict decide(const HPair& p, const DecideOptions& opts) {
    if (p.mode() == PairMode::ProjectiveSpace) return pn_op_check(p);
    int d = p.degree();
    if (d != 2 && d != 3) {
        Verdict v;
        v.outcome = Outcome::No;
        v.certificate.kind = Certificate::Kind::DegreeGate;
        v.certificate.degree = d;
        v.diagnostics.push_back("degree " + std::to_string(d) +
                                " lies outside the decidable range {2, 3}");
        return v;
    }
    std::vector<std::string> diags;
    ReductionTrace tr = reduce(p);
    Verdict core_v = classify_core(tr.core);
    if (p.is_nondegenerate()) return core_v;
    if (core_v.outcome == Outcome::No) {
        // Degree and the classification invariants survive reduction, so a
        // refuted core refutes the pair.
        core_v.diagnostics.insert(core_v.diagnostics.begin(),
                                  "reduced core fails classification");
        return core_v;
    }
    if (auto se = recognize_socle_extension(p, opts)) return *se;
    diags.push_back("pair does not split as a socle extension over a classified core");
    if (auto refuted = stratified_refute(p, opts)) {
        refuted->diagnostics.insert(refuted->diagnostics.begin(), diags.begin(), diags.end());
        return *refuted;
    }
    diags.push_back("no refuting witness found");
    return inconclusive(std::move(diags));
}

bool replay(const HPair& p, const Verdict& v, std::vector<std::string>* log) {
    auto note = [&](const std::string& line) {
        if (log) log->push_back(line);
    };
    auto fail = [&](const std::string& line) {
        note("FAIL: " + line);
        return false;
    };
    const Certificate& c = v.certificate;
    switch (c.kind) {
        case Certificate::Kind::DegreeGate: {
            if (v.outcome != Outcome::No) return fail("degree gate must carry a negative");
            int d = p.degree();
            if (d != c.degree) return fail("recorded degree " + std::to_string(c.degree) +
                                           " but pair has degree " + std::to_string(d));
            if (d == 2 || d == 3) return fail("degree is inside the decidable range");
            note("degree " + std::to_string(d) + " outside {2, 3}");
            return true;
        }
        case Certificate::Kind::CoreClassification: {
            if (v.outcome == Outcome::Unknown) {
                return fail("classification cannot carry an unknown");
            }
            // The certificate refers to the reduced core, which is the
            // pair itself when it is already non-degenerate.
            HPair core = reduce(p).core;
            std::string model, why;
            std::vector<std::string> inv;
            bool matched = core_invariants(core, &model, &inv, &why);
            if (v.outcome == Outcome::Yes) {
                if (!matched) return fail(why);
                if (model != c.model) return fail("recomputed model " + model +
                                                  " differs from recorded " + c.model);
                if (inv != c.invariants) return fail("recorded invariants do not recompute");
                note("invariants recompute; model " + model);
            } else {
                if (matched) return fail("invariants match " + model + ", not a refutation");
                if (c.invariants != std::vector<std::string>{why}) {
                    return fail("recorded failing invariant does not recompute");
                }
                note("failing invariant recomputes: " + why);
            }
            return true;
        }
        case Certificate::Kind::SocleExtension: {
            if (v.outcome != Outcome::Yes) return fail("socle extension must carry a positive");
            if (!c.core) return fail("missing core certificate");
            std::string why;
            auto split = socle_split(p, &why);
            if (!split) return fail(why);
            // W * m = 0, explicitly: W sits inside the socle.
            if (!p.algebra().socle().contains(split->w)) return fail("W is not annihilated by m");
            ReductionTrace tr = reduce(p);
            if (c.extension_rank != p.dim() - tr.core.dim()) {
                return fail("extension rank does not recompute");
            }
            note("decomposition A = B + W recomputes (dim W = " +
                 std::to_string(split->w.dim()) + ")");
            Verdict core_v;
            core_v.outcome = Outcome::Yes;
            core_v.certificate = *c.core;
            return replay(tr.core, core_v, log);
        }
        case Certificate::Kind::UnreachableOrbit: {
            if (v.outcome != Outcome::No) return fail("witness must carry a negative");
            if (static_cast<int>(c.witness.size()) != p.dim() || is_zero_vec(c.witness)) {
                return fail("malformed witness");
            }
            Element m = p.algebra().element(c.witness);
            if (!m.in_max_ideal()) return fail("witness outside the maximal ideal");
            if (!complement_test(p, m)) return fail("witness is not a hypersurface point");
            GenericLimitOptions lopts;
            lopts.quadratic_factoring = c.quadratic_factoring;
            StratificationTree tree = generic_limit(p, lopts);
            if (!tree.fully_resolved()) return fail("limit stratification is not resolved");
            auto lines = exclude_all_strata(p, c.witness, tree);
            if (!lines) return fail("some stratum is not excluded for the witness");
            if (lines->size() != c.excluded_strata.size()) {
                return fail("stratum count does not recompute");
            }
            note("all " + std::to_string(lines->size()) +
                 " strata excluded for witness " + vec_str(c.witness));
            return true;
        }
        case Certificate::Kind::PnSquareZero: {
            if (v.outcome != Outcome::Yes) return fail("square-zero must carry a positive");
            if (p.mode() != PairMode::ProjectiveSpace) return fail("not a projective-space pair");
            if (!p.algebra().ideal_power(2).is_zero()) return fail("m^2 != 0");
            note("m^2 = 0");
            return true;
        }
        case Certificate::Kind::PnNonSquareZero: {
            if (v.outcome != Outcome::No) return fail("nonzero product must carry a negative");
            if (p.mode() != PairMode::ProjectiveSpace) return fail("not a projective-space pair");
            const LocalAlgebra& a = p.algebra();
            if (c.pair_i < 1 || c.pair_j < c.pair_i || c.pair_j >= a.dim()) {
                return fail("malformed basis pair");
            }
            if (is_zero_vec(a.mul(unit_vec(a.dim(), c.pair_i), unit_vec(a.dim(), c.pair_j)))) {
                return fail("recorded basis product is zero");
            }
            note("e" + std::to_string(c.pair_i) + " * e" + std::to_string(c.pair_j) + " != 0");
            return true;
        }
        default:
            if (v.outcome != Outcome::Unknown) return fail("inconclusive verdict must be unknown");
            note("nothing to verify");
            return true;
    }
}

}  // namespace addact
