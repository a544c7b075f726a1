#pragma once

#include <optional>
#include <string>
#include <vector>

#include "addact/geometry.hpp"

namespace addact {

// exp(t*v) * a with polynomial-in-t coordinates.
struct TCurve {
    std::vector<UniPoly> coords;

    Vec eval(const Scalar& t) const;
    Vec at_zero() const;
    // Coefficients of t^K in each coordinate, K the maximal degree: the
    // direction of the curve as t -> infinity.
    Vec leading_coeffs() const;
};

TCurve curve_of(const HPair& p, const Element& v, const Element& a);

// Limit of [c(t)] as t -> infinity: the leading coefficient direction.
ProjectivePoint projective_limit(const TCurve& c);

// lim t*v o [1] = [v^k], k the nilpotency exponent of v; cross-checked
// against the curve's leading term.
ProjectivePoint one_param_limit(const HPair& p, const Element& v);

// Exact curve evaluations, canonicalized; the independent numeric-style
// oracle for limit values.
std::vector<ProjectivePoint> limit_probe(const HPair& p, const Element& v,
                                         const std::vector<long>& t_values);

// ---------------------------------------------------------------------------
// Symbolic limits of v = sum s_i u_i over the parameter space, stratified by
// the vanishing of the leading coefficient vector.

struct LimitStratum {
    // Linear conditions (in the parent's parameters) cutting this stratum
    // out; empty at the root.
    std::vector<std::string> conditions;
    // Parameter names valid on this stratum (s1..sq), attached to dirs.
    std::vector<std::string> params;
    // Direction basis: v = sum s_i * dirs_i ranges over the stratum.
    std::vector<Element> dirs;

    bool unresolved = false;
    std::string unresolved_condition;  // the polynomial that resisted factoring

    int power = 0;                       // generic k on this stratum
    std::vector<MultiPoly> limit_coords; // coords of v^k in params, normalized
    std::optional<ProjectivePoint> constant_limit;  // set when coords are constant

    std::vector<LimitStratum> children;  // proper sub-strata
};

struct StratificationTree {
    LimitStratum root;
    bool fully_resolved() const;
    // All strata of the tree (including interior nodes; every node carries
    // a generic limit valid off its children).
    std::vector<const LimitStratum*> all_strata() const;
};

struct GenericLimitOptions {
    // Factor binary quadratic vanishing conditions over Q(i) into linear
    // forms (covers the quadric's isotropic cone for n = 2).
    bool quadratic_factoring = false;
};

StratificationTree generic_limit(const HPair& p, const GenericLimitOptions& opts = {});

// sqrt in Q(i) when it exists.
std::optional<Scalar> gaussian_sqrt(const Scalar& w);

}  // namespace addact
