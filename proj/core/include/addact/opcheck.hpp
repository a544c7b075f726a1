#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "addact/limits.hpp"

namespace addact {

enum class Outcome { Yes, No, Unknown };

std::string outcome_str(Outcome o);

// Machine-checkable evidence for a verdict. Every kind records the data
// replay() needs to re-verify the verdict from the pair alone.
struct Certificate {
    enum class Kind {
        // Hypersurface degree outside {2, 3}; the decision procedure only
        // covers quadrics and cubics and those degrees force a negative.
        DegreeGate,
        // Non-degenerate pair matching a catalog normal form by invariants.
        CoreClassification,
        // Pair splits as core-plus-annihilated-socle; wraps the core's
        // classification certificate.
        SocleExtension,
        // Witness point of the hypersurface whose orbit is disjoint from
        // every one-parameter limit; each stratum of the limit
        // stratification carries an exclusion reason.
        UnreachableOrbit,
        // Full projective space, m^2 = 0.
        PnSquareZero,
        // Full projective space, basis pair with nonzero product.
        PnNonSquareZero,
        // No branch of the procedure produced evidence either way.
        Inconclusive,
    };

    Kind kind = Kind::Inconclusive;

    int degree = 0;  // DegreeGate

    std::string model;                    // CoreClassification
    std::vector<std::string> invariants;  // recomputable "name = value" rows

    std::shared_ptr<const Certificate> core;  // SocleExtension
    int extension_rank = 0;

    Vec witness;                               // UnreachableOrbit
    std::vector<std::string> excluded_strata;  // one line per stratum
    bool quadratic_factoring = false;          // stratification option used

    int pair_i = 0, pair_j = 0;  // PnNonSquareZero

    std::string kind_str() const;
};

struct Verdict {
    Outcome outcome = Outcome::Unknown;
    Certificate certificate;
    std::vector<std::string> diagnostics;
};

struct DecideOptions {
    unsigned long seed = 12345;
    int samples = 500;
    // Coordinate numerators of random witness candidates range over
    // [-height, height].
    long height = 5;
    bool quadratic_factoring = false;
};

// Full decision pipeline: projective-space test, degree gate, core
// classification (after splitting off an annihilated socle part when
// present), then stratified witness search. Unknown when all branches pass.
Verdict decide(const HPair& p, const DecideOptions& opts = {});

// Invariant match of a non-degenerate pair of degree 2 or 3 against the
// quadric and cubic normal forms. Yes on a match, Unknown otherwise.
Verdict classify_core(const HPair& p);

// Splits A = B + W with W = U cap Soc(A), W * m = 0 and B the subalgebra
// generated by a complement of W in U; on success classifies the reduced
// core and wraps its certificate. Empty when the pair does not split.
std::optional<Verdict> recognize_socle_extension(const HPair& p,
                                                 const DecideOptions& opts);

// Searches for a hypersurface point whose orbit cone misses every stratum
// of the symbolic limit stratification; a hit is a sound negative. Empty
// when the stratification has unresolved strata or no witness is found.
std::optional<Verdict> stratified_refute(const HPair& p, const DecideOptions& opts);

// Projective-space pairs: the condition holds iff m^2 = 0.
Verdict pn_op_check(const HPair& p);

// Re-verifies a verdict against the pair from the certificate data alone,
// recomputing every recorded invariant. Appends a line per check to log.
bool replay(const HPair& p, const Verdict& v, std::vector<std::string>* log = nullptr);

}  // namespace addact
