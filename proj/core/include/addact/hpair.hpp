#pragma once

#include <vector>

#include "addact/algebra.hpp"

namespace addact {

enum class PairMode { Hypersurface, ProjectiveSpace };

// A local algebra together with a generating subspace U of the maximal
// ideal: codimension 1 in m for hypersurface actions, U = m for the
// projective-space action of the same machinery.
class HPair {
public:
    static HPair validate(LocalAlgebra algebra, Subspace u,
                          PairMode mode = PairMode::Hypersurface);

    const LocalAlgebra& algebra() const { return algebra_; }
    const Subspace& u() const { return u_; }
    PairMode mode() const { return mode_; }
    int dim() const { return algebra_.dim(); }
    // Number of action parameters = dim U.
    int params() const { return u_.dim(); }

    // Basis elements of U in RREF order; the action parameters s1..sm are
    // attached to these.
    std::vector<Element> u_basis() const;

    // Largest d with m^d not contained in U. d = 1 marks a hyperplane,
    // which the correspondence excludes; callers should warn, not fail.
    int degree() const;
    bool is_nondegenerate() const;

private:
    HPair(LocalAlgebra algebra, Subspace u, PairMode mode)
        : algebra_(std::move(algebra)), u_(std::move(u)), mode_(mode) {}

    LocalAlgebra algebra_;
    Subspace u_;
    PairMode mode_;
};

struct ReductionStep {
    Subspace w;       // U ∩ Soc(A) at this step, in the pre-step coordinates
    Mat projection;   // quotient projection applied at this step
};

// Fixed-point iteration of the quotient by W = U ∩ Soc(A); the core pair is
// non-degenerate, with an empty step list iff the input already was.
struct ReductionTrace {
    std::vector<ReductionStep> steps;
    HPair core;
};

ReductionTrace reduce(const HPair& p);

}  // namespace addact
