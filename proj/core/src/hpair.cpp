#include "addact/hpair.hpp"

#include "addact/error.hpp"

namespace addact {

HPair HPair::validate(LocalAlgebra algebra, Subspace u, PairMode mode) {
    if (u.ambient_dim() != algebra.dim())
        throw Error("DimensionMismatch", "subspace ambient does not match algebra dimension");
    Subspace m = algebra.max_ideal();
    if (!m.contains(u)) throw Error("NotInMaximalIdeal", "U must lie inside the maximal ideal");
    if (mode == PairMode::ProjectiveSpace) {
        if (u != m)
            throw Error("WrongCodimension", "projective-space mode requires U = m");
    } else if (u.dim() != m.dim() - 1) {
        throw Error("WrongCodimension", "U must have codimension 1 in the maximal ideal");
    }
    if (algebra.subalgebra_generated(u).dim() != algebra.dim())
        throw Error("DoesNotGenerate", "U does not generate the algebra with unit");
    return HPair(std::move(algebra), std::move(u), mode);
}

std::vector<Element> HPair::u_basis() const {
    std::vector<Element> out;
    for (const auto& row : u_.basis()) out.push_back(algebra_.element(row));
    return out;
}

int HPair::degree() const {
    if (mode_ != PairMode::Hypersurface)
        throw Error("WrongMode", "degree is defined for hypersurface pairs");
    int d = 0;
    for (int k = 1; k <= algebra_.dim(); ++k) {
        Subspace pw = algebra_.ideal_power(k);
        if (pw.is_zero()) break;
        if (!u_.contains(pw)) d = k;
    }
    return d;  // d >= 1: m itself has codimension-1 U
}

bool HPair::is_nondegenerate() const {
    if (mode_ != PairMode::Hypersurface)
        throw Error("WrongMode", "non-degeneracy is defined for hypersurface pairs");
    Subspace soc = algebra_.socle();
    if (soc.dim() != 1) return false;
    Subspace m = algebra_.max_ideal();
    return (u_ + soc) == m && intersect(u_, soc).is_zero();
}

ReductionTrace reduce(const HPair& p) {
    if (p.mode() != PairMode::Hypersurface)
        throw Error("WrongMode", "reduction is defined for hypersurface pairs");
    std::vector<ReductionStep> steps;
    HPair cur = p;
    while (static_cast<int>(steps.size()) <= p.dim()) {
        Subspace w = intersect(cur.u(), cur.algebra().socle());
        if (w.is_zero()) break;
        auto q = cur.algebra().quotient(w);
        Subspace u2 = cur.algebra().project_subspace(q.projection, cur.u());
        steps.push_back(ReductionStep{w, q.projection});
        cur = HPair::validate(std::move(q.algebra), std::move(u2), PairMode::Hypersurface);
    }
    // W = 0 with codimension-1 U forces dim Soc = 1 and m = U + Soc.
    if (!cur.is_nondegenerate())
        throw Error("InternalError", "reduction terminated at a degenerate pair");
    return ReductionTrace{std::move(steps), std::move(cur)};
}

}  // namespace addact
