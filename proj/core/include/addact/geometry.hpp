#pragma once

#include <string>
#include <vector>

#include "addact/hpair.hpp"
#include "addact/poly.hpp"

namespace addact {

// Algebra element whose coordinates are polynomials (in action parameters,
// homogeneous coordinates, or both). Multiplication uses the structure table
// with polynomial coefficients.
using PolyElement = std::vector<MultiPoly>;

PolyElement poly_element_zero(const LocalAlgebra& a, const std::vector<std::string>& vars);
PolyElement poly_element_mul(const LocalAlgebra& a, const PolyElement& x, const PolyElement& y);
bool poly_element_is_zero(const PolyElement& x);

// exp(sum s_i * dirs_i) as a polynomial element in the given parameter
// variables (one per direction).
PolyElement symbolic_exp(const LocalAlgebra& a, const std::vector<Element>& dirs,
                         const std::vector<std::string>& param_names,
                         const std::vector<std::string>& all_vars);

// Variable name lists used throughout: z0..z_{dim-1} for homogeneous
// coordinates, s1..s_m for action parameters.
std::vector<std::string> z_vars(int dim);
std::vector<std::string> s_vars(int count);
std::vector<std::string> zs_vars(int dim, int params);

// The coordinate polynomials of the induced action, linear in the
// z-variables; setting all s_i = 0 yields the identity map.
struct ActionFormula {
    std::vector<MultiPoly> coordinate_polys;  // in z0..zn, s1..s_{m}
    std::vector<std::string> str() const;
};

// Homogeneous defining equation of the hypersurface attached to the pair:
// expand log(1 + z/z0) with symbolic z in m, apply a linear functional
// vanishing exactly on U, clear z0 denominators, canonicalize.
MultiPoly equation(const HPair& p);

// A linear functional on m (coordinates 1..dim-1) vanishing exactly on U;
// deterministic (kernel of the RREF basis).
Vec u_annihilator(const HPair& p);

bool contains_point(const MultiPoly& f, const ProjectivePoint& pt);

// True iff m^d lies in U, d the pair degree: membership in the complement
// of the open orbit.
bool complement_test(const HPair& p, const Element& m);

// exp(u) * a for u in U (or in m for projective-space pairs).
Element act(const HPair& p, const Element& u, const Element& a);

ActionFormula action_formula(const HPair& p);

// Orbit equality via the associate characterization, valid for
// non-degenerate pairs: m1 in m2*A and m2 in m1*A.
bool same_orbit(const HPair& p, const Element& m1, const Element& m2);

// dim((U*m + span(m)) / span(m)): tangent dimension of the U-orbit at [m].
int orbit_dimension(const HPair& p, const Element& m);

// span(m) + m*m-ideal: every orbit representative of [m] lies in this
// subspace (affine hull of exp(U)m, taken as a cone).
Subspace orbit_hull(const HPair& p, const Element& m);

// m * A as a subspace.
Subspace principal_ideal(const LocalAlgebra& a, const Element& m);

}  // namespace addact
