#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "addact/opcheck.hpp"

namespace addact {

// Truncated polynomial algebra C[x]/(x^n), basis 1, x, ..., x^{n-1}. n >= 2.
LocalAlgebra chain_algebra(int n);

// Full projective space P^n with the square-zero algebra of dimension n+1.
HPair pn_square_zero(int n);

// Basis (1, x1, ..., xn, q) with xi*xj = 0 for i != j, xi^2 = q, and
// U = span(x1, ..., xn): the nondegenerate quadric of dimension n.
HPair quadric_pair(int n);

// chain(4) with U = span(x, x^2): the nondegenerate cubic surface pair.
HPair cubic_pair();

// chain(4) with U = span(x, x^3): degenerate, not a socle extension.
HPair counterexample_pair();

// Adjoins r square-zero annihilator directions y1..yr to both the algebra
// and U; the yi come after the base basis.
HPair socle_extension(const HPair& base, int r);

// Structured model name, e.g. "chain(4)", "cubic_pair",
// "socle_extension(quadric_pair(2),1)".
struct ModelId {
    std::string name;
    std::vector<int> params;
    std::shared_ptr<ModelId> base;  // socle_extension only

    static ModelId parse(const std::string& text);
    std::string str() const;
};

// chain ids build only an algebra; every other id builds a pair.
struct BuiltModel {
    std::optional<HPair> pair;
    std::optional<LocalAlgebra> algebra;
};

BuiltModel build(const ModelId& id);

// One line per family: name, parameter range, description.
std::vector<std::string> family_list();

// Frozen expectations for the regression catalog; empty equation marks a
// projective-space pair.
struct CatalogEntry {
    ModelId id;
    int degree;            // -1 for projective-space pairs
    std::string equation;  // canonical string over z0..z_{dim-1}
    Outcome expected;
    Certificate::Kind expected_kind;
};

std::vector<CatalogEntry> catalog();

}  // namespace addact
