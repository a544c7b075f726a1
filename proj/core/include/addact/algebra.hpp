#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "addact/subspace.hpp"

namespace addact {

class LocalAlgebra;
struct Quotient;

// Element of a local algebra, as coordinates in the basis e0,...,e_{dim-1}
// with e0 = 1. The algebra must outlive its elements.
class Element {
public:
    Element(const LocalAlgebra* alg, Vec coords);

    const LocalAlgebra& algebra() const { return *alg_; }
    const Vec& coords() const { return coords_; }
    const Scalar& operator[](int k) const { return coords_[static_cast<size_t>(k)]; }

    bool is_zero() const { return is_zero_vec(coords_); }
    // True iff the e0 component vanishes, i.e. the element lies in m.
    bool in_max_ideal() const { return coords_[0].is_zero(); }

    friend Element operator+(const Element& a, const Element& b);
    friend Element operator-(const Element& a, const Element& b);
    friend Element operator*(const Element& a, const Element& b);
    friend Element operator*(const Scalar& c, const Element& a);
    friend bool operator==(const Element& a, const Element& b);
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

    std::string str() const;

private:
    const LocalAlgebra* alg_;
    Vec coords_;
};

// Finite-dimensional commutative associative unital local algebra over Q(i),
// presented by structure constants for the products e_i * e_j, 1 <= i <= j.
// The identity e0 is implicit and never stored. Validated at construction:
// commutativity (by keying), associativity, closure of m under products, and
// nilpotency of m.
class LocalAlgebra {
public:
    // Raw table: product of e_i * e_j (1 <= i <= j <= dim-1) as full
    // coordinate vectors; missing entries mean the product is zero.
    using Table = std::map<std::pair<int, int>, Vec>;

    static LocalAlgebra validate(int dim, const Table& table,
                                 std::vector<std::string> basis_names = {});

    int dim() const { return dim_; }
    const std::vector<std::string>& basis_names() const { return names_; }
    const Table& table() const { return table_; }

    Element element(Vec coords) const { return Element(this, std::move(coords)); }
    Element zero() const { return element(zero_vec(dim_)); }
    Element one() const { return element(unit_vec(dim_, 0)); }
    Element basis_element(int k) const { return element(unit_vec(dim_, k)); }

    Vec mul(const Vec& a, const Vec& b) const;

    // Maximal ideal m = span(e1,...,e_{dim-1}) as a subspace of A.
    Subspace max_ideal() const;
    // Span of all k-fold products of m, as a subspace of A.
    Subspace ideal_power(int k) const;
    // Soc(A) = { a | a*m = 0 }; for a local algebra this lands inside m
    // (asserted at construction).
    Subspace socle() const;

    // exp(m) = sum m^i/i!, finite by nilpotency. Requires m in the maximal
    // ideal.
    Element exp(const Element& m) const;
    // log(1+m) = sum_{i>0} (-1)^{i+1} m^i / i. Requires u in 1 + m.
    // Inverse of exp on the maximal ideal.
    Element log(const Element& u) const;
    // Largest k with m^k != 0, for nonzero m in the maximal ideal.
    int nilpotency_exponent(const Element& m) const;
    Element power(const Element& m, int k) const;

    bool is_invertible(const Element& a) const { return !a[0].is_zero(); }

    bool is_ideal(const Subspace& w) const;

    // Quotient by an ideal W contained in m, in the basis completing W by
    // the non-pivot coordinates of its RREF.
    Quotient quotient(const Subspace& w) const;

    Vec project(const Mat& projection, const Vec& v) const;
    Subspace project_subspace(const Mat& projection, const Subspace& s) const;

    // Smallest unital subalgebra containing S (S inside m), computed by
    // iterating V <- V + V*S to stabilization.
    Subspace subalgebra_generated(const Subspace& s) const;

    friend bool operator==(const LocalAlgebra& a, const LocalAlgebra& b) {
        return a.dim_ == b.dim_ && a.table_ == b.table_;
    }

private:
    LocalAlgebra(int dim, Table table, std::vector<std::string> names)
        : dim_(dim), table_(std::move(table)), names_(std::move(names)) {}

    const Vec* product_entry(int i, int j) const;

    int dim_;
    Table table_;
    std::vector<std::string> names_;
};

struct Quotient {
    LocalAlgebra algebra;
    // (dim A/W) x (dim A) projection matrix in the chosen bases.
    Mat projection;
};

}  // namespace addact
