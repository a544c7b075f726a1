#pragma once

#include <string>

#include "addact/matrix.hpp"

namespace addact {

// Linear subspace of Q(i)^n in canonical form: the basis is the RREF of the
// spanning rows with zero rows dropped, so two subspaces are equal iff their
// basis matrices are identical.
class Subspace {
public:
    // The zero subspace of the given ambient dimension.
    explicit Subspace(int ambient_dim);
    // Span of the given rows (each of length ambient_dim).
    Subspace(int ambient_dim, const Mat& rows);

    static Subspace full(int ambient_dim);

    int ambient_dim() const { return ambient_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    bool is_zero() const { return basis_.empty(); }
    const Mat& basis() const { return basis_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;

    friend Subspace operator+(const Subspace& a, const Subspace& b);
    friend Subspace intersect(const Subspace& a, const Subspace& b);

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

    std::string str() const;

private:
    int ambient_;
    Mat basis_;
};

}  // namespace addact
