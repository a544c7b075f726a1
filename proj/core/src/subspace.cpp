#include "addact/subspace.hpp"

#include <sstream>

#include "addact/error.hpp"

namespace addact {

Subspace::Subspace(int ambient_dim) : ambient_(ambient_dim) {
    if (ambient_dim <= 0) throw Error("DimensionMismatch", "ambient dimension must be positive");
}

Subspace::Subspace(int ambient_dim, const Mat& rows) : Subspace(ambient_dim) {
    for (const auto& r : rows)
        if (static_cast<int>(r.size()) != ambient_dim)
            throw Error("DimensionMismatch", "row length does not match ambient dimension");
    basis_ = rref(rows);
}

Subspace Subspace::full(int ambient_dim) {
    Mat rows;
    for (int i = 0; i < ambient_dim; ++i) rows.push_back(unit_vec(ambient_dim, i));
    return Subspace(ambient_dim, rows);
}

bool Subspace::contains(const Vec& v) const {
    if (static_cast<int>(v.size()) != ambient_)
        throw Error("DimensionMismatch", "vector length does not match ambient dimension");
    return in_row_space(basis_, v);
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_)
        throw Error("DimensionMismatch", "ambient dimensions differ");
    for (const auto& row : other.basis_)
        if (!contains(row)) return false;
    return true;
}

Subspace operator+(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) throw Error("DimensionMismatch", "ambient dimensions differ");
    Mat rows = a.basis_;
    rows.insert(rows.end(), b.basis_.begin(), b.basis_.end());
    return Subspace(a.ambient_, rows);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) throw Error("DimensionMismatch", "ambient dimensions differ");
    if (a.basis_.empty() || b.basis_.empty()) return Subspace(a.ambient_);
    // Solve sum(l_i a_i) + sum(u_j b_j) = 0; the a-part of each kernel
    // vector spans the intersection.
    const int na = a.dim(), nb = b.dim();
    Mat system(static_cast<size_t>(a.ambient_), zero_vec(na + nb));
    for (int i = 0; i < na; ++i)
        for (int c = 0; c < a.ambient_; ++c) system[c][i] = a.basis_[i][c];
    for (int j = 0; j < nb; ++j)
        for (int c = 0; c < a.ambient_; ++c) system[c][na + j] = b.basis_[j][c];
    Mat ker = kernel(system, na + nb);
    Mat rows;
    for (const auto& k : ker) {
        Vec v = zero_vec(a.ambient_);
        for (int i = 0; i < na; ++i)
            for (int c = 0; c < a.ambient_; ++c) v[c] += k[i] * a.basis_[i][c];
        rows.push_back(std::move(v));
    }
    return Subspace(a.ambient_, rows);
}

std::string Subspace::str() const {
    std::ostringstream os;
    os << "span{";
    for (size_t r = 0; r < basis_.size(); ++r) {
        if (r) os << ", ";
        os << "(";
        for (size_t c = 0; c < basis_[r].size(); ++c) {
            if (c) os << ",";
            os << basis_[r][c];
        }
        os << ")";
    }
    os << "}";
    return os.str();
}

}  // namespace addact
