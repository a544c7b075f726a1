#include "addact/matrix.hpp"

#include "addact/error.hpp"

namespace addact {

Mat rref(Mat m) {
    if (m.empty()) return m;
    const size_t cols = m[0].size();
    for (const auto& row : m)
        if (row.size() != cols) throw Error("DimensionMismatch", "ragged matrix");

    size_t pivot_row = 0;
    for (size_t col = 0; col < cols && pivot_row < m.size(); ++col) {
        size_t sel = pivot_row;
        while (sel < m.size() && m[sel][col].is_zero()) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[sel], m[pivot_row]);
        Scalar inv = m[pivot_row][col].inverse();
        for (size_t c = col; c < cols; ++c) m[pivot_row][c] *= inv;
        for (size_t r = 0; r < m.size(); ++r) {
            if (r == pivot_row || m[r][col].is_zero()) continue;
            Scalar f = m[r][col];
            for (size_t c = col; c < cols; ++c) m[r][c] -= f * m[pivot_row][c];
        }
        ++pivot_row;
    }
    m.resize(pivot_row);
    return m;
}

int rank(const Mat& m) { return static_cast<int>(rref(m).size()); }

Mat kernel(const Mat& m, int cols) {
    Mat r = rref(m);
    std::vector<int> pivot_col;
    std::vector<bool> is_pivot(cols, false);
    for (const auto& row : r) {
        for (int c = 0; c < cols; ++c) {
            if (!row[c].is_zero()) {
                pivot_col.push_back(c);
                is_pivot[c] = true;
                break;
            }
        }
    }
    Mat basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vec v = zero_vec(cols);
        v[free] = Scalar(1);
        for (size_t p = 0; p < pivot_col.size(); ++p) v[pivot_col[p]] = -r[p][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

bool in_row_space(const Mat& r, const Vec& v) {
    Vec w = v;
    for (const auto& row : r) {
        int p = -1;
        for (size_t c = 0; c < row.size(); ++c)
            if (!row[c].is_zero()) {
                p = static_cast<int>(c);
                break;
            }
        if (p < 0) continue;
        if (!w[p].is_zero()) {
            Scalar f = w[p];
            for (size_t c = 0; c < w.size(); ++c) w[c] -= f * row[c];
        }
    }
    return is_zero_vec(w);
}

Vec row_space_coords(const Mat& r, const Vec& v) {
    Vec w = v, coords(r.size(), Scalar(0));
    for (size_t i = 0; i < r.size(); ++i) {
        int p = -1;
        for (size_t c = 0; c < r[i].size(); ++c)
            if (!r[i][c].is_zero()) {
                p = static_cast<int>(c);
                break;
            }
        if (p < 0) continue;
        coords[i] = w[p];
        if (!coords[i].is_zero())
            for (size_t c = 0; c < w.size(); ++c) w[c] -= coords[i] * r[i][c];
    }
    if (!is_zero_vec(w)) throw Error("NotInSubspace", "vector outside row space");
    return coords;
}

std::optional<Vec> solve_combination(const Mat& rows, const Vec& v) {
    if (rows.empty()) return is_zero_vec(v) ? std::optional<Vec>(Vec{}) : std::nullopt;
    const size_t n = rows[0].size();
    // Columns are the rows; augment with v and reduce.
    Mat aug(n, zero_vec(static_cast<int>(rows.size()) + 1));
    for (size_t c = 0; c < n; ++c) {
        for (size_t r = 0; r < rows.size(); ++r) aug[c][r] = rows[r][c];
        aug[c][rows.size()] = v[c];
    }
    Mat r = rref(aug);
    Vec coeffs(rows.size(), Scalar(0));
    for (const auto& row : r) {
        size_t p = 0;
        while (p < row.size() && row[p].is_zero()) ++p;
        if (p == rows.size()) return std::nullopt;  // inconsistent
        if (p < rows.size()) coeffs[p] = row[rows.size()];
    }
    return coeffs;
}

Vec zero_vec(int n) { return Vec(static_cast<size_t>(n), Scalar(0)); }

Vec unit_vec(int n, int k) {
    Vec v = zero_vec(n);
    v[static_cast<size_t>(k)] = Scalar(1);
    return v;
}

bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw Error("DimensionMismatch", "vector add");
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw Error("DimensionMismatch", "vector sub");
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec scale(const Vec& v, const Scalar& c) {
    Vec r = v;
    for (auto& x : r) x *= c;
    return r;
}

}  // namespace addact
