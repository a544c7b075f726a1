#pragma once

#include <optional>
#include <vector>

#include "addact/scalar.hpp"

namespace addact {

// Dense row-major matrix over Q(i). Desk-scale dimensions only.
using Mat = std::vector<Vec>;

// Unique reduced row echelon form; zero rows are dropped, so the result's
// row count equals the rank.
Mat rref(Mat m);

int rank(const Mat& m);

// Basis (as rows) of { x | m * x = 0 }, x a column vector of size cols.
Mat kernel(const Mat& m, int cols);

// True iff v lies in the row space of the RREF matrix r.
bool in_row_space(const Mat& r, const Vec& v);

// Coordinates of v in terms of the rows of the RREF matrix r.
// Throws if v is not in the row space.
Vec row_space_coords(const Mat& r, const Vec& v);

// Coefficients c with sum c_i * rows_i = v, for linearly independent rows;
// empty optional if v is outside the span.
std::optional<Vec> solve_combination(const Mat& rows, const Vec& v);

Vec zero_vec(int n);
Vec unit_vec(int n, int k);
bool is_zero_vec(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& v, const Scalar& c);

}  // namespace addact
