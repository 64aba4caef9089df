#pragma once

#include "rf/eigen.hpp"

#include <optional>
#include <vector>

namespace rf {

// Exact Gauss-Jordan elimination over a field scalar. Pivots are taken in
// column order and, within a column, at the first nonzero row, so the result
// is the reduced row echelon form with lexicographically first pivot columns.
template <class S>
struct RowReduction {
    Mat<S> rref;
    std::vector<Eigen::Index> pivots;
};

template <class S>
RowReduction<S> row_reduce(Mat<S> a)
{
    RowReduction<S> out;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
        Eigen::Index p = row;
        while (p < a.rows() && a(p, col) == S(0)) ++p;
        if (p == a.rows()) continue;
        if (p != row) a.row(p).swap(a.row(row));
        const S inv = S(1) / a(row, col);
        for (Eigen::Index j = col; j < a.cols(); ++j) a(row, j) = a(row, j) * inv;
        for (Eigen::Index r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, col) == S(0)) continue;
            const S f = a(r, col);
            for (Eigen::Index j = col; j < a.cols(); ++j) a(r, j) = a(r, j) - f * a(row, j);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.rref = std::move(a);
    return out;
}

template <class S>
Eigen::Index rank(const Mat<S>& a)
{
    return static_cast<Eigen::Index>(row_reduce<S>(a).pivots.size());
}

// Particular solution of a x = b with free variables set to zero, if consistent.
template <class S>
std::optional<Vec<S>> solve(const Mat<S>& a, const Vec<S>& b)
{
    Mat<S> aug(a.rows(), a.cols() + 1);
    aug.leftCols(a.cols()) = a;
    aug.col(a.cols()) = b;
    auto red = row_reduce<S>(aug);
    if (!red.pivots.empty() && red.pivots.back() == a.cols()) return std::nullopt;
    Vec<S> x = Vec<S>::Constant(a.cols(), S(0));
    for (std::size_t r = 0; r < red.pivots.size(); ++r)
        x(red.pivots[r]) = red.rref(static_cast<Eigen::Index>(r), a.cols());
    return x;
}

// Basis of the right kernel, one column per free variable.
template <class S>
Mat<S> kernel(const Mat<S>& a)
{
    auto red = row_reduce<S>(a);
    std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
    for (auto p : red.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<Eigen::Index> free_cols;
    for (Eigen::Index c = 0; c < a.cols(); ++c)
        if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);
    Mat<S> k = Mat<S>::Constant(a.cols(), static_cast<Eigen::Index>(free_cols.size()), S(0));
    for (std::size_t f = 0; f < free_cols.size(); ++f) {
        const auto fc = free_cols[f];
        k(fc, static_cast<Eigen::Index>(f)) = S(1);
        for (std::size_t r = 0; r < red.pivots.size(); ++r)
            k(red.pivots[r], static_cast<Eigen::Index>(f)) = -red.rref(static_cast<Eigen::Index>(r), fc);
    }
    return k;
}

// Exact determinant by Gaussian elimination.
template <class S>
S determinant(Mat<S> a)
{
    S det(1);
    const Eigen::Index n = a.rows();
    for (Eigen::Index c = 0; c < n; ++c) {
        Eigen::Index p = c;
        while (p < n && a(p, c) == S(0)) ++p;
        if (p == n) return S(0);
        if (p != c) {
            a.row(p).swap(a.row(c));
            det = -det;
        }
        det = det * a(c, c);
        const S inv = S(1) / a(c, c);
        for (Eigen::Index r = c + 1; r < n; ++r) {
            if (a(r, c) == S(0)) continue;
            const S f = a(r, c) * inv;
            for (Eigen::Index j = c; j < n; ++j) a(r, j) = a(r, j) - f * a(c, j);
        }
    }
    return det;
}

}  // namespace rf
