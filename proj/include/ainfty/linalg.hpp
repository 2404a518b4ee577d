#pragma once

// Exact dense linear algebra over a field scalar: reduced row echelon form,
// rank, kernel bases, linear solves.  Everything is deterministic; kernel
// basis vectors are normalized so the first nonzero coordinate is 1.

#include <optional>
#include <vector>

#include "field.hpp"

namespace ainfty {

// In-place reduced row echelon form.  Returns pivot columns in order.
template <class K>
std::vector<int> rref(Mat<K>& A) {
    std::vector<int> pivots;
    Eigen::Index rows = A.rows(), cols = A.cols(), r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index pr = -1;
        for (Eigen::Index i = r; i < rows; ++i)
            if (!A(i, c).is_zero()) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != r) A.row(pr).swap(A.row(r));
        K inv = A(r, c).inv();
        for (Eigen::Index j = c; j < cols; ++j) A(r, j) = A(r, j) * inv;
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == r || A(i, c).is_zero()) continue;
            K f = A(i, c);
            for (Eigen::Index j = c; j < cols; ++j) A(i, j) -= f * A(r, j);
        }
        pivots.push_back(int(c));
        ++r;
    }
    return pivots;
}

template <class K>
int rank(Mat<K> A) { return int(rref(A).size()); }

// Columns form a basis of ker(A); each normalized to leading coefficient 1.
template <class K>
Mat<K> kernel_basis(Mat<K> A) {
    Eigen::Index n = A.cols();
    std::vector<int> piv = rref(A);
    std::vector<bool> is_piv(n, false);
    for (int c : piv) is_piv[c] = true;
    Mat<K> B(n, n - Eigen::Index(piv.size()));
    Eigen::Index k = 0;
    for (Eigen::Index c = 0; c < n; ++c) {
        if (is_piv[c]) continue;
        Vec<K> v = Vec<K>::Zero(n);
        v[c] = K(1);
        for (std::size_t i = 0; i < piv.size(); ++i)
            v[piv[i]] = -A(Eigen::Index(i), c);
        // leading coefficient 1
        for (Eigen::Index i = 0; i < n; ++i) {
            if (v[i].is_zero()) continue;
            if (!(v[i] == K(1))) {
                K inv = v[i].inv();
                for (Eigen::Index j = i; j < n; ++j) v[j] = v[j] * inv;
            }
            break;
        }
        B.col(k++) = v;
    }
    return B;
}

// One solution of A x = b, if any.
template <class K>
std::optional<Vec<K>> solve(const Mat<K>& A, const Vec<K>& b) {
    Eigen::Index rows = A.rows(), cols = A.cols();
    Mat<K> aug(rows, cols + 1);
    aug.leftCols(cols) = A;
    aug.col(cols) = b;
    std::vector<int> piv = rref(aug);
    if (!piv.empty() && piv.back() == int(cols)) return std::nullopt;
    Vec<K> x = Vec<K>::Zero(cols);
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug(Eigen::Index(i), cols);
    return x;
}

// Inverse of a square invertible matrix.
template <class K>
std::optional<Mat<K>> inverse(const Mat<K>& A) {
    Eigen::Index n = A.rows();
    if (A.cols() != n) return std::nullopt;
    Mat<K> aug(n, 2 * n);
    aug.leftCols(n) = A;
    aug.rightCols(n) = Mat<K>::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) aug(i, n + i) = K(1);
    std::vector<int> piv = rref(aug);
    if (Eigen::Index(piv.size()) != n) return std::nullopt;
    return Mat<K>(aug.rightCols(n));
}

// Is the linear map given by A a bijection between spaces of the stated dims?
template <class K>
bool is_bijective(const Mat<K>& A) {
    return A.rows() == A.cols() && rank<K>(A) == int(A.rows());
}

// Column span membership: is b in the span of the columns of A?
template <class K>
bool in_span(const Mat<K>& A, const Vec<K>& b) {
    return solve<K>(A, b).has_value();
}

} // namespace ainfty
