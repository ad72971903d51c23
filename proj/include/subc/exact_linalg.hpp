#pragma once

#include "subc/rational.hpp"

#include <Eigen/Core>

#include <vector>

namespace Eigen {

template <>
struct NumTraits<subc::Rational> : GenericNumTraits<subc::Rational> {
    typedef subc::Rational Real;
    typedef subc::Rational NonInteger;
    typedef subc::Rational Nested;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 2,
        AddCost = 20,
        MulCost = 20
    };
    static inline Real epsilon() { return subc::Rational(0); }
    static inline Real dummy_precision() { return subc::Rational(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace subc {

using MatrixQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VectorQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

namespace detail {

// In-place fraction-full Gaussian elimination to row echelon form.
// Returns the pivot column of each echelon row.
inline std::vector<int> echelonize(MatrixQ& a) {
    std::vector<int> pivots;
    int rows = static_cast<int>(a.rows());
    int cols = static_cast<int>(a.cols());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (!a(i, c).is_zero()) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != r) a.row(pr).swap(a.row(r));
        Rational inv = Rational(1) / a(r, c);
        for (int j = c; j < cols; ++j) a(r, j) *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            Rational f = a(i, c);
            for (int j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace detail

inline int matrix_rank(MatrixQ a) {
    return static_cast<int>(detail::echelonize(a).size());
}

// Basis of the right null space, as columns.
inline MatrixQ null_space(MatrixQ a) {
    int cols = static_cast<int>(a.cols());
    std::vector<int> pivots = detail::echelonize(a);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;

    int nullity = cols - static_cast<int>(pivots.size());
    MatrixQ basis = MatrixQ::Constant(cols, nullity, Rational(0));
    int k = 0;
    for (int freec = 0; freec < cols; ++freec) {
        if (is_pivot[freec]) continue;
        basis(freec, k) = Rational(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            basis(pivots[r], k) = -a(static_cast<int>(r), freec);
        ++k;
    }
    return basis;
}

// Solves a*x = b exactly; returns false when the system is singular or
// inconsistent.
inline bool solve_linear(const MatrixQ& a, const VectorQ& b, VectorQ& x) {
    int n = static_cast<int>(a.rows());
    if (a.cols() != n || b.size() != n) return false;
    MatrixQ aug(n, n + 1);
    aug.leftCols(n) = a;
    aug.col(n) = b;
    std::vector<int> pivots = detail::echelonize(aug);
    if (static_cast<int>(pivots.size()) != n) return false;
    for (int c : pivots)
        if (c >= n) return false;
    x = aug.col(n);
    return true;
}

}  // namespace subc
