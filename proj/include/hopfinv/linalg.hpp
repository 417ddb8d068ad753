#pragma once

// Dense exact linear algebra over Q(z): Eigen matrices with the Cyc scalar
// and free functions for the eliminations this project needs.  Pivoting is
// on the first nonzero entry (there is no useful magnitude on an exact
// field), and reduced echelon forms are normalized so that identical
// subspaces always produce identical bases.

#include <Eigen/Core>

#include <vector>

#include "hopfinv/scalar.hpp"

namespace hopfinv {

using CMat = Eigen::Matrix<Cyc, Eigen::Dynamic, Eigen::Dynamic>;
using CVec = Eigen::Matrix<Cyc, Eigen::Dynamic, 1>;

inline CMat cmat_zero(Eigen::Index r, Eigen::Index c) {
    CMat m(r, c);
    m.setConstant(Cyc(0));
    return m;
}

inline CMat cmat_identity(Eigen::Index n) {
    CMat m = cmat_zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) m(k, k) = Cyc(1);
    return m;
}

inline bool cmat_is_zero(const CMat& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) return false;
    return true;
}

inline bool cmat_equal(const CMat& a, const CMat& b) {
    return a.rows() == b.rows() && a.cols() == b.cols() && cmat_is_zero(a - b);
}

CMat kron(const CMat& a, const CMat& b);

// In-place reduction to reduced row echelon form; returns the pivot columns.
std::vector<Eigen::Index> row_reduce(CMat& m);

inline Eigen::Index rank(CMat m) { return static_cast<Eigen::Index>(row_reduce(m).size()); }

// Columns span ker(m); basis is in reduced column echelon form.
CMat nullspace(const CMat& m);

// Inverse of a square matrix; throws std::domain_error if singular.
CMat cmat_inverse(const CMat& m);

} // namespace hopfinv
