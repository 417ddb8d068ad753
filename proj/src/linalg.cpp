#include "hopfinv/linalg.hpp"

#include <stdexcept>

namespace hopfinv {

CMat kron(const CMat& a, const CMat& b) {
    CMat r = cmat_zero(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (Eigen::Index k = 0; k < b.rows(); ++k)
                for (Eigen::Index l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return r;
}

std::vector<Eigen::Index> row_reduce(CMat& m) {
    std::vector<Eigen::Index> pivots;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Eigen::Index p = -1;
        for (Eigen::Index r = row; r < m.rows(); ++r)
            if (!m(r, col).is_zero()) {
                p = r;
                break;
            }
        if (p < 0) continue;
        if (p != row) m.row(p).swap(m.row(row));
        Cyc inv = m(row, col).inverse();
        for (Eigen::Index c = col; c < m.cols(); ++c) m(row, c) *= inv;
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            Cyc f = m(r, col);
            for (Eigen::Index c = col; c < m.cols(); ++c)
                m(r, c) -= f * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

CMat nullspace(const CMat& m) {
    CMat r = m;
    std::vector<Eigen::Index> pivots = row_reduce(r);
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
    for (Eigen::Index p : pivots) is_pivot[static_cast<size_t>(p)] = true;
    Eigen::Index free_count = m.cols() - static_cast<Eigen::Index>(pivots.size());
    CMat basis = cmat_zero(m.cols(), free_count);
    Eigen::Index k = 0;
    for (Eigen::Index col = 0; col < m.cols(); ++col) {
        if (is_pivot[static_cast<size_t>(col)]) continue;
        basis(col, k) = Cyc(1);
        for (size_t pi = 0; pi < pivots.size(); ++pi)
            basis(pivots[pi], k) = -r(static_cast<Eigen::Index>(pi), col);
        ++k;
    }
    return basis;
}

CMat cmat_inverse(const CMat& m) {
    if (m.rows() != m.cols()) throw std::domain_error("cmat_inverse: not square");
    Eigen::Index n = m.rows();
    CMat aug = cmat_zero(n, 2 * n);
    aug.block(0, 0, n, n) = m;
    aug.block(0, n, n, n) = cmat_identity(n);
    std::vector<Eigen::Index> pivots = row_reduce(aug);
    if (static_cast<Eigen::Index>(pivots.size()) != n ||
        pivots.back() >= n)
        throw std::domain_error("cmat_inverse: singular matrix");
    return aug.block(0, n, n, n);
}

} // namespace hopfinv
