#include "qfla/dense.hpp"

#include "qfla/errors.hpp"

namespace qfla {

namespace {

// Row-echelon elimination over the rationals.  Returns the echelon matrix,
// the pivot column of each pivot row, and the sign of the row permutation.
struct Echelon {
    MatrixQ m;
    std::vector<Eigen::Index> pivot_cols;
    int swap_sign = 1;
};

Echelon echelon_form(MatrixQ m) {
    Echelon result;
    const Eigen::Index rows = m.rows(), cols = m.cols();
    Eigen::Index pivot_row = 0;
    for (Eigen::Index col = 0; col < cols && pivot_row < rows; ++col) {
        Eigen::Index found = -1;
        for (Eigen::Index r = pivot_row; r < rows; ++r) {
            if (!m(r, col).is_zero()) {
                found = r;
                break;
            }
        }
        if (found < 0) continue;
        if (found != pivot_row) {
            m.row(found).swap(m.row(pivot_row));
            result.swap_sign = -result.swap_sign;
        }
        const Rational pivot = m(pivot_row, col);
        for (Eigen::Index r = pivot_row + 1; r < rows; ++r) {
            if (m(r, col).is_zero()) continue;
            const Rational factor = m(r, col) / pivot;
            for (Eigen::Index c = col; c < cols; ++c) {
                m(r, c) -= factor * m(pivot_row, c);
            }
        }
        result.pivot_cols.push_back(col);
        ++pivot_row;
    }
    result.m = std::move(m);
    return result;
}

} // namespace

DetRank rational_det_rank(const MatrixQ& m) {
    DetRank out;
    out.square = (m.rows() == m.cols());
    const Echelon e = echelon_form(m);
    out.rank = static_cast<Eigen::Index>(e.pivot_cols.size());
    if (!out.square || out.rank < m.rows()) {
        out.det = Rational(0);
        return out;
    }
    Rational det(e.swap_sign);
    for (Eigen::Index i = 0; i < m.rows(); ++i) det *= e.m(i, e.pivot_cols[i]);
    out.det = det;
    return out;
}

std::optional<VectorQ> solve_linear(const MatrixQ& a, const VectorQ& b) {
    if (a.rows() != b.size()) {
        throw DimensionError("solve_linear: matrix has " + std::to_string(a.rows()) +
                             " rows but right-hand side has " + std::to_string(b.size()) +
                             " entries");
    }
    const Eigen::Index rows = a.rows(), cols = a.cols();
    MatrixQ aug(rows, cols + 1);
    aug.leftCols(cols) = a;
    aug.col(cols) = b;
    const Echelon e = echelon_form(std::move(aug));

    // Inconsistent iff some echelon row is zero on the coefficient side but
    // nonzero on the augmented column.
    for (Eigen::Index r = 0; r < rows; ++r) {
        bool coeffs_zero = true;
        for (Eigen::Index c = 0; c < cols; ++c) {
            if (!e.m(r, c).is_zero()) {
                coeffs_zero = false;
                break;
            }
        }
        if (coeffs_zero && !e.m(r, cols).is_zero()) return std::nullopt;
    }

    VectorQ x = VectorQ::Zero(cols);
    for (Eigen::Index i = static_cast<Eigen::Index>(e.pivot_cols.size()); i-- > 0;) {
        const Eigen::Index col = e.pivot_cols[static_cast<std::size_t>(i)];
        Rational rhs = e.m(i, cols);
        for (Eigen::Index c = col + 1; c < cols; ++c) rhs -= e.m(i, c) * x(c);
        x(col) = rhs / e.m(i, col);
    }
    return x;
}

} // namespace qfla
