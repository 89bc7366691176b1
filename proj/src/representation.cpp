#include "qfla/representation.hpp"

#include "qfla/errors.hpp"

namespace qfla {

MatrixQ Representation::matrix_of(const VectorQ& x) const {
    if (x.size() != algebra.dim()) {
        throw DimensionError("matrix_of: expected length " + std::to_string(algebra.dim()) +
                             ", got " + std::to_string(x.size()));
    }
    MatrixQ m = MatrixQ::Zero(module_dim, module_dim);
    for (Eigen::Index i = 0; i < algebra.dim(); ++i) {
        if (!x(i).is_zero()) m += matrices[static_cast<std::size_t>(i)] * x(i);
    }
    return m;
}

Representation zero_representation(LieAlgebra g, Eigen::Index module_dim) {
    Representation rho;
    rho.module_dim = module_dim;
    rho.matrices.assign(static_cast<std::size_t>(g.dim()),
                        MatrixQ::Zero(module_dim, module_dim));
    rho.algebra = std::move(g);
    return rho;
}

Representation adjoint_representation(const LieAlgebra& g) {
    Representation rho;
    rho.algebra = g;
    rho.module_dim = g.dim();
    for (Eigen::Index i = 0; i < g.dim(); ++i)
        rho.matrices.push_back(ad_matrix(g, basis_vector(g.dim(), i)));
    return rho;
}

RepresentationReport validate_representation(const Representation& rho) {
    const Eigen::Index n = rho.algebra.dim();
    if (rho.matrices.size() != static_cast<std::size_t>(n)) {
        throw DimensionError("validate_representation: expected " + std::to_string(n) +
                             " matrices, got " + std::to_string(rho.matrices.size()));
    }
    for (const MatrixQ& m : rho.matrices) {
        if (m.rows() != rho.module_dim || m.cols() != rho.module_dim) {
            throw DimensionError("validate_representation: matrix is not " +
                                 std::to_string(rho.module_dim) + "x" +
                                 std::to_string(rho.module_dim));
        }
    }
    RepresentationReport report;
    for (Eigen::Index i = 0; i < n; ++i) {
        const MatrixQ& a = rho.matrices[static_cast<std::size_t>(i)];
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const MatrixQ& b = rho.matrices[static_cast<std::size_t>(j)];
            MatrixQ expected = MatrixQ::Zero(rho.module_dim, rho.module_dim);
            for (Eigen::Index k = 0; k < n; ++k) {
                if (!rho.algebra.c(i, j, k).is_zero())
                    expected += rho.matrices[static_cast<std::size_t>(k)] * rho.algebra.c(i, j, k);
            }
            if (MatrixQ(a * b - b * a) != expected) {
                report.ok = false;
                report.first_failure = {i, j};
                return report;
            }
        }
    }
    return report;
}

Representation dual_representation(const Representation& rho) {
    Representation dual = rho;
    for (MatrixQ& m : dual.matrices) m = MatrixQ(-m.transpose());
    return dual;
}

} // namespace qfla
