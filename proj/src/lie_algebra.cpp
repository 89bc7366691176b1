#include "qfla/lie_algebra.hpp"

#include "qfla/errors.hpp"

namespace qfla {

namespace {

void require_cube(const Tensor3Q& c) {
    if (c.dim(0) != c.dim(1) || c.dim(0) != c.dim(2)) {
        throw DimensionError("structure constants must be n x n x n, got " +
                             std::to_string(c.dim(0)) + "x" + std::to_string(c.dim(1)) + "x" +
                             std::to_string(c.dim(2)));
    }
}

void require_length(const LieAlgebra& g, const VectorQ& v, const char* what) {
    if (v.size() != g.dim()) {
        throw DimensionError(std::string(what) + ": expected length " +
                             std::to_string(g.dim()) + ", got " + std::to_string(v.size()));
    }
}

} // namespace

LieAlgebra abelian_algebra(std::string name, Eigen::Index n) {
    LieAlgebra g;
    g.name = std::move(name);
    for (Eigen::Index i = 0; i < n; ++i) g.basis.push_back("e" + std::to_string(i + 1));
    g.c = Tensor3Q::Zero(n, n, n);
    return g;
}

void set_bracket(LieAlgebra& g, Eigen::Index i, Eigen::Index j, const VectorQ& value) {
    require_length(g, value, "set_bracket");
    for (Eigen::Index k = 0; k < g.dim(); ++k) {
        g.c(i, j, k) = value(k);
        g.c(j, i, k) = -value(k);
    }
}

LieValidationReport validate_lie(const Tensor3Q& c) {
    require_cube(c);
    const Eigen::Index n = c.dim(0);
    LieValidationReport report;

    for (Eigen::Index i = 0; i < n && report.antisymmetry; ++i)
        for (Eigen::Index j = 0; j < n && report.antisymmetry; ++j)
            for (Eigen::Index k = 0; k < n; ++k)
                if (c(i, j, k) != -c(j, i, k)) {
                    report.antisymmetry = false;
                    report.first_failure = {i, j, k};
                    break;
                }

    for (Eigen::Index i = 0; i < n && report.jacobi; ++i) {
        for (Eigen::Index j = i + 1; j < n && report.jacobi; ++j) {
            for (Eigen::Index k = j + 1; k < n && report.jacobi; ++k) {
                for (Eigen::Index l = 0; l < n; ++l) {
                    Rational sum(0);
                    for (Eigen::Index m = 0; m < n; ++m) {
                        sum += c(i, j, m) * c(m, k, l);
                        sum += c(j, k, m) * c(m, i, l);
                        sum += c(k, i, m) * c(m, j, l);
                    }
                    if (!sum.is_zero()) {
                        report.jacobi = false;
                        if (!report.first_failure) report.first_failure = {i, j, k};
                        break;
                    }
                }
            }
        }
    }
    return report;
}

LieValidationReport validate_lie(const LieAlgebra& g) { return validate_lie(g.c); }

VectorQ bracket(const LieAlgebra& g, const VectorQ& u, const VectorQ& v) {
    require_length(g, u, "bracket");
    require_length(g, v, "bracket");
    const Eigen::Index n = g.dim();
    VectorQ out = VectorQ::Zero(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        if (u(i).is_zero()) continue;
        for (Eigen::Index j = 0; j < n; ++j) {
            if (v(j).is_zero()) continue;
            const Rational uv = u(i) * v(j);
            for (Eigen::Index k = 0; k < n; ++k) out(k) += uv * g.c(i, j, k);
        }
    }
    return out;
}

MatrixQ ad_matrix(const LieAlgebra& g, const VectorQ& x) {
    require_length(g, x, "ad_matrix");
    const Eigen::Index n = g.dim();
    MatrixQ a = MatrixQ::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        if (x(i).is_zero()) continue;
        for (Eigen::Index j = 0; j < n; ++j)
            for (Eigen::Index k = 0; k < n; ++k) a(k, j) += x(i) * g.c(i, j, k);
    }
    return a;
}

MatrixQ coadjoint_matrix(const LieAlgebra& g, const VectorQ& x) {
    return MatrixQ(-ad_matrix(g, x).transpose());
}

bool is_derivation(const LieAlgebra& g, const MatrixQ& d) {
    const Eigen::Index n = g.dim();
    if (d.rows() != n || d.cols() != n) {
        throw DimensionError("is_derivation: matrix must be " + std::to_string(n) + "x" +
                             std::to_string(n));
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            VectorQ lhs = VectorQ::Zero(n);
            for (Eigen::Index k = 0; k < n; ++k)
                for (Eigen::Index l = 0; l < n; ++l) lhs(l) += g.c(i, j, k) * d(l, k);
            const VectorQ rhs =
                bracket(g, VectorQ(d.col(i)), basis_vector(n, j)) +
                bracket(g, basis_vector(n, i), VectorQ(d.col(j)));
            if (lhs != rhs) return false;
        }
    }
    return true;
}

VectorQ basis_vector(Eigen::Index n, Eigen::Index i) {
    VectorQ v = VectorQ::Zero(n);
    v(i) = Rational(1);
    return v;
}

Tensor3Q transport_constants(const Tensor3Q& c, const MatrixQ& s, const MatrixQ& s_inverse) {
    const Eigen::Index n = c.dim(0);
    Tensor3Q out = Tensor3Q::Zero(n, n, n);
    LieAlgebra scratch;
    scratch.basis.resize(static_cast<std::size_t>(n));
    scratch.c = c;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            const VectorQ w = s_inverse * bracket(scratch, VectorQ(s.col(i)), VectorQ(s.col(j)));
            for (Eigen::Index k = 0; k < n; ++k) out(i, j, k) = w(k);
        }
    }
    return out;
}

} // namespace qfla
