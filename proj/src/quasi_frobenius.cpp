#include "qfla/quasi_frobenius.hpp"

#include <random>

#include "qfla/errors.hpp"

namespace qfla {

SkewForm make_skew_form(LieAlgebra algebra, MatrixQ gram) {
    const Eigen::Index n = algebra.dim();
    if (gram.rows() != n || gram.cols() != n) {
        throw DimensionError("make_skew_form: gram must be " + std::to_string(n) + "x" +
                             std::to_string(n) + ", got " + std::to_string(gram.rows()) + "x" +
                             std::to_string(gram.cols()));
    }
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            if (gram(i, j) != -gram(j, i))
                throw PreconditionError("make_skew_form: gram is not skew-symmetric at (" +
                                        std::to_string(i) + ", " + std::to_string(j) + ")");
    return SkewForm{std::move(algebra), std::move(gram)};
}

CocycleReport is_two_cocycle(const SkewForm& beta) {
    const Eigen::Index n = beta.algebra.dim();
    if (beta.gram.rows() != n || beta.gram.cols() != n) {
        throw DimensionError("is_two_cocycle: gram does not match algebra dimension " +
                             std::to_string(n));
    }
    CocycleReport report;
    const Tensor3Q& c = beta.algebra.c;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            for (Eigen::Index k = j + 1; k < n; ++k) {
                Rational sum(0);
                for (Eigen::Index m = 0; m < n; ++m) {
                    sum += c(i, j, m) * beta.gram(m, k);
                    sum += c(j, k, m) * beta.gram(m, i);
                    sum += c(k, i, m) * beta.gram(m, j);
                }
                if (!sum.is_zero()) {
                    report.ok = false;
                    report.first_failure = {i, j, k};
                    return report;
                }
            }
        }
    }
    return report;
}

bool is_nondegenerate(const SkewForm& beta) {
    if (beta.gram.rows() % 2 != 0) return false;
    return !rational_det_rank(beta.gram).det.is_zero();
}

SkewForm coboundary_form(const LieAlgebra& q, const VectorQ& alpha) {
    const Eigen::Index n = q.dim();
    if (alpha.size() != n) {
        throw DimensionError("coboundary_form: alpha must have length " + std::to_string(n));
    }
    MatrixQ gram = MatrixQ::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            for (Eigen::Index k = 0; k < n; ++k) gram(i, j) += q.c(i, j, k) * alpha(k);
    return SkewForm{q, std::move(gram)};
}

QuasiFrobenius quasi_frobenius_structure(SkewForm beta) {
    QuasiFrobenius qf;
    qf.cocycle = is_two_cocycle(beta).ok;
    qf.nondegenerate = is_nondegenerate(beta);
    qf.form = std::move(beta);
    return qf;
}

void attach_frobenius_witness(QuasiFrobenius& qf) {
    qf.frobenius_witness = exactness_witness(qf.form);
}

std::optional<VectorQ> exactness_witness(const SkewForm& beta) {
    const CocycleReport cocycle = is_two_cocycle(beta);
    if (!cocycle.ok) {
        const auto& f = *cocycle.first_failure;
        throw PreconditionError("exactness_witness: form is not a 2-cocycle, first failure at (" +
                                std::to_string(f[0] + 1) + ", " + std::to_string(f[1] + 1) +
                                ", " + std::to_string(f[2] + 1) + ")");
    }
    const Eigen::Index n = beta.algebra.dim();
    const Eigen::Index pairs = n * (n - 1) / 2;
    MatrixQ a = MatrixQ::Zero(pairs, n);
    VectorQ b = VectorQ::Zero(pairs);
    Eigen::Index row = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j, ++row) {
            for (Eigen::Index k = 0; k < n; ++k) a(row, k) = beta.algebra.c(i, j, k);
            b(row) = beta.gram(i, j);
        }
    }
    return solve_linear(a, b);
}

MultiPoly frobenius_test_symbolic(const LieAlgebra& q, Eigen::Index max_dim) {
    const Eigen::Index n = q.dim();
    if (n > max_dim) {
        throw GuardError("frobenius_test_symbolic: dimension " + std::to_string(n) +
                         " exceeds guard " + std::to_string(max_dim));
    }
    PolyMatrix m(n, n, static_cast<int>(n));
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            for (Eigen::Index k = 0; k < n; ++k)
                if (!q.c(i, j, k).is_zero())
                    m.at(i, j) += q.c(i, j, k) * MultiPoly::variable(static_cast<int>(n),
                                                                     static_cast<int>(k));
    return poly_det(m);
}

std::optional<VectorQ> frobenius_functional_search(const LieAlgebra& q, std::uint64_t seed,
                                                   int max_rounds, Eigen::Index max_dim) {
    if (frobenius_test_symbolic(q, max_dim).is_zero()) return std::nullopt;
    const Eigen::Index n = q.dim();
    // Raw engine output with explicit reduction keeps the sampled points
    // identical across platforms.
    std::mt19937_64 rng(seed);
    std::uint64_t box = 1;
    for (int round = 0; round < max_rounds; ++round, box *= 2) {
        const std::uint64_t width = 2 * box + 1;
        for (int attempt = 0; attempt < 16; ++attempt) {
            VectorQ alpha(n);
            for (Eigen::Index i = 0; i < n; ++i) {
                const std::int64_t value =
                    static_cast<std::int64_t>(rng() % width) - static_cast<std::int64_t>(box);
                alpha(i) = Rational(value);
            }
            if (is_nondegenerate(coboundary_form(q, alpha))) return alpha;
        }
    }
    return std::nullopt;
}

MorphismReport check_qf_morphism(const MatrixQ& phi, const QuasiFrobenius& src,
                                 const QuasiFrobenius& dst) {
    const Eigen::Index n1 = src.form.algebra.dim();
    const Eigen::Index n2 = dst.form.algebra.dim();
    if (phi.cols() != n1 || phi.rows() != n2) {
        throw DimensionError("check_qf_morphism: map must be " + std::to_string(n2) + "x" +
                             std::to_string(n1) + ", got " + std::to_string(phi.rows()) + "x" +
                             std::to_string(phi.cols()));
    }
    MorphismReport report;
    report.lie_hom = true;
    for (Eigen::Index i = 0; i < n1 && report.lie_hom; ++i) {
        for (Eigen::Index j = i + 1; j < n1; ++j) {
            VectorQ lhs = VectorQ::Zero(n2);
            for (Eigen::Index k = 0; k < n1; ++k) {
                if (!src.form.algebra.c(i, j, k).is_zero())
                    lhs += phi.col(k) * src.form.algebra.c(i, j, k);
            }
            const VectorQ rhs =
                bracket(dst.form.algebra, VectorQ(phi.col(i)), VectorQ(phi.col(j)));
            if (lhs != rhs) {
                report.lie_hom = false;
                break;
            }
        }
    }
    report.pullback = (MatrixQ(phi.transpose() * dst.form.gram * phi) == src.form.gram);
    report.iso = report.lie_hom && report.pullback && n1 == n2 && rank_of(phi) == n1;
    return report;
}

} // namespace qfla
