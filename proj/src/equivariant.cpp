#include "qfla/equivariant.hpp"

#include "qfla/errors.hpp"

namespace qfla {

EquivariantQF validate_gqf(const LieAlgebra& g, const QuasiFrobenius& q_beta,
                           const Representation& rho) {
    const Eigen::Index d = q_beta.form.algebra.dim();
    if (rho.module_dim != d) {
        throw DimensionError("validate_gqf: module dimension " + std::to_string(rho.module_dim) +
                             " does not match the form's algebra dimension " + std::to_string(d));
    }
    if (rho.algebra.dim() != g.dim() || rho.algebra.c != g.c) {
        throw DimensionError("validate_gqf: representation is not over the given acting algebra");
    }

    EquivariantQF e;
    const RepresentationReport module_report = validate_representation(rho);
    e.report.module_law = module_report.ok;
    e.report.module_failure = module_report.first_failure;

    e.report.derivation = true;
    for (Eigen::Index i = 0; i < g.dim(); ++i) {
        if (!is_derivation(q_beta.form.algebra, rho.matrices[static_cast<std::size_t>(i)])) {
            e.report.derivation = false;
            e.report.derivation_failure = i;
            break;
        }
    }

    e.report.invariance = true;
    const MatrixQ& gram = q_beta.form.gram;
    for (Eigen::Index x = 0; x < g.dim() && e.report.invariance; ++x) {
        const MatrixQ& m = rho.matrices[static_cast<std::size_t>(x)];
        for (Eigen::Index u = 0; u < d && e.report.invariance; ++u) {
            for (Eigen::Index v = 0; v < d; ++v) {
                Rational sum(0);
                for (Eigen::Index k = 0; k < d; ++k) {
                    sum += m(k, u) * gram(k, v); // beta(rho_x e_u, e_v)
                    sum += gram(u, k) * m(k, v); // beta(e_u, rho_x e_v)
                }
                if (!sum.is_zero()) {
                    e.report.invariance = false;
                    e.report.invariance_failure = {x, u, v};
                    break;
                }
            }
        }
    }

    e.acting = g;
    e.target = q_beta;
    e.action = rho;
    return e;
}

bool invariance_matrix_oracle(const MatrixQ& gram, const MatrixQ& rho) {
    const MatrixQ m = gram * rho;
    return MatrixQ(m.transpose()) == m;
}

EquivariantMorphismReport check_equivariant_morphism(const MatrixQ& psi, const EquivariantQF& src,
                                                     const EquivariantQF& dst) {
    if (src.acting.dim() != dst.acting.dim() || src.acting.c != dst.acting.c) {
        throw DimensionError("check_equivariant_morphism: acting algebras differ");
    }
    EquivariantMorphismReport report;
    const MorphismReport qf = check_qf_morphism(psi, src.target, dst.target);
    report.qf_hom = qf.lie_hom && qf.pullback;
    report.equivariant = true;
    for (Eigen::Index i = 0; i < src.acting.dim(); ++i) {
        const MatrixQ lhs = psi * src.action.matrices[static_cast<std::size_t>(i)];
        const MatrixQ rhs = dst.action.matrices[static_cast<std::size_t>(i)] * psi;
        if (lhs != rhs) {
            report.equivariant = false;
            break;
        }
    }
    return report;
}

Representation induce_dual_action(const EquivariantQF& e, const RMatrix& r) {
    const LieAlgebra& g = e.acting;
    const RClassification cls = classify_r(g, r);
    if (!cls.cybe) {
        const auto entry = yb_bracket(g, r).first_nonzero();
        std::string where = "?";
        if (entry) {
            // 1-based like the basis numbering in diagnostics.
            where = "(" + std::to_string((*entry)[0] + 1) + ", " +
                    std::to_string((*entry)[1] + 1) + ", " + std::to_string((*entry)[2] + 1) +
                    ")";
        }
        throw PreconditionError(
            "induce_dual_action: r does not satisfy the CYBE; [[r,r]] has nonzero entry at " +
            where);
    }

    const Eigen::Index n = g.dim();
    Representation psi;
    psi.algebra = dual_algebra(cobracket_from_r(g, r));
    psi.module_dim = e.action.module_dim;
    // psi_{e_j*} = sum_q r(j, q) phi_{e_q}: in the basis expansion
    // r = sum r(p,q) e_p (x) e_q, the functional e_j* picks out the rows p = j.
    for (Eigen::Index j = 0; j < n; ++j) {
        MatrixQ m = MatrixQ::Zero(psi.module_dim, psi.module_dim);
        for (Eigen::Index q = 0; q < n; ++q) {
            if (!r.coeffs(j, q).is_zero())
                m += e.action.matrices[static_cast<std::size_t>(q)] * r.coeffs(j, q);
        }
        psi.matrices.push_back(std::move(m));
    }
    return psi;
}

MixedCompatibilityReport check_mixed_compatibility(const Representation& phi,
                                                   const Representation& psi,
                                                   const LieBialgebra& b) {
    const Eigen::Index n = b.algebra.dim();
    if (phi.module_dim != psi.module_dim) {
        throw DimensionError("check_mixed_compatibility: modules have different dimensions");
    }
    if (phi.algebra.dim() != n || psi.algebra.dim() != n) {
        throw DimensionError("check_mixed_compatibility: representations do not match the "
                             "bialgebra dimension");
    }
    const Tensor3Q& c = b.algebra.c;
    const Tensor3Q dual = dual_bracket_from_cobracket(b.cobracket);

    MixedCompatibilityReport report;
    for (Eigen::Index i = 0; i < n; ++i) {
        const MatrixQ& phi_i = phi.matrices[static_cast<std::size_t>(i)];
        for (Eigen::Index j = 0; j < n; ++j) {
            const MatrixQ& psi_j = psi.matrices[static_cast<std::size_t>(j)];
            // ad*_{e_i} e_j* = -sum_m c(i, m, j) e_m*,
            // ad*_{e_j*} e_i = -sum_m dual(j, m, i) e_m.
            MatrixQ lhs = MatrixQ::Zero(phi.module_dim, phi.module_dim);
            for (Eigen::Index m = 0; m < n; ++m) {
                if (!c(i, m, j).is_zero())
                    lhs -= psi.matrices[static_cast<std::size_t>(m)] * c(i, m, j);
                if (!dual(j, m, i).is_zero())
                    lhs += phi.matrices[static_cast<std::size_t>(m)] * dual(j, m, i);
            }
            const MatrixQ rhs = phi_i * psi_j - psi_j * phi_i;
            if (lhs != rhs) {
                report.ok = false;
                report.first_failure = {i, j};
                return report;
            }
        }
    }
    return report;
}

EquivariantQF assemble_double_action(const EquivariantQF& e, const RMatrix& r) {
    const Representation psi = induce_dual_action(e, r);
    const LieBialgebra b = validate_bialgebra(e.acting, cobracket_from_r(e.acting, r));
    const DoubleAlgebra d = build_double(b);

    Representation rho;
    rho.algebra = d.total;
    rho.module_dim = e.action.module_dim;
    rho.matrices = e.action.matrices;
    rho.matrices.insert(rho.matrices.end(), psi.matrices.begin(), psi.matrices.end());
    return validate_gqf(d.total, e.target, rho);
}

} // namespace qfla
