#pragma once

#include "qfla/drinfeld_double.hpp"
#include "qfla/quasi_frobenius.hpp"
#include "qfla/representation.hpp"

namespace qfla {

struct GqfReport {
    bool module_law = false;
    bool derivation = false;
    bool invariance = false;
    /// Acting-basis pair of the first module-law failure, if any.
    std::optional<std::pair<Eigen::Index, Eigen::Index>> module_failure;
    /// Acting-basis index of the first derivation failure, if any.
    std::optional<Eigen::Index> derivation_failure;
    /// (acting index, module pair) of the first invariance failure, if any.
    std::optional<std::array<Eigen::Index, 3>> invariance_failure;

    bool ok() const { return module_law && derivation && invariance; }
};

/// Quasi-Frobenius Lie algebra (q, beta) with an action of g by derivations
/// that leaves beta invariant.
struct EquivariantQF {
    LieAlgebra acting;
    QuasiFrobenius target;
    Representation action;
    GqfReport report;
};

/// Checks the module law, the derivation property of every rho_{e_i}, and
/// beta(rho_x u, v) + beta(u, rho_x v) = 0 on all basis tuples.
EquivariantQF validate_gqf(const LieAlgebra& g, const QuasiFrobenius& q_beta,
                           const Representation& rho);

/// Matrix-level restatement of the invariance condition: with G skew,
/// beta(rho u, v) + beta(u, rho v) = 0 iff G * rho is symmetric.
bool invariance_matrix_oracle(const MatrixQ& gram, const MatrixQ& rho);

struct EquivariantMorphismReport {
    bool qf_hom = false;
    bool equivariant = false;
};

/// psi: src -> dst; qf_hom via check_qf_morphism, equivariance as
/// psi rho_{e_i} = mu_{e_i} psi over the (shared) acting basis.
EquivariantMorphismReport check_equivariant_morphism(const MatrixQ& psi,
                                                     const EquivariantQF& src,
                                                     const EquivariantQF& dst);

/// Induced action of g* from an r-matrix satisfying the CYBE:
/// psi_xi = sum_i xi(a_i) phi_{b_i} over the basis expansion of r.
/// Throws PreconditionError naming the first nonzero entry of [[r,r]] when
/// the CYBE fails.
Representation induce_dual_action(const EquivariantQF& e, const RMatrix& r);

struct MixedCompatibilityReport {
    bool ok = true;
    std::optional<std::pair<Eigen::Index, Eigen::Index>> first_failure;
};

/// psi_{ad*_x xi} - phi_{ad*_xi x} = [phi_x, psi_xi] over all basis pairs
/// (e_i, e_j*), with both coadjoint actions taken from the bialgebra.
MixedCompatibilityReport check_mixed_compatibility(const Representation& phi,
                                                   const Representation& psi,
                                                   const LieBialgebra& b);

/// Builds D(g) from (g, delta r) and extends phi by the induced dual action;
/// the result carries the full Def-style report over the double.
EquivariantQF assemble_double_action(const EquivariantQF& e, const RMatrix& r);

} // namespace qfla
