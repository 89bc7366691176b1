#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qfla/lie_algebra.hpp"

namespace qfla {

/// Left module structure: one d x d matrix per basis element of the acting
/// algebra, with rho_{[e_i,e_j]} = rho_i rho_j - rho_j rho_i.
struct Representation {
    LieAlgebra algebra;
    Eigen::Index module_dim = 0;
    std::vector<MatrixQ> matrices;

    /// rho_x for an arbitrary x, by linearity.
    MatrixQ matrix_of(const VectorQ& x) const;
};

Representation zero_representation(LieAlgebra g, Eigen::Index module_dim);

/// The adjoint representation of g on itself.
Representation adjoint_representation(const LieAlgebra& g);

struct RepresentationReport {
    bool ok = true;
    std::optional<std::pair<Eigen::Index, Eigen::Index>> first_failure;
};

/// Checks rho_{[e_i,e_j]} = [rho_i, rho_j] on all basis pairs.
RepresentationReport validate_representation(const Representation& rho);

/// Dual module structure rho*_x = -(rho_x)^T.
Representation dual_representation(const Representation& rho);

} // namespace qfla
