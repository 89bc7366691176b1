#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qfla/dense.hpp"
#include "qfla/tensor3.hpp"

namespace qfla {

/// Finite-dimensional Lie algebra given by structure constants:
/// [e_i, e_j] = sum_k c(i,j,k) e_k.  Basis labels are cosmetic; everything
/// computes through indices.
struct LieAlgebra {
    std::string name;
    std::vector<std::string> basis;
    Tensor3Q c;

    Eigen::Index dim() const { return static_cast<Eigen::Index>(basis.size()); }
};

/// Abelian algebra with labels e1..en.
LieAlgebra abelian_algebra(std::string name, Eigen::Index n);

/// Records [e_i, e_j] = value (and its negative at (j, i)).
void set_bracket(LieAlgebra& g, Eigen::Index i, Eigen::Index j, const VectorQ& value);

struct LieValidationReport {
    bool antisymmetry = true;
    bool jacobi = true;
    /// For antisymmetry: the first (i, j, k) with c(i,j,k) != -c(j,i,k).
    /// For Jacobi: the first (i, j, k) whose cyclic bracket sum is nonzero.
    std::optional<std::array<Eigen::Index, 3>> first_failure;

    bool ok() const { return antisymmetry && jacobi; }
};

/// Checks antisymmetry and the Jacobi identity coordinate-wise.
/// Throws DimensionError unless the tensor is n x n x n.
LieValidationReport validate_lie(const Tensor3Q& c);
LieValidationReport validate_lie(const LieAlgebra& g);

/// Bilinear extension of the structure constants.
VectorQ bracket(const LieAlgebra& g, const VectorQ& u, const VectorQ& v);

/// Matrix of y -> [x, y] in the given basis.
MatrixQ ad_matrix(const LieAlgebra& g, const VectorQ& x);

/// Coadjoint action ad*_x = -(ad_x)^T on dual coordinates.
MatrixQ coadjoint_matrix(const LieAlgebra& g, const VectorQ& x);

/// True iff D[u,v] = [Du,v] + [u,Dv] on all basis pairs.
bool is_derivation(const LieAlgebra& g, const MatrixQ& d);

/// i-th basis vector as a coordinate vector.
VectorQ basis_vector(Eigen::Index n, Eigen::Index i);

/// Transports structure constants through an invertible change of basis:
/// the algebra with bracket [u, v]' = s^-1 [s u, s v].
Tensor3Q transport_constants(const Tensor3Q& c, const MatrixQ& s, const MatrixQ& s_inverse);

} // namespace qfla
