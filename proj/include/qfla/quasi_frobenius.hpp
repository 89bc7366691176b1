#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "qfla/lie_algebra.hpp"
#include "qfla/multipoly.hpp"

namespace qfla {

/// Skew bilinear form on a Lie algebra, gram(i, j) = beta(e_i, e_j).
struct SkewForm {
    LieAlgebra algebra;
    MatrixQ gram;
};

/// Builds a SkewForm, checking shape and skew-symmetry.
SkewForm make_skew_form(LieAlgebra algebra, MatrixQ gram);

/// A form together with its verification state and, when the form is exact,
/// a functional alpha with beta(x, y) = alpha([x, y]).
struct QuasiFrobenius {
    SkewForm form;
    bool cocycle = false;
    bool nondegenerate = false;
    std::optional<VectorQ> frobenius_witness;
};

struct CocycleReport {
    bool ok = true;
    std::optional<std::array<Eigen::Index, 3>> first_failure;
};

/// Cyclic identity beta([x,y],z) + beta([y,z],x) + beta([z,x],y) = 0 over
/// all basis triples i < j < k.
CocycleReport is_two_cocycle(const SkewForm& beta);

/// det(gram) != 0; odd dimension short-circuits to false.
bool is_nondegenerate(const SkewForm& beta);

/// beta(x, y) := alpha([x, y]).
SkewForm coboundary_form(const LieAlgebra& q, const VectorQ& alpha);

/// Runs both checks and packages the result.
QuasiFrobenius quasi_frobenius_structure(SkewForm beta);

/// Computes and stores the exactness witness when one exists.  On return,
/// a present witness satisfies beta(x, y) = alpha([x, y]) on all basis pairs.
void attach_frobenius_witness(QuasiFrobenius& qf);

/// Solves alpha([e_i,e_j]) = beta(e_i,e_j) for alpha; nullopt when the form
/// is not exact.  Throws PreconditionError if beta fails is_two_cocycle.
std::optional<VectorQ> exactness_witness(const SkewForm& beta);

inline constexpr Eigen::Index kSymbolicDetMaxDim = 8;

/// det([e_i, e_j]) in the symmetric algebra; nonzero iff the algebra admits
/// a Frobenius functional.  Throws GuardError above max_dim.
MultiPoly frobenius_test_symbolic(const LieAlgebra& q,
                                  Eigen::Index max_dim = kSymbolicDetMaxDim);

/// Deterministic search for a Frobenius functional: samples alpha from
/// integer boxes {-N..N}^n with N doubling each round.  Returns nullopt when
/// the symbolic determinant vanishes or after max_rounds rounds.
std::optional<VectorQ> frobenius_functional_search(const LieAlgebra& q, std::uint64_t seed,
                                                   int max_rounds = 16,
                                                   Eigen::Index max_dim = kSymbolicDetMaxDim);

struct MorphismReport {
    bool lie_hom = false;
    bool pullback = false;
    bool iso = false;
};

/// phi maps src to dst (matrix is dst_dim x src_dim); `iso` additionally
/// requires equal dimensions and full rank.
MorphismReport check_qf_morphism(const MatrixQ& phi, const QuasiFrobenius& src,
                                 const QuasiFrobenius& dst);

} // namespace qfla
