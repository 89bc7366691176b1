#pragma once

#include <optional>
#include <utility>

#include "qfla/lie_algebra.hpp"

namespace qfla {

/// Cobracket gamma: g -> g (x) g, stored as image(i, j, k) with
/// gamma(e_i) = sum_{j,k} image(i,j,k) e_j (x) e_k.  For a Lie bialgebra the
/// image is skew in (j, k); cobracket_from_r may produce a non-skew tensor,
/// which classify_r then rejects.
struct Cobracket {
    LieAlgebra algebra;
    Tensor3Q image;
};

Cobracket zero_cobracket(LieAlgebra g);

/// Adds coeff * (e_j ^ e_k) = coeff * (e_j (x) e_k - e_k (x) e_j) to gamma(e_i).
void add_wedge(Cobracket& gamma, Eigen::Index i, Eigen::Index j, Eigen::Index k,
               const Rational& coeff);

struct LieBialgebra {
    LieAlgebra algebra;
    Cobracket cobracket;
    bool co_jacobi = false;
    bool one_cocycle = false;

    bool valid() const { return co_jacobi && one_cocycle; }
};

/// Element r of g (x) g, r = sum r(i,j) e_i (x) e_j.
struct RMatrix {
    LieAlgebra algebra;
    MatrixQ coeffs;
};

/// Structure constants of g*: [e_j*, e_k*] = sum_i image(i,j,k) e_i*.
Tensor3Q dual_bracket_from_cobracket(const Cobracket& gamma);

/// The dual algebra as a LieAlgebra, with labels suffixed by 's'.
LieAlgebra dual_algebra(const Cobracket& gamma);

struct OneCocycleReport {
    bool ok = true;
    std::optional<std::pair<Eigen::Index, Eigen::Index>> first_failure;
};

/// gamma([x,y]) = ad_x^(2) gamma(y) - ad_y^(2) gamma(x) on all basis pairs.
OneCocycleReport is_one_cocycle(const LieAlgebra& g, const Cobracket& gamma);

/// Runs co-Jacobi (validate_lie on the dual bracket) and the 1-cocycle check.
LieBialgebra validate_bialgebra(const LieAlgebra& g, const Cobracket& gamma);

/// Coboundary cobracket (delta r)(x) = ad_x^(2) r.
Cobracket cobracket_from_r(const LieAlgebra& g, const RMatrix& r);

/// Yang-Baxter bracket [[r,r]] = [r12,r13] + [r12,r23] + [r13,r23] in
/// g (x) g (x) g.
Tensor3Q yb_bracket(const LieAlgebra& g, const RMatrix& r);

enum class RVerdict { not_coboundary, coboundary, quasitriangular, triangular };

const char* to_string(RVerdict v);

struct RClassification {
    bool sym_invariant = false; // ad-invariance of r + sigma(r)
    bool yb_invariant = false;  // ad-invariance of [[r,r]]
    bool cybe = false;          // [[r,r]] == 0
    bool skew = false;          // sigma(r) == -r
    RVerdict verdict = RVerdict::not_coboundary;
};

RClassification classify_r(const LieAlgebra& g, const RMatrix& r);

/// Dual bialgebra: bracket of g* from gamma, cobracket of g* from g's bracket.
LieBialgebra dual_bialgebra(const LieBialgebra& b);

/// Action of ad_x on g (x) g applied to a coefficient matrix:
/// ad_x^(2)(t) = ad_x t + t ad_x^T.
MatrixQ ad2_apply(const LieAlgebra& g, const VectorQ& x, const MatrixQ& t);

/// Action of ad_x on g (x) g (x) g applied to a coefficient tensor.
Tensor3Q ad3_apply(const LieAlgebra& g, const VectorQ& x, const Tensor3Q& t);

} // namespace qfla
