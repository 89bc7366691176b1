#pragma once

#include "qfla/lie_bialgebra.hpp"

namespace qfla {

/// Drinfeld double D(g) = g + g* on basis (e_1..e_n, e_1*..e_n*), with the
/// canonical symmetric pairing, the canonical r-matrix sum e_i (x) e_i*, and
/// the cobracket gamma_D = gamma_g - gamma_{g*}.
struct DoubleAlgebra {
    LieBialgebra base;
    LieAlgebra total;
    MatrixQ pairing;
    RMatrix canonical;
    Cobracket cobracket_d;
};

/// Assembles the 2n-dimensional bracket from g, g*, and the mixed coadjoint
/// formula [x, xi] = ad*_x xi - ad*_xi x, then verifies Jacobi and pairing
/// invariance.  Throws InvalidBialgebraError (with the first failure) when
/// the input does not produce a Lie algebra with an invariant pairing.
DoubleAlgebra build_double(const LieBialgebra& b);

/// <x + xi, y + eta> = xi(y) + eta(x).
Rational pairing_eval(const DoubleAlgebra& d, const VectorQ& a, const VectorQ& b);

struct PairingReport {
    bool ok = true;
    std::optional<std::array<Eigen::Index, 3>> first_failure;
};

/// <[x,y],z> = <x,[y,z]> over all 2n-basis triples.
PairingReport check_pairing_invariance(const DoubleAlgebra& d);

/// Coefficient matrix of sum e_i (x) e_i* over the double's basis.
RMatrix canonical_r(const DoubleAlgebra& d);

/// Blockwise cobracket gamma_D: gamma_g on g, minus the dual of g's bracket
/// on g*.
Cobracket double_cobracket(const DoubleAlgebra& d);

} // namespace qfla
