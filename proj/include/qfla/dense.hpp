#pragma once

#include <Eigen/Core>

#include <optional>

#include "qfla/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<qfla::Rational> {
    using Real = qfla::Rational;
    using NonInteger = qfla::Rational;
    using Literal = qfla::Rational;
    using Nested = qfla::Rational;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 40,
        MulCost = 40
    };
    static Real epsilon() { return qfla::Rational(0); }
    static Real dummy_precision() { return qfla::Rational(0); }
    static int digits10() { return 0; }
};

} // namespace Eigen

namespace qfla {

using MatrixQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VectorQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Exact determinant and rank in one elimination pass.
/// For non-square input the determinant is 0 by convention and `square`
/// is false; the rank is still meaningful.
struct DetRank {
    Rational det;
    Eigen::Index rank = 0;
    bool square = true;
};

DetRank rational_det_rank(const MatrixQ& m);

inline Eigen::Index rank_of(const MatrixQ& m) { return rational_det_rank(m).rank; }

/// One exact solution of a·x = b (free variables set to zero, pivots chosen
/// in column order), or nullopt when the system is inconsistent.
std::optional<VectorQ> solve_linear(const MatrixQ& a, const VectorQ& b);

} // namespace qfla
