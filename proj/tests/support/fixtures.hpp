#pragma once

#include <string>
#include <vector>

#include "qfla/equivariant.hpp"
#include "qfla/lie_bialgebra.hpp"
#include "qfla/quasi_frobenius.hpp"

// Shared concrete algebras used across the test suites.

namespace qfla::testing {

inline VectorQ combo(Eigen::Index n, std::initializer_list<std::pair<Eigen::Index, Rational>> terms) {
    VectorQ v = VectorQ::Zero(n);
    for (const auto& [i, c] : terms) v(i) += c;
    return v;
}

/// 4-dim Frobenius algebra: [x1,x2] = x2/2 + x3, [x1,x3] = x3/2,
/// [x1,x4] = x4, [x2,x3] = x4.
inline LieAlgebra frobenius_4d() {
    LieAlgebra g = abelian_algebra("g4f", 4);
    g.basis = {"x1", "x2", "x3", "x4"};
    set_bracket(g, 0, 1, combo(4, {{1, Rational(1, 2)}, {2, Rational(1)}}));
    set_bracket(g, 0, 2, combo(4, {{2, Rational(1, 2)}}));
    set_bracket(g, 0, 3, combo(4, {{3, Rational(1)}}));
    set_bracket(g, 1, 2, combo(4, {{3, Rational(1)}}));
    return g;
}

/// 4-dim nilpotent algebra: [x1,x2] = x3, [x1,x3] = x4.  Quasi-Frobenius but
/// not Frobenius.
inline LieAlgebra nilpotent_4d() {
    LieAlgebra g = abelian_algebra("g4n", 4);
    g.basis = {"x1", "x2", "x3", "x4"};
    set_bracket(g, 0, 1, combo(4, {{2, Rational(1)}}));
    set_bracket(g, 0, 2, combo(4, {{3, Rational(1)}}));
    return g;
}

/// The nondegenerate 2-cocycle x1* ^ x4* + x2* ^ x3* on nilpotent_4d.
inline SkewForm nilpotent_4d_form() {
    MatrixQ gram = MatrixQ::Zero(4, 4);
    gram(0, 3) = Rational(1);
    gram(3, 0) = Rational(-1);
    gram(1, 2) = Rational(1);
    gram(2, 1) = Rational(-1);
    return SkewForm{nilpotent_4d(), gram};
}

/// 2-dim nonabelian algebra [x, y] = x.
inline LieAlgebra nonabelian_2d() {
    LieAlgebra g = abelian_algebra("g2", 2);
    g.basis = {"x", "y"};
    set_bracket(g, 0, 1, combo(2, {{0, Rational(1)}}));
    return g;
}

/// Triangular r-matrix y ^ x = y (x) x - x (x) y on nonabelian_2d.
inline RMatrix triangular_r_2d() {
    RMatrix r{nonabelian_2d(), MatrixQ::Zero(2, 2)};
    r.coeffs(1, 0) = Rational(1);
    r.coeffs(0, 1) = Rational(-1);
    return r;
}

/// The cobracket gamma(x) = 0, gamma(y) = x ^ y on nonabelian_2d.
inline Cobracket cobracket_2d() {
    Cobracket gamma = zero_cobracket(nonabelian_2d());
    add_wedge(gamma, 1, 0, 1, Rational(1));
    return gamma;
}

/// 4-dim graded algebra: [e1,e2] = e2, [e1,e3] = e3, [e1,e4] = 2 e4,
/// [e2,e3] = e4.  Frobenius with alpha = e4*.
inline LieAlgebra graded_4d() {
    LieAlgebra q = abelian_algebra("q4", 4);
    set_bracket(q, 0, 1, combo(4, {{1, Rational(1)}}));
    set_bracket(q, 0, 2, combo(4, {{2, Rational(1)}}));
    set_bracket(q, 0, 3, combo(4, {{3, Rational(2)}}));
    set_bracket(q, 1, 2, combo(4, {{3, Rational(1)}}));
    return q;
}

/// The coboundary form of alpha = e4* on graded_4d:
/// rows (0,0,0,2), (0,0,1,0), (0,-1,0,0), (-2,0,0,0).
inline SkewForm graded_4d_form() {
    MatrixQ gram = MatrixQ::Zero(4, 4);
    gram(0, 3) = Rational(2);
    gram(3, 0) = Rational(-2);
    gram(1, 2) = Rational(1);
    gram(2, 1) = Rational(-1);
    return SkewForm{graded_4d(), gram};
}

/// 3-dim acting algebra with [x2, x3] = 2 x3.
inline LieAlgebra acting_3d() {
    LieAlgebra g = abelian_algebra("g3", 3);
    g.basis = {"x1", "x2", "x3"};
    set_bracket(g, 1, 2, combo(3, {{2, Rational(2)}}));
    return g;
}

/// The action of acting_3d on graded_4d by derivations preserving the form:
/// x1: e1 -> e4, x2: e2 -> e2, e3 -> -e3, x3: e3 -> e2.
inline Representation acting_3d_rep() {
    Representation rho;
    rho.algebra = acting_3d();
    rho.module_dim = 4;
    MatrixQ m1 = MatrixQ::Zero(4, 4);
    m1(3, 0) = Rational(1);
    MatrixQ m2 = MatrixQ::Zero(4, 4);
    m2(1, 1) = Rational(1);
    m2(2, 2) = Rational(-1);
    MatrixQ m3 = MatrixQ::Zero(4, 4);
    m3(1, 2) = Rational(1);
    rho.matrices = {m1, m2, m3};
    return rho;
}

/// The action of nonabelian_2d on graded_4d:
/// phi_x: e3 -> e2; phi_y: e2 -> -e2/2, e3 -> e3/2.
inline Representation equivariant_2d_rep() {
    Representation phi;
    phi.algebra = nonabelian_2d();
    phi.module_dim = 4;
    MatrixQ mx = MatrixQ::Zero(4, 4);
    mx(1, 2) = Rational(1);
    MatrixQ my = MatrixQ::Zero(4, 4);
    my(1, 1) = Rational(-1, 2);
    my(2, 2) = Rational(1, 2);
    phi.matrices = {mx, my};
    return phi;
}

/// Affine matrix algebra a(n): basis E_ij for 1 <= i <= n, 1 <= j <= n+1,
/// with [E_ij, E_kl] = delta_jk E_il - delta_li E_kj.
inline LieAlgebra affine_matrix_algebra(int n) {
    const Eigen::Index dim = static_cast<Eigen::Index>(n) * (n + 1);
    LieAlgebra g;
    g.name = "a" + std::to_string(n);
    std::vector<std::pair<int, int>> index_of;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n + 1; ++j) {
            g.basis.push_back("E" + std::to_string(i) + std::to_string(j));
            index_of.emplace_back(i, j);
        }
    g.c = Tensor3Q::Zero(dim, dim, dim);
    auto position = [&](int i, int j) -> Eigen::Index {
        return static_cast<Eigen::Index>((i - 1) * (n + 1) + (j - 1));
    };
    for (Eigen::Index a = 0; a < dim; ++a) {
        const auto [i, j] = index_of[static_cast<std::size_t>(a)];
        for (Eigen::Index b = a + 1; b < dim; ++b) {
            const auto [k, l] = index_of[static_cast<std::size_t>(b)];
            VectorQ value = VectorQ::Zero(dim);
            if (j == k && i <= n) value(position(i, l)) += Rational(1);
            if (l == i && k <= n) value(position(k, j)) -= Rational(1);
            set_bracket(g, a, b, value);
        }
    }
    return g;
}

/// alpha = E_12* + E_23* + ... + E_{n,n+1}* as a coordinate vector.
inline VectorQ affine_alpha(int n) {
    const Eigen::Index dim = static_cast<Eigen::Index>(n) * (n + 1);
    VectorQ alpha = VectorQ::Zero(dim);
    for (int i = 1; i <= n; ++i)
        alpha(static_cast<Eigen::Index>((i - 1) * (n + 1) + i)) = Rational(1);
    return alpha;
}

/// beta(E_ij, E_kl) = delta_jk delta_{l,i+1} - delta_li delta_{j,k+1},
/// written down entry-wise (the independent formula, not the coboundary).
inline MatrixQ affine_form_gram(int n) {
    const Eigen::Index dim = static_cast<Eigen::Index>(n) * (n + 1);
    MatrixQ gram = MatrixQ::Zero(dim, dim);
    std::vector<std::pair<int, int>> index_of;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n + 1; ++j) index_of.emplace_back(i, j);
    for (Eigen::Index a = 0; a < dim; ++a) {
        const auto [i, j] = index_of[static_cast<std::size_t>(a)];
        for (Eigen::Index b = 0; b < dim; ++b) {
            const auto [k, l] = index_of[static_cast<std::size_t>(b)];
            Rational value(0);
            if (j == k && l == i + 1) value += Rational(1);
            if (l == i && j == k + 1) value -= Rational(1);
            gram(a, b) = value;
        }
    }
    return gram;
}

} // namespace qfla::testing
