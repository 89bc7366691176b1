#include "qfla/lie_bialgebra.hpp"

#include "qfla/errors.hpp"

namespace qfla {

namespace {

void require_shapes(const LieAlgebra& g, const Cobracket& gamma) {
    const Eigen::Index n = g.dim();
    if (gamma.image.dim(0) != n || gamma.image.dim(1) != n || gamma.image.dim(2) != n) {
        throw DimensionError("cobracket tensor does not match algebra dimension " +
                             std::to_string(n));
    }
}

void require_shapes(const LieAlgebra& g, const RMatrix& r) {
    if (r.coeffs.rows() != g.dim() || r.coeffs.cols() != g.dim()) {
        throw DimensionError("r-matrix does not match algebra dimension " +
                             std::to_string(g.dim()));
    }
}

} // namespace

Cobracket zero_cobracket(LieAlgebra g) {
    const Eigen::Index n = g.dim();
    return Cobracket{std::move(g), Tensor3Q::Zero(n, n, n)};
}

void add_wedge(Cobracket& gamma, Eigen::Index i, Eigen::Index j, Eigen::Index k,
               const Rational& coeff) {
    gamma.image(i, j, k) += coeff;
    gamma.image(i, k, j) -= coeff;
}

Tensor3Q dual_bracket_from_cobracket(const Cobracket& gamma) {
    const Eigen::Index n = gamma.image.dim(0);
    Tensor3Q dual = Tensor3Q::Zero(n, n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            for (Eigen::Index k = 0; k < n; ++k) dual(j, k, i) = gamma.image(i, j, k);
    return dual;
}

LieAlgebra dual_algebra(const Cobracket& gamma) {
    LieAlgebra dual;
    dual.name = gamma.algebra.name.empty() ? "dual" : gamma.algebra.name + "_dual";
    for (const std::string& label : gamma.algebra.basis) dual.basis.push_back(label + "s");
    dual.c = dual_bracket_from_cobracket(gamma);
    return dual;
}

MatrixQ ad2_apply(const LieAlgebra& g, const VectorQ& x, const MatrixQ& t) {
    const MatrixQ a = ad_matrix(g, x);
    return MatrixQ(a * t + t * a.transpose());
}

Tensor3Q ad3_apply(const LieAlgebra& g, const VectorQ& x, const Tensor3Q& t) {
    const Eigen::Index n = g.dim();
    const MatrixQ a = ad_matrix(g, x);
    Tensor3Q out = Tensor3Q::Zero(n, n, n);
    for (Eigen::Index p = 0; p < n; ++p)
        for (Eigen::Index q = 0; q < n; ++q)
            for (Eigen::Index s = 0; s < n; ++s) {
                Rational sum(0);
                for (Eigen::Index m = 0; m < n; ++m) {
                    sum += a(p, m) * t(m, q, s);
                    sum += a(q, m) * t(p, m, s);
                    sum += a(s, m) * t(p, q, m);
                }
                out(p, q, s) = sum;
            }
    return out;
}

OneCocycleReport is_one_cocycle(const LieAlgebra& g, const Cobracket& gamma) {
    require_shapes(g, gamma);
    const Eigen::Index n = g.dim();

    std::vector<MatrixQ> images;
    for (Eigen::Index i = 0; i < n; ++i) {
        MatrixQ f(n, n);
        for (Eigen::Index j = 0; j < n; ++j)
            for (Eigen::Index k = 0; k < n; ++k) f(j, k) = gamma.image(i, j, k);
        images.push_back(std::move(f));
    }

    OneCocycleReport report;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            MatrixQ lhs = MatrixQ::Zero(n, n);
            for (Eigen::Index m = 0; m < n; ++m) {
                if (!g.c(i, j, m).is_zero())
                    lhs += images[static_cast<std::size_t>(m)] * g.c(i, j, m);
            }
            const MatrixQ rhs =
                ad2_apply(g, basis_vector(n, i), images[static_cast<std::size_t>(j)]) -
                ad2_apply(g, basis_vector(n, j), images[static_cast<std::size_t>(i)]);
            if (lhs != rhs) {
                report.ok = false;
                report.first_failure = {i, j};
                return report;
            }
        }
    }
    return report;
}

LieBialgebra validate_bialgebra(const LieAlgebra& g, const Cobracket& gamma) {
    require_shapes(g, gamma);
    LieBialgebra b;
    b.co_jacobi = validate_lie(dual_bracket_from_cobracket(gamma)).ok();
    b.one_cocycle = is_one_cocycle(g, gamma).ok;
    b.algebra = g;
    b.cobracket = gamma;
    return b;
}

Cobracket cobracket_from_r(const LieAlgebra& g, const RMatrix& r) {
    require_shapes(g, r);
    const Eigen::Index n = g.dim();
    Cobracket gamma{g, Tensor3Q::Zero(n, n, n)};
    for (Eigen::Index i = 0; i < n; ++i) {
        const MatrixQ image = ad2_apply(g, basis_vector(n, i), r.coeffs);
        for (Eigen::Index j = 0; j < n; ++j)
            for (Eigen::Index k = 0; k < n; ++k) gamma.image(i, j, k) = image(j, k);
    }
    return gamma;
}

Tensor3Q yb_bracket(const LieAlgebra& g, const RMatrix& r) {
    require_shapes(g, r);
    const Eigen::Index n = g.dim();
    Tensor3Q t = Tensor3Q::Zero(n, n, n);
    // r = sum r(a,b) e_a (x) e_b; the three displayed sums over pairs of
    // elementary terms.
    for (Eigen::Index a = 0; a < n; ++a)
        for (Eigen::Index b = 0; b < n; ++b) {
            const Rational& rab = r.coeffs(a, b);
            if (rab.is_zero()) continue;
            for (Eigen::Index c = 0; c < n; ++c)
                for (Eigen::Index d = 0; d < n; ++d) {
                    const Rational& rcd = r.coeffs(c, d);
                    if (rcd.is_zero()) continue;
                    const Rational coeff = rab * rcd;
                    for (Eigen::Index p = 0; p < n; ++p) {
                        // [r12,r13]: [e_a, e_c] (x) e_b (x) e_d
                        if (!g.c(a, c, p).is_zero()) t(p, b, d) += coeff * g.c(a, c, p);
                        // [r12,r23]: e_a (x) [e_b, e_c] (x) e_d
                        if (!g.c(b, c, p).is_zero()) t(a, p, d) += coeff * g.c(b, c, p);
                        // [r13,r23]: e_a (x) e_c (x) [e_b, e_d]
                        if (!g.c(b, d, p).is_zero()) t(a, c, p) += coeff * g.c(b, d, p);
                    }
                }
        }
    return t;
}

const char* to_string(RVerdict v) {
    switch (v) {
        case RVerdict::not_coboundary: return "not_coboundary";
        case RVerdict::coboundary: return "coboundary";
        case RVerdict::quasitriangular: return "quasitriangular";
        case RVerdict::triangular: return "triangular";
    }
    return "?";
}

RClassification classify_r(const LieAlgebra& g, const RMatrix& r) {
    require_shapes(g, r);
    const Eigen::Index n = g.dim();
    RClassification result;

    const MatrixQ sym = r.coeffs + MatrixQ(r.coeffs.transpose());
    result.sym_invariant = true;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (!ad2_apply(g, basis_vector(n, i), sym).isZero(Rational(0))) {
            result.sym_invariant = false;
            break;
        }
    }

    const Tensor3Q yb = yb_bracket(g, r);
    result.cybe = yb.is_zero();
    result.yb_invariant = true;
    if (!result.cybe) {
        for (Eigen::Index i = 0; i < n; ++i) {
            if (!ad3_apply(g, basis_vector(n, i), yb).is_zero()) {
                result.yb_invariant = false;
                break;
            }
        }
    }

    result.skew = (MatrixQ(r.coeffs.transpose()) == MatrixQ(-r.coeffs));

    if (result.sym_invariant && result.yb_invariant) {
        result.verdict = RVerdict::coboundary;
        if (result.cybe) {
            result.verdict = result.skew ? RVerdict::triangular : RVerdict::quasitriangular;
        }
    }
    return result;
}

LieBialgebra dual_bialgebra(const LieBialgebra& b) {
    if (!b.valid()) {
        throw PreconditionError("dual_bialgebra: input bialgebra is not valid");
    }
    const Eigen::Index n = b.algebra.dim();
    LieAlgebra dual = dual_algebra(b.cobracket);
    Cobracket dual_gamma{dual, Tensor3Q::Zero(n, n, n)};
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            for (Eigen::Index k = 0; k < n; ++k) dual_gamma.image(i, j, k) = b.algebra.c(j, k, i);
    return validate_bialgebra(dual, dual_gamma);
}

} // namespace qfla
