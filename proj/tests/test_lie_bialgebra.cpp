#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qfla/errors.hpp"
#include "qfla/lie_bialgebra.hpp"

#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace qfla;
using namespace qfla::testing;

namespace {

// Elementary-tensor expansion of ad_x^(2) applied to a coefficient matrix,
// independent of the matrix identity used by ad2_apply.
MatrixQ ad2_oracle(const LieAlgebra& g, Eigen::Index x, const MatrixQ& t) {
    const Eigen::Index n = g.dim();
    MatrixQ out = MatrixQ::Zero(n, n);
    for (Eigen::Index a = 0; a < n; ++a)
        for (Eigen::Index b = 0; b < n; ++b) {
            if (t(a, b).is_zero()) continue;
            const VectorQ xa = bracket(g, basis_vector(n, x), basis_vector(n, a));
            const VectorQ xb = bracket(g, basis_vector(n, x), basis_vector(n, b));
            for (Eigen::Index p = 0; p < n; ++p) {
                out(p, b) += t(a, b) * xa(p);
                out(a, p) += t(a, b) * xb(p);
            }
        }
    return out;
}

// 1-cocycle oracle built from ad2_oracle.
bool one_cocycle_oracle(const LieAlgebra& g, const Cobracket& gamma) {
    const Eigen::Index n = g.dim();
    auto image_matrix = [&](Eigen::Index i) {
        MatrixQ f(n, n);
        for (Eigen::Index j = 0; j < n; ++j)
            for (Eigen::Index k = 0; k < n; ++k) f(j, k) = gamma.image(i, j, k);
        return f;
    };
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            MatrixQ lhs = MatrixQ::Zero(n, n);
            for (Eigen::Index m = 0; m < n; ++m)
                if (!g.c(i, j, m).is_zero()) lhs += image_matrix(m) * g.c(i, j, m);
            const MatrixQ rhs = ad2_oracle(g, i, image_matrix(j)) - ad2_oracle(g, j, image_matrix(i));
            if (lhs != rhs) return false;
        }
    return true;
}

RMatrix random_skew_r(Rng& rng, const LieAlgebra& g) {
    return RMatrix{g, rng.skew_matrix(g.dim())};
}

} // namespace

TEST_CASE("dual_bracket_from_cobracket on the named examples") {
    SUBCASE("zero cobracket gives the abelian dual") {
        const Cobracket gamma = zero_cobracket(graded_4d());
        CHECK(dual_bracket_from_cobracket(gamma).is_zero());
    }
    SUBCASE("gamma(y) = x ^ y gives [x*, y*] = y*") {
        const Tensor3Q dual = dual_bracket_from_cobracket(cobracket_2d());
        CHECK(dual(0, 1, 1) == Rational(1));
        CHECK(dual(1, 0, 1) == Rational(-1));
        CHECK(dual(0, 1, 0) == Rational(0));
        CHECK(validate_lie(dual).ok());
    }
    SUBCASE("output inherits antisymmetry from image skewness") {
        Rng rng(31);
        for (int i = 0; i < 50; ++i) {
            const LieAlgebra g = random_valid_algebra(rng);
            Cobracket gamma = zero_cobracket(g);
            for (Eigen::Index x = 0; x < g.dim(); ++x)
                for (Eigen::Index j = 0; j < g.dim(); ++j)
                    for (Eigen::Index k = j + 1; k < g.dim(); ++k)
                        add_wedge(gamma, x, j, k, rng.rational());
            const Tensor3Q dual = dual_bracket_from_cobracket(gamma);
            CHECK(validate_lie(dual).antisymmetry);
        }
    }
}

TEST_CASE("is_one_cocycle on the named examples") {
    SUBCASE("zero cobracket over any algebra") {
        Rng rng(32);
        for (int i = 0; i < 20; ++i) {
            const LieAlgebra g = random_valid_algebra(rng);
            CHECK(is_one_cocycle(g, zero_cobracket(g)).ok);
        }
    }
    SUBCASE("the coboundary cobracket of the 2-dim algebra") {
        CHECK(is_one_cocycle(nonabelian_2d(), cobracket_2d()).ok);
        CHECK(one_cocycle_oracle(nonabelian_2d(), cobracket_2d()));
    }
    SUBCASE("on the 2-dim algebra every wedge-valued cobracket is a cocycle") {
        // gamma(x) = x ^ y, gamma(y) = 0: the identity holds, fixed by the
        // elementary-tensor oracle.
        Cobracket gamma = zero_cobracket(nonabelian_2d());
        add_wedge(gamma, 0, 0, 1, Rational(1));
        CHECK(one_cocycle_oracle(nonabelian_2d(), gamma));
        CHECK(is_one_cocycle(nonabelian_2d(), gamma).ok);
    }
    SUBCASE("a genuine failure with its first pair") {
        // On the nilpotent algebra, gamma(x1) = x1 ^ x2 fails at (x1, x2):
        // the left side vanishes but ad_{x2}^(2) gamma(x1) does not cancel.
        const LieAlgebra q = nilpotent_4d();
        Cobracket gamma = zero_cobracket(q);
        add_wedge(gamma, 0, 0, 1, Rational(1));
        CHECK(!one_cocycle_oracle(q, gamma));
        const auto report = is_one_cocycle(q, gamma);
        CHECK(!report.ok);
        REQUIRE(report.first_failure.has_value());
        CHECK(*report.first_failure == std::pair<Eigen::Index, Eigen::Index>{0, 1});
    }
}

TEST_CASE("validate_bialgebra on the named examples") {
    SUBCASE("trivial cobracket is a bialgebra") {
        Rng rng(33);
        for (int i = 0; i < 20; ++i) {
            const LieAlgebra g = random_valid_algebra(rng);
            CHECK(validate_bialgebra(g, zero_cobracket(g)).valid());
        }
    }
    SUBCASE("the triangular 2-dim bialgebra") {
        CHECK(validate_bialgebra(nonabelian_2d(), cobracket_2d()).valid());
    }
    SUBCASE("the failing cobracket is flagged on the 1-cocycle side") {
        const LieAlgebra q = nilpotent_4d();
        Cobracket gamma = zero_cobracket(q);
        add_wedge(gamma, 0, 0, 1, Rational(1));
        const LieBialgebra b = validate_bialgebra(q, gamma);
        CHECK(b.co_jacobi);
        CHECK(!b.one_cocycle);
        CHECK(!b.valid());
    }
}

TEST_CASE("cobracket_from_r on the named examples") {
    SUBCASE("r = 0 gives gamma = 0") {
        const LieAlgebra g = nonabelian_2d();
        CHECK(cobracket_from_r(g, RMatrix{g, MatrixQ::Zero(2, 2)}).image.is_zero());
    }
    SUBCASE("r = y ^ x gives gamma(x) = 0, gamma(y) = x ^ y") {
        const Cobracket gamma = cobracket_from_r(nonabelian_2d(), triangular_r_2d());
        CHECK(gamma.image == cobracket_2d().image);
    }
    SUBCASE("symmetric r over the abelian algebra gives gamma = 0") {
        const LieAlgebra g = abelian_algebra("a", 1);
        MatrixQ r(1, 1);
        r << Rational(1);
        CHECK(cobracket_from_r(g, RMatrix{g, r}).image.is_zero());
    }
    SUBCASE("matches the elementary-tensor oracle on random r") {
        Rng rng(34);
        for (int i = 0; i < 60; ++i) {
            const LieAlgebra g = random_valid_algebra(rng);
            const MatrixQ r = rng.matrix(g.dim(), g.dim());
            const Cobracket gamma = cobracket_from_r(g, RMatrix{g, r});
            for (Eigen::Index x = 0; x < g.dim(); ++x) {
                const MatrixQ expected = ad2_oracle(g, x, r);
                for (Eigen::Index j = 0; j < g.dim(); ++j)
                    for (Eigen::Index k = 0; k < g.dim(); ++k)
                        CHECK(gamma.image(x, j, k) == expected(j, k));
            }
        }
    }
}

TEST_CASE("yb_bracket on the named examples") {
    SUBCASE("r = 0") {
        const LieAlgebra g = nonabelian_2d();
        CHECK(yb_bracket(g, RMatrix{g, MatrixQ::Zero(2, 2)}).is_zero());
    }
    SUBCASE("the triangular r satisfies the CYBE") {
        CHECK(yb_bracket(nonabelian_2d(), triangular_r_2d()).is_zero());
    }
    SUBCASE("a non-skew r violating the CYBE, with the offending entry") {
        // r = x (x) y on [x,y] = x: [[r,r]] = -x (x) x (x) y.
        const LieAlgebra g = nonabelian_2d();
        MatrixQ r = MatrixQ::Zero(2, 2);
        r(0, 1) = Rational(1);
        const Tensor3Q t = yb_bracket(g, RMatrix{g, r});
        CHECK(!t.is_zero());
        CHECK(t(0, 0, 1) == Rational(-1));
        REQUIRE(t.first_nonzero().has_value());
        CHECK(*t.first_nonzero() == std::array<Eigen::Index, 3>{0, 0, 1});
    }
}

TEST_CASE("classify_r on the named examples") {
    SUBCASE("r = 0 is triangular") {
        const LieAlgebra g = nonabelian_2d();
        const RClassification cls = classify_r(g, RMatrix{g, MatrixQ::Zero(2, 2)});
        CHECK(cls.verdict == RVerdict::triangular);
    }
    SUBCASE("r = y ^ x is triangular") {
        const RClassification cls = classify_r(nonabelian_2d(), triangular_r_2d());
        CHECK(cls.sym_invariant);
        CHECK(cls.cybe);
        CHECK(cls.skew);
        CHECK(cls.verdict == RVerdict::triangular);
    }
    SUBCASE("the non-CYBE r is not a coboundary structure") {
        const LieAlgebra g = nonabelian_2d();
        MatrixQ r = MatrixQ::Zero(2, 2);
        r(0, 1) = Rational(1);
        const RClassification cls = classify_r(g, RMatrix{g, r});
        CHECK(!cls.cybe);
        CHECK(cls.verdict == RVerdict::not_coboundary);
    }
}

TEST_CASE("an invariant symmetric tensor is coboundary but not quasitriangular") {
    // sl2 with [h,e] = 2e, [h,f] = -2f, [e,f] = h; the Casimir-type tensor
    // t = h (x) h + 2 e (x) f + 2 f (x) e is ad-invariant, so delta t = 0 and
    // both invariance flags hold, yet [[t,t]] is nonzero.
    LieAlgebra g = abelian_algebra("sl2", 3);
    set_bracket(g, 0, 1, combo(3, {{1, Rational(2)}}));
    set_bracket(g, 0, 2, combo(3, {{2, Rational(-2)}}));
    set_bracket(g, 1, 2, combo(3, {{0, Rational(1)}}));
    REQUIRE(validate_lie(g).ok());

    MatrixQ t = MatrixQ::Zero(3, 3);
    t(0, 0) = Rational(1);
    t(1, 2) = Rational(2);
    t(2, 1) = Rational(2);
    for (Eigen::Index i = 0; i < 3; ++i)
        CHECK(ad2_apply(g, basis_vector(3, i), t).isZero(Rational(0)));

    const RMatrix r{g, t};
    const Tensor3Q yb = yb_bracket(g, r);
    CHECK(!yb.is_zero());
    CHECK(yb(0, 1, 2) == Rational(-4));
    const RClassification cls = classify_r(g, r);
    CHECK(cls.sym_invariant);
    CHECK(cls.yb_invariant);
    CHECK(!cls.cybe);
    CHECK(!cls.skew);
    CHECK(cls.verdict == RVerdict::coboundary);
    CHECK(cobracket_from_r(g, r).image.is_zero());
}

TEST_CASE("coboundary cobrackets are 1-cocycles for arbitrary r") {
    Rng rng(35);
    for (int i = 0; i < 200; ++i) {
        const LieAlgebra g = random_valid_algebra(rng);
        const RMatrix r{g, rng.matrix(g.dim(), g.dim())};
        CHECK(is_one_cocycle(g, cobracket_from_r(g, r)).ok);
    }
}

TEST_CASE("classification at least coboundary iff the induced bialgebra is valid") {
    Rng rng(36);
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
        LieAlgebra g = random_valid_algebra(rng, false);
        if (g.dim() > 3) continue;
        ++checked;
        const RMatrix r = random_skew_r(rng, g);
        const RClassification cls = classify_r(g, r);
        const LieBialgebra b = validate_bialgebra(g, cobracket_from_r(g, r));
        CHECK((cls.verdict != RVerdict::not_coboundary) == b.valid());
    }
    CHECK(checked > 50);
}

TEST_CASE("skew CYBE solutions induce image-skew cobrackets") {
    Rng rng(37);
    for (int i = 0; i < 200; ++i) {
        const LieAlgebra g = random_valid_algebra(rng);
        const RMatrix r = random_skew_r(rng, g);
        if (!classify_r(g, r).cybe) continue;
        const Cobracket gamma = cobracket_from_r(g, r);
        for (Eigen::Index x = 0; x < g.dim(); ++x)
            for (Eigen::Index j = 0; j < g.dim(); ++j)
                for (Eigen::Index k = 0; k < g.dim(); ++k)
                    CHECK(gamma.image(x, j, k) == -gamma.image(x, k, j));
    }
}

TEST_CASE("dual_bialgebra on the named examples") {
    SUBCASE("dual of a trivial bialgebra") {
        const LieAlgebra g = nonabelian_2d();
        const LieBialgebra b = validate_bialgebra(g, zero_cobracket(g));
        const LieBialgebra dual = dual_bialgebra(b);
        CHECK(dual.valid());
        CHECK(dual.algebra.c.is_zero()); // abelian dual
        // The dual cobracket records g's bracket.
        CHECK(dual.cobracket.image(0, 0, 1) == Rational(1));
        CHECK(dual.algebra.basis == std::vector<std::string>{"xs", "ys"});
    }
    SUBCASE("dual of the triangular 2-dim bialgebra is valid") {
        const LieBialgebra b = validate_bialgebra(nonabelian_2d(), cobracket_2d());
        const LieBialgebra dual = dual_bialgebra(b);
        CHECK(dual.valid());
        // [x*, y*] = y*.
        CHECK(dual.algebra.c(0, 1, 1) == Rational(1));
        CHECK(dual.algebra.c(0, 1, 0) == Rational(0));
    }
    SUBCASE("double dual restores the structure tensors") {
        Rng rng(38);
        for (int i = 0; i < 40; ++i) {
            const LieAlgebra g = random_valid_algebra(rng);
            if (g.dim() > 3) continue;
            const RMatrix r = random_skew_r(rng, g);
            const LieBialgebra b = validate_bialgebra(g, cobracket_from_r(g, r));
            if (!b.valid()) continue;
            const LieBialgebra twice = dual_bialgebra(dual_bialgebra(b));
            CHECK(twice.algebra.c == b.algebra.c);
            CHECK(twice.cobracket.image == b.cobracket.image);
        }
        const LieBialgebra b = validate_bialgebra(nonabelian_2d(), cobracket_2d());
        const LieBialgebra twice = dual_bialgebra(dual_bialgebra(b));
        CHECK(twice.algebra.c == b.algebra.c);
        CHECK(twice.cobracket.image == b.cobracket.image);
    }
}
