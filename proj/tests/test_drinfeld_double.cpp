#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qfla/drinfeld_double.hpp"
#include "qfla/errors.hpp"

#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace qfla;
using namespace qfla::testing;

namespace {

VectorQ dvec(std::initializer_list<std::pair<Eigen::Index, Rational>> terms) {
    return combo(4, terms);
}

VectorQ double_bracket(const DoubleAlgebra& d, Eigen::Index i, Eigen::Index j) {
    return bracket(d.total, basis_vector(d.total.dim(), i), basis_vector(d.total.dim(), j));
}

// Oracle for the trivial-cobracket double: the semidirect sum of g with the
// abelian coadjoint module, assembled directly from coadjoint matrices.
LieAlgebra coadjoint_semidirect(const LieAlgebra& g) {
    const Eigen::Index n = g.dim();
    LieAlgebra total = abelian_algebra(g.name + "_semidirect", 2 * n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            for (Eigen::Index k = 0; k < n; ++k) total.c(i, j, k) = g.c(i, j, k);
    for (Eigen::Index i = 0; i < n; ++i) {
        const MatrixQ coad = coadjoint_matrix(g, basis_vector(n, i));
        for (Eigen::Index b = 0; b < n; ++b)
            for (Eigen::Index m = 0; m < n; ++m) {
                total.c(i, n + b, n + m) = coad(m, b);
                total.c(n + b, i, n + m) = -coad(m, b);
            }
    }
    return total;
}

} // namespace

TEST_CASE("build_double reproduces the six relations of the 2-dim triangular case") {
    const LieBialgebra b = validate_bialgebra(nonabelian_2d(), cobracket_2d());
    const DoubleAlgebra d = build_double(b);
    REQUIRE(d.total.dim() == 4);
    CHECK(d.total.basis == std::vector<std::string>{"x", "y", "xs", "ys"});

    // Basis order (x, y, x*, y*):
    CHECK(double_bracket(d, 0, 1) == dvec({{0, Rational(1)}}));   // [x,y] = x
    CHECK(double_bracket(d, 2, 3) == dvec({{3, Rational(1)}}));   // [x*,y*] = y*
    CHECK(double_bracket(d, 0, 2) == dvec({{3, Rational(-1)}}));  // [x,x*] = -y*
    CHECK(double_bracket(d, 0, 3).isZero(Rational(0)));           // [x,y*] = 0
    CHECK(double_bracket(d, 1, 2) ==
          dvec({{2, Rational(1)}, {1, Rational(1)}}));            // [y,x*] = x* + y
    CHECK(double_bracket(d, 1, 3) == dvec({{0, Rational(-1)}}));  // [y,y*] = -x

    CHECK(validate_lie(d.total).ok());
    CHECK(check_pairing_invariance(d).ok);
}

TEST_CASE("build_double with the trivial cobracket matches the coadjoint semidirect oracle") {
    const LieAlgebra g = nonabelian_2d();
    const DoubleAlgebra d = build_double(validate_bialgebra(g, zero_cobracket(g)));
    const LieAlgebra expected = coadjoint_semidirect(g);
    CHECK(d.total.c == expected.c);
    // Written out: [x,x*] = -y*, [y,x*] = x*, the rest of the mixed and dual
    // brackets vanish.
    CHECK(double_bracket(d, 0, 2) == dvec({{3, Rational(-1)}}));
    CHECK(double_bracket(d, 1, 2) == dvec({{2, Rational(1)}}));
    CHECK(double_bracket(d, 2, 3).isZero(Rational(0)));
    CHECK(double_bracket(d, 1, 3).isZero(Rational(0)));
    CHECK(double_bracket(d, 0, 3).isZero(Rational(0)));
}

TEST_CASE("build_double of the 1-dim abelian bialgebra is 2-dim abelian") {
    const LieAlgebra g = abelian_algebra("a", 1);
    const DoubleAlgebra d = build_double(validate_bialgebra(g, zero_cobracket(g)));
    CHECK(d.total.dim() == 2);
    CHECK(d.total.c.is_zero());
}

TEST_CASE("build_double rejects invalid input with a loud diagnosis") {
    const LieAlgebra q = nilpotent_4d();
    Cobracket gamma = zero_cobracket(q);
    add_wedge(gamma, 0, 0, 1, Rational(1)); // not a 1-cocycle
    const LieBialgebra bad = validate_bialgebra(q, gamma);
    REQUIRE(!bad.valid());
    CHECK_THROWS_AS(build_double(bad), InvalidBialgebraError);
}

TEST_CASE("pairing_eval on the named examples") {
    const DoubleAlgebra d = build_double(validate_bialgebra(nonabelian_2d(), cobracket_2d()));
    SUBCASE("pure algebra arguments pair to zero") {
        CHECK(pairing_eval(d, basis_vector(4, 0), basis_vector(4, 1)) == Rational(0));
        CHECK(pairing_eval(d, basis_vector(4, 0), basis_vector(4, 0)) == Rational(0));
    }
    SUBCASE("dual pairs evaluate to one") {
        CHECK(pairing_eval(d, basis_vector(4, 0), basis_vector(4, 2)) == Rational(1));
        CHECK(pairing_eval(d, basis_vector(4, 1), basis_vector(4, 3)) == Rational(1));
    }
    SUBCASE("bilinear expansion") {
        const VectorQ u = basis_vector(4, 0) + basis_vector(4, 2);
        CHECK(pairing_eval(d, u, u) == Rational(2));
    }
    SUBCASE("length mismatch") {
        CHECK_THROWS_AS(pairing_eval(d, VectorQ::Zero(3), VectorQ::Zero(4)), DimensionError);
    }
}

TEST_CASE("check_pairing_invariance and its mutation sensitivity") {
    const DoubleAlgebra d = build_double(validate_bialgebra(nonabelian_2d(), cobracket_2d()));
    CHECK(check_pairing_invariance(d).ok);

    const LieAlgebra g = nonabelian_2d();
    const DoubleAlgebra trivial = build_double(validate_bialgebra(g, zero_cobracket(g)));
    CHECK(check_pairing_invariance(trivial).ok);

    SUBCASE("mutating one mixed constant breaks invariance") {
        DoubleAlgebra mutated = d;
        mutated.total.c(0, 2, 3) += Rational(1);
        mutated.total.c(2, 0, 3) -= Rational(1);
        const auto report = check_pairing_invariance(mutated);
        CHECK(!report.ok);
        CHECK(report.first_failure.has_value());
    }
}

TEST_CASE("canonical_r on the named examples") {
    SUBCASE("n = 1: single entry at (1, 2)") {
        const LieAlgebra g = abelian_algebra("a", 1);
        const DoubleAlgebra d = build_double(validate_bialgebra(g, zero_cobracket(g)));
        const RMatrix r = canonical_r(d);
        CHECK(r.coeffs(0, 1) == Rational(1));
        Eigen::Index nonzero = 0;
        for (Eigen::Index i = 0; i < 2; ++i)
            for (Eigen::Index j = 0; j < 2; ++j)
                if (!r.coeffs(i, j).is_zero()) ++nonzero;
        CHECK(nonzero == 1);
    }
    const DoubleAlgebra d = build_double(validate_bialgebra(nonabelian_2d(), cobracket_2d()));
    SUBCASE("2-dim case: r = x (x) x* + y (x) y*") {
        MatrixQ expected = MatrixQ::Zero(4, 4);
        expected(0, 2) = Rational(1);
        expected(1, 3) = Rational(1);
        CHECK(canonical_r(d).coeffs == expected);
    }
    SUBCASE("canonical r is quasitriangular and not skew") {
        const RClassification cls = classify_r(d.total, canonical_r(d));
        CHECK(cls.cybe);
        CHECK(!cls.skew);
        CHECK(cls.verdict == RVerdict::quasitriangular);
        CHECK(yb_bracket(d.total, canonical_r(d)).is_zero());
    }
}

TEST_CASE("double_cobracket on the named examples") {
    SUBCASE("trivial cobracket on the 2-dim algebra") {
        const LieAlgebra g = nonabelian_2d();
        const DoubleAlgebra d = build_double(validate_bialgebra(g, zero_cobracket(g)));
        const Cobracket gamma_d = double_cobracket(d);
        // gamma_D vanishes on g and is minus the dual of [x,y] = x on g*.
        for (Eigen::Index j = 0; j < 4; ++j)
            for (Eigen::Index k = 0; k < 4; ++k) {
                CHECK(gamma_d.image(0, j, k) == Rational(0));
                CHECK(gamma_d.image(1, j, k) == Rational(0));
            }
        CHECK(gamma_d.image(2, 2, 3) == Rational(-1));
        CHECK(gamma_d.image(2, 3, 2) == Rational(1));
        CHECK(gamma_d.image == cobracket_from_r(d.total, d.canonical).image);
    }
    SUBCASE("triangular case: gamma_D(y) = x ^ y") {
        const DoubleAlgebra d =
            build_double(validate_bialgebra(nonabelian_2d(), cobracket_2d()));
        const Cobracket gamma_d = double_cobracket(d);
        CHECK(gamma_d.image(1, 0, 1) == Rational(1));
        CHECK(gamma_d.image(1, 1, 0) == Rational(-1));
        CHECK(gamma_d.image == cobracket_from_r(d.total, d.canonical).image);
    }
    SUBCASE("abelian trivial bialgebra has zero double cobracket") {
        const LieAlgebra g = abelian_algebra("a", 2);
        const DoubleAlgebra d = build_double(validate_bialgebra(g, zero_cobracket(g)));
        CHECK(double_cobracket(d).image.is_zero());
    }
}

TEST_CASE("doubles of random triangular bialgebras pass all structure checks") {
    Rng rng(41);
    int built = 0;
    for (int i = 0; i < 200; ++i) {
        LieAlgebra g = random_valid_algebra(rng, false);
        if (g.dim() > 2) continue;
        const RMatrix r{g, rng.skew_matrix(g.dim())};
        const LieBialgebra b = validate_bialgebra(g, cobracket_from_r(g, r));
        REQUIRE(b.valid()); // skew r in dim <= 2 always satisfies the CYBE
        const DoubleAlgebra d = build_double(b);
        ++built;
        CHECK(validate_lie(d.total).ok());
        CHECK(check_pairing_invariance(d).ok);
        CHECK(double_cobracket(d).image == cobracket_from_r(d.total, d.canonical).image);
        const RClassification cls = classify_r(d.total, d.canonical);
        CHECK(cls.verdict == RVerdict::quasitriangular);
    }
    CHECK(built >= 40);
}

TEST_CASE("the double with its cobracket is itself a valid Lie bialgebra") {
    for (const Cobracket& gamma : {cobracket_2d(), zero_cobracket(nonabelian_2d()),
                                   zero_cobracket(abelian_algebra("a", 2))}) {
        const DoubleAlgebra d = build_double(validate_bialgebra(gamma.algebra, gamma));
        const LieBialgebra on_double = validate_bialgebra(d.total, double_cobracket(d));
        CHECK(on_double.valid());
    }
}

TEST_CASE("the double restricts to g and g* exactly") {
    const LieBialgebra b = validate_bialgebra(nonabelian_2d(), cobracket_2d());
    const DoubleAlgebra d = build_double(b);
    const Eigen::Index n = 2;
    const Tensor3Q dual = dual_bracket_from_cobracket(b.cobracket);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            for (Eigen::Index k = 0; k < n; ++k) {
                CHECK(d.total.c(i, j, k) == b.algebra.c(i, j, k));
                CHECK(d.total.c(i, j, n + k) == Rational(0));
                CHECK(d.total.c(n + i, n + j, n + k) == dual(i, j, k));
                CHECK(d.total.c(n + i, n + j, k) == Rational(0));
            }
}
