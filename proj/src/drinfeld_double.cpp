#include "qfla/drinfeld_double.hpp"

#include "qfla/errors.hpp"

namespace qfla {

namespace {

PairingReport pairing_invariance(const LieAlgebra& total, const MatrixQ& pairing) {
    const Eigen::Index m = total.dim();
    PairingReport report;
    for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index j = 0; j < m; ++j) {
            for (Eigen::Index k = 0; k < m; ++k) {
                Rational lhs(0), rhs(0);
                for (Eigen::Index p = 0; p < m; ++p) {
                    lhs += total.c(i, j, p) * pairing(p, k);
                    rhs += total.c(j, k, p) * pairing(i, p);
                }
                if (lhs != rhs) {
                    report.ok = false;
                    report.first_failure = {i, j, k};
                    return report;
                }
            }
        }
    }
    return report;
}

} // namespace

DoubleAlgebra build_double(const LieBialgebra& b) {
    const LieBialgebra checked = validate_bialgebra(b.algebra, b.cobracket);
    const Eigen::Index n = b.algebra.dim();
    const Eigen::Index m = 2 * n;
    const Tensor3Q& c = b.algebra.c;
    const Tensor3Q dual = dual_bracket_from_cobracket(b.cobracket);

    DoubleAlgebra d;
    d.base = checked;
    d.total.name = b.algebra.name.empty() ? "double" : b.algebra.name + "_double";
    d.total.basis = b.algebra.basis;
    for (const std::string& label : b.algebra.basis) d.total.basis.push_back(label + "s");
    d.total.c = Tensor3Q::Zero(m, m, m);

    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            for (Eigen::Index k = 0; k < n; ++k) {
                // [e_i, e_j] = [e_i, e_j]_g and [e_i*, e_j*] = [e_i*, e_j*]_{g*}.
                d.total.c(i, j, k) = c(i, j, k);
                d.total.c(n + i, n + j, n + k) = dual(i, j, k);
            }

    // Mixed bracket [e_i, e_b*] = ad*_{e_i} e_b* - ad*_{e_b*} e_i
    //             = sum_j dual(b, j, i) e_j  -  sum_m c(i, m, b) e_m*.
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index b_idx = 0; b_idx < n; ++b_idx) {
            for (Eigen::Index j = 0; j < n; ++j) {
                const Rational v = dual(b_idx, j, i);
                d.total.c(i, n + b_idx, j) = v;
                d.total.c(n + b_idx, i, j) = -v;
            }
            for (Eigen::Index mm = 0; mm < n; ++mm) {
                const Rational v = -c(i, mm, b_idx);
                d.total.c(i, n + b_idx, n + mm) = v;
                d.total.c(n + b_idx, i, n + mm) = -v;
            }
        }

    d.pairing = MatrixQ::Zero(m, m);
    for (Eigen::Index i = 0; i < n; ++i) {
        d.pairing(i, n + i) = Rational(1);
        d.pairing(n + i, i) = Rational(1);
    }

    d.canonical.algebra = d.total;
    d.canonical.coeffs = MatrixQ::Zero(m, m);
    for (Eigen::Index i = 0; i < n; ++i) d.canonical.coeffs(i, n + i) = Rational(1);

    d.cobracket_d.algebra = d.total;
    d.cobracket_d.image = Tensor3Q::Zero(m, m, m);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            for (Eigen::Index k = 0; k < n; ++k) {
                d.cobracket_d.image(i, j, k) = b.cobracket.image(i, j, k);
                // gamma_{g*} is the dual of g's bracket; it enters negated.
                d.cobracket_d.image(n + i, n + j, n + k) = -c(j, k, i);
            }

    if (!checked.valid()) {
        const LieValidationReport jac = validate_lie(d.total);
        std::string where = "n/a";
        if (jac.first_failure) {
            const auto& f = *jac.first_failure;
            where = "(" + std::to_string(f[0] + 1) + ", " + std::to_string(f[1] + 1) + ", " +
                    std::to_string(f[2] + 1) + ")";
        }
        throw InvalidBialgebraError(
            std::string("build_double: input is not a Lie bialgebra (") +
            (checked.co_jacobi ? "" : "co-Jacobi fails; ") +
            (checked.one_cocycle ? "" : "1-cocycle fails; ") +
            "first Jacobi failure in the double at " + where + ")");
    }

    const LieValidationReport jacobi = validate_lie(d.total);
    if (!jacobi.ok()) {
        const auto& f = *jacobi.first_failure;
        throw InvalidBialgebraError("build_double: double fails Jacobi at (" +
                                    std::to_string(f[0] + 1) + ", " + std::to_string(f[1] + 1) + ", " +
                                    std::to_string(f[2] + 1) + ")");
    }
    const PairingReport pairing = pairing_invariance(d.total, d.pairing);
    if (!pairing.ok) {
        const auto& f = *pairing.first_failure;
        throw InvalidBialgebraError("build_double: pairing invariance fails at (" +
                                    std::to_string(f[0] + 1) + ", " + std::to_string(f[1] + 1) + ", " +
                                    std::to_string(f[2] + 1) + ")");
    }
    return d;
}

Rational pairing_eval(const DoubleAlgebra& d, const VectorQ& a, const VectorQ& b) {
    const Eigen::Index m = d.total.dim();
    if (a.size() != m || b.size() != m) {
        throw DimensionError("pairing_eval: vectors must have length " + std::to_string(m));
    }
    Rational value(0);
    for (Eigen::Index i = 0; i < m; ++i) {
        if (a(i).is_zero()) continue;
        for (Eigen::Index j = 0; j < m; ++j) value += a(i) * d.pairing(i, j) * b(j);
    }
    return value;
}

PairingReport check_pairing_invariance(const DoubleAlgebra& d) {
    return pairing_invariance(d.total, d.pairing);
}

RMatrix canonical_r(const DoubleAlgebra& d) { return d.canonical; }

Cobracket double_cobracket(const DoubleAlgebra& d) { return d.cobracket_d; }

} // namespace qfla
