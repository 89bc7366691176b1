#pragma once

#include <Eigen/Core>

#include <map>
#include <span>
#include <string>
#include <vector>

#include "qfla/rational.hpp"

namespace qfla {

/// Graded lexicographic order on exponent vectors: lower total degree first,
/// ties broken lexicographically.
struct GradedLexLess {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

/// Sparse multivariate polynomial over the rationals in a fixed number of
/// variables, the role of the symmetric algebra on a basis.  Zero
/// coefficients are never stored.
class MultiPoly {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Rational, GradedLexLess>;

    MultiPoly() : vars_(0) {}
    explicit MultiPoly(int vars) : vars_(vars) {}

    static MultiPoly constant(int vars, Rational value);
    static MultiPoly variable(int vars, int index);

    int vars() const { return vars_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;
    const TermMap& terms() const { return terms_; }

    /// Adds `coeff · x^exponents`, erasing the term if it cancels to zero.
    void add_term(const Exponents& exponents, const Rational& coeff);

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const Rational& s, const MultiPoly& p);

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    Rational evaluate(const std::vector<Rational>& point) const;

    /// Deterministic text form, leading (graded-lex greatest) term first.
    /// Default variable names are x1..xn.
    std::string to_string(std::span<const std::string> labels = {}) const;

private:
    int vars_;
    TermMap terms_;
};

/// Minimal dense matrix of polynomials; just enough for determinants.
class PolyMatrix {
public:
    PolyMatrix(Eigen::Index rows, Eigen::Index cols, int vars)
        : rows_(rows), cols_(cols), vars_(vars),
          entries_(static_cast<std::size_t>(rows * cols), MultiPoly(vars)) {}

    Eigen::Index rows() const { return rows_; }
    Eigen::Index cols() const { return cols_; }
    int vars() const { return vars_; }

    MultiPoly& at(Eigen::Index r, Eigen::Index c) {
        return entries_[static_cast<std::size_t>(r * cols_ + c)];
    }
    const MultiPoly& at(Eigen::Index r, Eigen::Index c) const {
        return entries_[static_cast<std::size_t>(r * cols_ + c)];
    }

private:
    Eigen::Index rows_, cols_;
    int vars_;
    std::vector<MultiPoly> entries_;
};

inline constexpr Eigen::Index kPolyDetMaxSize = 12;

/// Exact symbolic determinant by Laplace expansion with subset memoisation.
/// Throws DimensionError for non-square input and GuardError above
/// kPolyDetMaxSize.
MultiPoly poly_det(const PolyMatrix& m);

} // namespace qfla
