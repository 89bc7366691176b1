#include "qfla/multipoly.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>

#include "qfla/errors.hpp"

namespace qfla {

bool GradedLexLess::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly MultiPoly::constant(int vars, Rational value) {
    MultiPoly p(vars);
    p.add_term(Exponents(static_cast<std::size_t>(vars), 0), value);
    return p;
}

MultiPoly MultiPoly::variable(int vars, int index) {
    MultiPoly p(vars);
    Exponents e(static_cast<std::size_t>(vars), 0);
    e[static_cast<std::size_t>(index)] = 1;
    p.add_term(e, Rational(1));
    return p;
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return 0;
    const Exponents& lead = terms_.rbegin()->first;
    return std::accumulate(lead.begin(), lead.end(), 0);
}

void MultiPoly::add_term(const Exponents& exponents, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(exponents, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r(a.vars_);
    MultiPoly::Exponents e(static_cast<std::size_t>(a.vars_), 0);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly operator*(const Rational& s, const MultiPoly& p) {
    MultiPoly r(p.vars_);
    if (s.is_zero()) return r;
    for (const auto& [e, c] : p.terms_) r.terms_.emplace(e, s * c);
    return r;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
    Rational total(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (int k = 0; k < e[i]; ++k) term *= point[i];
        }
        total += term;
    }
    return total;
}

std::string MultiPoly::to_string(std::span<const std::string> labels) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    // Leading term first: iterate the graded-lex map in reverse.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) out += " + ";
        first = false;
        const auto& [e, c] = *it;
        const bool has_vars = std::any_of(e.begin(), e.end(), [](int x) { return x > 0; });
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += " ";
            mono += labels.empty() ? "x" + std::to_string(i + 1) : labels[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (!has_vars) {
            out += qfla::to_string(c);
        } else if (c == Rational(1)) {
            out += mono;
        } else {
            out += qfla::to_string(c) + " " + mono;
        }
    }
    return out;
}

MultiPoly poly_det(const PolyMatrix& m) {
    if (m.rows() != m.cols()) {
        throw DimensionError("poly_det: matrix is " + std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()) + ", expected square");
    }
    const Eigen::Index n = m.rows();
    if (n > kPolyDetMaxSize) {
        throw GuardError("poly_det: size " + std::to_string(n) + " exceeds guard " +
                         std::to_string(kPolyDetMaxSize));
    }
    if (n == 0) return MultiPoly::constant(m.vars(), Rational(1));

    // minors[mask] = det of the submatrix on rows (n - popcount(mask) .. n-1)
    // and the column set `mask`; built level by level from single entries.
    std::unordered_map<std::uint32_t, MultiPoly> prev;
    for (Eigen::Index j = 0; j < n; ++j) prev.emplace(1u << j, m.at(n - 1, j));
    for (Eigen::Index level = 2; level <= n; ++level) {
        const Eigen::Index row = n - level;
        std::unordered_map<std::uint32_t, MultiPoly> cur;
        const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1u);
        for (std::uint32_t mask = 0; mask <= full; ++mask) {
            if (std::popcount(mask) != static_cast<int>(level)) continue;
            if (level < n && mask == 0) continue;
            MultiPoly det(m.vars());
            int position = 0;
            for (Eigen::Index j = 0; j < n; ++j) {
                const std::uint32_t bit = 1u << j;
                if (!(mask & bit)) continue;
                const MultiPoly& entry = m.at(row, j);
                if (!entry.is_zero()) {
                    MultiPoly cofactor = entry * prev.at(mask ^ bit);
                    if (position % 2 == 0)
                        det += cofactor;
                    else
                        det -= cofactor;
                }
                ++position;
            }
            cur.emplace(mask, std::move(det));
        }
        prev = std::move(cur);
    }
    return prev.at((n == 32) ? ~0u : ((1u << n) - 1u));
}

} // namespace qfla
