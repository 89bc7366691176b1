#include <algorithm>

#include "qfla/errors.hpp"
#include "qfla/workspace.hpp"

namespace qfla::ws {

namespace {

std::string coeff_prefix(const Rational& c) {
    return c == Rational(1) ? std::string() : to_string(c) + " ";
}

// Term order inside combos is lexicographic on the basis labels, so the
// mixed brackets of a double print their dual terms first (xs + y).
std::vector<Eigen::Index> by_label(const std::vector<std::string>& labels) {
    std::vector<Eigen::Index> order(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) order[i] = static_cast<Eigen::Index>(i);
    std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
        return labels[static_cast<std::size_t>(a)] < labels[static_cast<std::size_t>(b)];
    });
    return order;
}

std::string combo_text(const VectorQ& v, const std::vector<std::string>& labels) {
    std::string out;
    for (Eigen::Index k : by_label(labels)) {
        if (v(k).is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += coeff_prefix(v(k)) + labels[static_cast<std::size_t>(k)];
    }
    return out;
}

} // namespace

std::string serialize(const LieAlgebra& g) {
    std::string out = "[algebra " + g.name + "]\n";
    out += "basis";
    for (const std::string& label : g.basis) out += " " + label;
    out += "\n";
    const Eigen::Index n = g.dim();
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            VectorQ value(n);
            for (Eigen::Index k = 0; k < n; ++k) value(k) = g.c(i, j, k);
            if (value.isZero(Rational(0))) continue;
            out += "bracket " + g.basis[static_cast<std::size_t>(i)] + " " +
                   g.basis[static_cast<std::size_t>(j)] + " = " + combo_text(value, g.basis) +
                   "\n";
        }
    }
    return out;
}

std::string serialize(const std::string& name, const SkewForm& beta) {
    std::string out = "[form " + name + " on " + beta.algebra.name + "]\n";
    const Eigen::Index n = beta.algebra.dim();
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j)
            if (!beta.gram(i, j).is_zero())
                out += "entry " + beta.algebra.basis[static_cast<std::size_t>(i)] + " " +
                       beta.algebra.basis[static_cast<std::size_t>(j)] + " = " +
                       to_string(beta.gram(i, j)) + "\n";
    return out;
}

std::string serialize(const std::string& name, const Cobracket& gamma) {
    std::string out = "[cobracket " + name + " on " + gamma.algebra.name + "]\n";
    const Eigen::Index n = gamma.algebra.dim();
    const auto& labels = gamma.algebra.basis;
    const std::vector<Eigen::Index> order = by_label(labels);
    for (Eigen::Index i = 0; i < n; ++i) {
        std::string line;
        for (std::size_t a = 0; a < order.size(); ++a) {
            for (std::size_t b = a + 1; b < order.size(); ++b) {
                const Eigen::Index j = order[a], k = order[b];
                if (gamma.image(i, j, k) != -gamma.image(i, k, j))
                    throw PreconditionError(
                        "serialize: cobracket image is not skew, cannot write wedge terms");
                const Rational& c = gamma.image(i, j, k);
                if (c.is_zero()) continue;
                if (!line.empty()) line += " + ";
                line += coeff_prefix(c) + labels[static_cast<std::size_t>(j)] + " ^ " +
                        labels[static_cast<std::size_t>(k)];
            }
        }
        if (!line.empty())
            out += "gamma " + labels[static_cast<std::size_t>(i)] + " = " + line + "\n";
    }
    return out;
}

std::string serialize(const std::string& name, const RMatrix& r) {
    std::string out = "[rmatrix " + name + " on " + r.algebra.name + "]\n";
    std::string line;
    const auto& labels = r.algebra.basis;
    const std::vector<Eigen::Index> order = by_label(labels);
    for (Eigen::Index i : order)
        for (Eigen::Index j : order) {
            if (r.coeffs(i, j).is_zero()) continue;
            if (!line.empty()) line += " + ";
            line += coeff_prefix(r.coeffs(i, j)) + labels[static_cast<std::size_t>(i)] + " * " +
                    labels[static_cast<std::size_t>(j)];
        }
    if (!line.empty()) out += "r = " + line + "\n";
    return out;
}

std::string serialize(const RepSection& rep) {
    std::string out =
        "[rep " + rep.name + " of " + rep.acting + " on " + rep.module + "]\n";
    const auto& acting_labels = rep.rep.algebra.basis;
    for (Eigen::Index x = 0; x < rep.rep.algebra.dim(); ++x) {
        const MatrixQ& m = rep.rep.matrices[static_cast<std::size_t>(x)];
        for (Eigen::Index u = 0; u < rep.rep.module_dim; ++u) {
            const VectorQ column = m.col(u);
            if (column.isZero(Rational(0))) continue;
            // Module labels are not stored on the matrix; the caller supplies
            // them through the module algebra name, so look them up lazily.
            out += "act " + acting_labels[static_cast<std::size_t>(x)] + " : " +
                   rep.module_labels[static_cast<std::size_t>(u)] + " -> " +
                   combo_text(column, rep.module_labels) + "\n";
        }
    }
    return out;
}

std::string serialize(const MorphismSection& morphism) {
    std::string out =
        "[morphism " + morphism.name + " of " + morphism.source + " on " + morphism.target +
        "]\n";
    for (Eigen::Index u = 0; u < morphism.map.cols(); ++u) {
        const VectorQ column = morphism.map.col(u);
        if (column.isZero(Rational(0))) continue;
        out += "map " + morphism.source_labels[static_cast<std::size_t>(u)] + " -> " +
               combo_text(column, morphism.target_labels) + "\n";
    }
    return out;
}

std::string serialize(const Task& task) {
    std::string out = "[task " + task.name + "]\n";
    for (const TaskLine& line : task.lines) {
        out += line.expect ? "expect" : "run";
        if (line.negate) out += " not";
        out += " " + line.command;
        for (const std::string& arg : line.args) out += " " + arg;
        out += "\n";
    }
    return out;
}

std::string serialize(const DoubleAlgebra& d) {
    std::string out = serialize(d.total);
    out += "\n" + serialize(d.total.name + "_r", d.canonical);
    out += "\n" + serialize(d.total.name + "_gamma", d.cobracket_d);
    return out;
}

std::string serialize(const Document& doc) {
    std::string out;
    auto emit = [&out](const std::string& text) {
        if (!out.empty() && !text.empty()) out += "\n";
        out += text;
    };
    for (const auto& [name, g] : doc.algebras) emit(serialize(g));
    for (const auto& [name, beta] : doc.forms) emit(serialize(name, beta));
    for (const auto& [name, gamma] : doc.cobrackets) emit(serialize(name, gamma));
    for (const auto& [name, r] : doc.rmatrices) emit(serialize(name, r));
    for (const auto& [name, rep] : doc.reps) emit(serialize(rep));
    for (const auto& [name, morphism] : doc.morphisms) emit(serialize(morphism));
    for (const auto& [name, task] : doc.tasks) emit(serialize(task));
    return out;
}

} // namespace qfla::ws
