#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qfla/drinfeld_double.hpp"
#include "qfla/lie_bialgebra.hpp"
#include "qfla/quasi_frobenius.hpp"
#include "qfla/representation.hpp"

namespace qfla {

/// Size-safe matrix comparison (Eigen's operator== asserts equal shapes).
inline bool same_matrix(const MatrixQ& a, const MatrixQ& b) {
    return a.rows() == b.rows() && a.cols() == b.cols() && (a.size() == 0 || a == b);
}
inline bool same_vector(const VectorQ& a, const VectorQ& b) {
    return a.size() == b.size() && (a.size() == 0 || a == b);
}

inline bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.name == b.name && a.basis == b.basis && a.c == b.c;
}
inline bool operator==(const SkewForm& a, const SkewForm& b) {
    return a.algebra == b.algebra && same_matrix(a.gram, b.gram);
}
inline bool operator==(const Cobracket& a, const Cobracket& b) {
    return a.algebra == b.algebra && a.image == b.image;
}
inline bool operator==(const RMatrix& a, const RMatrix& b) {
    return a.algebra == b.algebra && same_matrix(a.coeffs, b.coeffs);
}
inline bool operator==(const Representation& a, const Representation& b) {
    if (!(a.algebra == b.algebra) || a.module_dim != b.module_dim ||
        a.matrices.size() != b.matrices.size())
        return false;
    for (std::size_t i = 0; i < a.matrices.size(); ++i)
        if (!same_matrix(a.matrices[i], b.matrices[i])) return false;
    return true;
}

namespace ws {

enum class Kind { algebra, form, cobracket, rmatrix, rep, morphism, task };

const char* kind_name(Kind k);

/// True iff `name` is one of the task commands (validate, frobenius, ...).
bool is_command(const std::string& name);

struct RepSection {
    std::string name;
    std::string acting;  // acting algebra section name
    std::string module;  // module algebra section name
    std::vector<std::string> module_labels;
    Representation rep;

    friend bool operator==(const RepSection& a, const RepSection& b) {
        return a.name == b.name && a.acting == b.acting && a.module == b.module &&
               a.rep == b.rep;
    }
};

struct MorphismSection {
    std::string name;
    std::string source;
    std::string target;
    std::vector<std::string> source_labels;
    std::vector<std::string> target_labels;
    MatrixQ map; // target_dim x source_dim

    friend bool operator==(const MorphismSection& a, const MorphismSection& b) {
        return a.name == b.name && a.source == b.source && a.target == b.target &&
               same_matrix(a.map, b.map);
    }
};

struct TaskLine {
    bool expect = false; // written with 'expect' instead of 'run'
    bool negate = false; // 'not' modifier
    std::string command;
    std::vector<std::string> args;
    int line = 0;

    friend bool operator==(const TaskLine& a, const TaskLine& b) {
        return a.expect == b.expect && a.negate == b.negate && a.command == b.command &&
               a.args == b.args;
    }
};

struct Task {
    std::string name;
    std::vector<TaskLine> lines;

    friend bool operator==(const Task& a, const Task& b) {
        return a.name == b.name && a.lines == b.lines;
    }
};

struct SectionRef {
    Kind kind;
    std::string name;
};

/// A fully resolved workspace: every reference points at an earlier section,
/// names are unique per kind.
struct Document {
    std::vector<SectionRef> order; // parse order
    std::map<std::string, LieAlgebra> algebras;
    std::map<std::string, SkewForm> forms;
    std::map<std::string, Cobracket> cobrackets;
    std::map<std::string, RMatrix> rmatrices;
    std::map<std::string, RepSection> reps;
    std::map<std::string, MorphismSection> morphisms;
    std::map<std::string, Task> tasks;

    bool empty() const {
        return algebras.empty() && forms.empty() && cobrackets.empty() && rmatrices.empty() &&
               reps.empty() && morphisms.empty() && tasks.empty();
    }

    friend bool operator==(const Document& a, const Document& b) {
        return a.algebras == b.algebras && a.forms == b.forms && a.cobrackets == b.cobrackets &&
               a.rmatrices == b.rmatrices && a.reps == b.reps && a.morphisms == b.morphisms &&
               a.tasks == b.tasks;
    }
};

/// Parses the line-oriented workspace format; throws ParseError with a
/// 1-based line number, column, and the offending lexeme.
Document parse_workspace(std::string_view text);

/// Canonical text: sections ordered by kind then name, entries in index
/// order, rationals as p/q with /q omitted when q = 1.
/// parse(serialize(doc)) reproduces doc exactly.
std::string serialize(const Document& doc);

std::string serialize(const LieAlgebra& g);
std::string serialize(const std::string& name, const SkewForm& beta);
std::string serialize(const std::string& name, const Cobracket& gamma);
std::string serialize(const std::string& name, const RMatrix& r);
std::string serialize(const RepSection& rep);
std::string serialize(const MorphismSection& morphism);
std::string serialize(const Task& task);

/// The double as algebra + canonical r-matrix + cobracket sections (names
/// derived from the double's algebra name).  The pairing is symmetric and
/// has no section kind; it is implied by the construction.
std::string serialize(const DoubleAlgebra& d);

} // namespace ws
} // namespace qfla
