#include "qfla/runner.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "qfla/equivariant.hpp"
#include "qfla/errors.hpp"

namespace qfla {

namespace {

using ws::Document;

struct LineOutcome {
    bool pass = false;
    std::string detail;
    std::vector<Eigen::Index> failure_indices;
};

std::string indices_text(std::initializer_list<Eigen::Index> zero_based) {
    std::string out = "(";
    bool first = true;
    for (Eigen::Index i : zero_based) {
        if (!first) out += ", ";
        first = false;
        out += std::to_string(i + 1);
    }
    return out + ")";
}

std::vector<Eigen::Index> one_based(std::initializer_list<Eigen::Index> zero_based) {
    std::vector<Eigen::Index> out;
    for (Eigen::Index i : zero_based) out.push_back(i + 1);
    return out;
}

std::string vector_text(const VectorQ& v) {
    std::string out = "(";
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += to_string(v(i));
    }
    return out + ")";
}

class Executor {
public:
    Executor(const Document& doc, const RunOptions& options) : doc_(doc), options_(options) {}

    LineOutcome run_line(const ws::TaskLine& line) {
        LineOutcome outcome;
        try {
            outcome = dispatch(line);
        } catch (const Error& e) {
            outcome.pass = false;
            outcome.detail = e.what();
        }
        if (line.negate) {
            outcome.pass = !outcome.pass;
            outcome.detail = "negated: " + outcome.detail;
        }
        return outcome;
    }

private:
    const Document& doc_;
    const RunOptions& options_;

    LineOutcome dispatch(const ws::TaskLine& line) {
        if (line.command == "validate") return cmd_validate(line.args);
        if (line.command == "frobenius") return cmd_frobenius(line.args);
        if (line.command == "cocycle") return cmd_cocycle(line.args);
        if (line.command == "bialgebra") return cmd_bialgebra(line.args);
        if (line.command == "double") return cmd_double(line.args);
        if (line.command == "classify") return cmd_classify(line.args);
        if (line.command == "induce") return cmd_induce(line.args);
        if (line.command == "assemble") return cmd_assemble(line.args);
        if (line.command == "report") return cmd_report(line.args);
        return {false, "unknown command '" + line.command + "'", {}};
    }

    // --- argument resolution ------------------------------------------------

    template <typename Map>
    const typename Map::mapped_type* find_in(const Map& map, const std::string& name) const {
        const auto it = map.find(name);
        return it == map.end() ? nullptr : &it->second;
    }

    struct GqfArgs {
        const SkewForm* form = nullptr;
        const ws::RepSection* rep = nullptr;
        const RMatrix* rmatrix = nullptr;
        std::string error;
    };

    GqfArgs resolve_gqf_args(const std::vector<std::string>& args, bool need_r) const {
        GqfArgs out;
        for (const std::string& arg : args) {
            if (const SkewForm* f = find_in(doc_.forms, arg)) {
                out.form = f;
            } else if (const ws::RepSection* rep = find_in(doc_.reps, arg)) {
                out.rep = rep;
            } else if (const RMatrix* r = find_in(doc_.rmatrices, arg)) {
                out.rmatrix = r;
            } else {
                out.error = "unresolved reference '" + arg + "'";
                return out;
            }
        }
        if (!out.form) out.error = "missing form argument";
        else if (!out.rep) out.error = "missing rep argument";
        else if (need_r && !out.rmatrix) out.error = "missing rmatrix argument";
        return out;
    }

    /// Builds the g-quasi-Frobenius structure for (form, rep) or reports why
    /// it cannot be built.
    std::optional<EquivariantQF> make_gqf(const GqfArgs& args, LineOutcome& failure) {
        const auto module_it = doc_.algebras.find(args.rep->module);
        if (module_it == doc_.algebras.end() || !(module_it->second == args.form->algebra)) {
            failure = {false, "form '" + args.rep->module +
                                  "' and rep act on different algebras", {}};
            return std::nullopt;
        }
        EquivariantQF e = validate_gqf(args.rep->rep.algebra,
                                       quasi_frobenius_structure(*args.form), args.rep->rep);
        if (!e.report.ok()) {
            failure = gqf_outcome(e.report);
            return std::nullopt;
        }
        return e;
    }

    LineOutcome gqf_outcome(const GqfReport& report) const {
        LineOutcome out;
        out.pass = report.ok();
        if (report.ok()) {
            out.detail = "g-quasi-Frobenius structure: module law, derivations, invariance";
            return out;
        }
        std::string detail = "not g-quasi-Frobenius:";
        if (!report.module_law) {
            detail += " module law fails";
            if (report.module_failure) {
                detail += " at pair " +
                          indices_text({report.module_failure->first,
                                        report.module_failure->second});
                out.failure_indices =
                    one_based({report.module_failure->first, report.module_failure->second});
            }
            detail += ";";
        }
        if (!report.derivation) {
            detail += " derivation fails at acting index " +
                      std::to_string(*report.derivation_failure + 1) + ";";
            if (out.failure_indices.empty())
                out.failure_indices = one_based({*report.derivation_failure});
        }
        if (!report.invariance) {
            const auto& f = *report.invariance_failure;
            detail += " invariance fails at " + indices_text({f[0], f[1], f[2]}) + ";";
            if (out.failure_indices.empty()) out.failure_indices = one_based({f[0], f[1], f[2]});
        }
        detail.pop_back();
        out.detail = detail;
        return out;
    }

    // --- per-kind validation --------------------------------------------------

    LineOutcome validate_algebra(const std::string& name, const LieAlgebra& g) const {
        const LieValidationReport report = validate_lie(g);
        if (report.ok()) return {true, "algebra " + name + ": Lie algebra", {}};
        const auto& f = *report.first_failure;
        return {false,
                "algebra " + name + ": " +
                    (report.antisymmetry ? std::string("Jacobi fails at triple ")
                                         : std::string("antisymmetry fails at ")) +
                    indices_text({f[0], f[1], f[2]}),
                one_based({f[0], f[1], f[2]})};
    }

    LineOutcome validate_form(const std::string& name, const SkewForm& beta) const {
        const CocycleReport cocycle = is_two_cocycle(beta);
        if (!cocycle.ok) {
            const auto& f = *cocycle.first_failure;
            return {false,
                    "form " + name + ": 2-cocycle fails at triple " +
                        indices_text({f[0], f[1], f[2]}),
                    one_based({f[0], f[1], f[2]})};
        }
        if (!is_nondegenerate(beta))
            return {false, "form " + name + ": cocycle but degenerate", {}};
        return {true, "form " + name + ": nondegenerate 2-cocycle", {}};
    }

    LineOutcome validate_cobracket(const std::string& name, const Cobracket& gamma) const {
        const LieBialgebra b = validate_bialgebra(gamma.algebra, gamma);
        if (b.valid()) return {true, "cobracket " + name + ": Lie bialgebra", {}};
        std::string detail = "cobracket " + name + ":";
        std::vector<Eigen::Index> indices;
        if (!b.co_jacobi) detail += " dual bracket fails Jacobi;";
        if (!b.one_cocycle) {
            const auto failure = is_one_cocycle(gamma.algebra, gamma).first_failure;
            detail += " 1-cocycle fails at pair " +
                      indices_text({failure->first, failure->second}) + ";";
            indices = one_based({failure->first, failure->second});
        }
        detail.pop_back();
        return {false, detail, indices};
    }

    LineOutcome validate_rmatrix(const std::string& name, const RMatrix& r) const {
        const RClassification cls = classify_r(r.algebra, r);
        if (cls.verdict != RVerdict::not_coboundary)
            return {true, "rmatrix " + name + ": " + to_string(cls.verdict), {}};
        return {false,
                "rmatrix " + name + ": not a coboundary structure (sym invariant: " +
                    (cls.sym_invariant ? "yes" : "no") +
                    ", yb invariant: " + (cls.yb_invariant ? "yes" : "no") + ")",
                {}};
    }

    LineOutcome validate_rep(const std::string& name, const ws::RepSection& rep) const {
        const RepresentationReport report = validate_representation(rep.rep);
        if (report.ok) return {true, "rep " + name + ": representation law holds", {}};
        return {false,
                "rep " + name + ": representation law fails at pair " +
                    indices_text({report.first_failure->first, report.first_failure->second}),
                one_based({report.first_failure->first, report.first_failure->second})};
    }

    LineOutcome validate_morphism(const std::string& name, const ws::MorphismSection& m) const {
        const LieAlgebra& src = doc_.algebras.at(m.source);
        const LieAlgebra& dst = doc_.algebras.at(m.target);
        for (Eigen::Index i = 0; i < src.dim(); ++i) {
            for (Eigen::Index j = i + 1; j < src.dim(); ++j) {
                VectorQ lhs = VectorQ::Zero(dst.dim());
                for (Eigen::Index k = 0; k < src.dim(); ++k)
                    if (!src.c(i, j, k).is_zero()) lhs += m.map.col(k) * src.c(i, j, k);
                if (lhs != bracket(dst, VectorQ(m.map.col(i)), VectorQ(m.map.col(j))))
                    return {false,
                            "morphism " + name + ": not a Lie homomorphism at pair " +
                                indices_text({i, j}),
                            one_based({i, j})};
            }
        }
        return {true, "morphism " + name + ": Lie homomorphism", {}};
    }

    // --- commands ---------------------------------------------------------------

    LineOutcome cmd_validate(const std::vector<std::string>& args) {
        if (args.size() == 2) {
            const bool both = doc_.forms.count(args[0]) + doc_.reps.count(args[0]) == 1 &&
                              doc_.forms.count(args[1]) + doc_.reps.count(args[1]) == 1;
            const bool gqf_pair = both && ((doc_.forms.count(args[0]) &&
                                            doc_.reps.count(args[1])) ||
                                           (doc_.reps.count(args[0]) &&
                                            doc_.forms.count(args[1])));
            if (gqf_pair) {
                const GqfArgs resolved = resolve_gqf_args(args, false);
                if (!resolved.error.empty()) return {false, resolved.error, {}};
                LineOutcome failure;
                const auto e = make_gqf(resolved, failure);
                if (!e) return failure;
                return gqf_outcome(e->report);
            }
        }
        if (args.empty()) {
            LineOutcome all{true, "", {}};
            for (const ws::SectionRef& section : doc_.order) {
                if (section.kind == ws::Kind::task) continue;
                const LineOutcome one = validate_one(section.kind, section.name);
                if (!one.pass && all.pass) {
                    all.pass = false;
                    all.failure_indices = one.failure_indices;
                }
                if (!all.detail.empty()) all.detail += "; ";
                all.detail += one.detail;
            }
            if (all.detail.empty()) all.detail = "empty workspace";
            return all;
        }
        LineOutcome all{true, "", {}};
        for (const std::string& arg : args) {
            const LineOutcome one = validate_named(arg);
            if (!one.pass && all.pass) {
                all.pass = false;
                all.failure_indices = one.failure_indices;
            }
            if (!all.detail.empty()) all.detail += "; ";
            all.detail += one.detail;
        }
        return all;
    }

    LineOutcome validate_one(ws::Kind kind, const std::string& name) const {
        switch (kind) {
            case ws::Kind::algebra: return validate_algebra(name, doc_.algebras.at(name));
            case ws::Kind::form: return validate_form(name, doc_.forms.at(name));
            case ws::Kind::cobracket:
                return validate_cobracket(name, doc_.cobrackets.at(name));
            case ws::Kind::rmatrix: return validate_rmatrix(name, doc_.rmatrices.at(name));
            case ws::Kind::rep: return validate_rep(name, doc_.reps.at(name));
            case ws::Kind::morphism: return validate_morphism(name, doc_.morphisms.at(name));
            case ws::Kind::task: break;
        }
        return {false, "cannot validate a task", {}};
    }

    LineOutcome validate_named(const std::string& name) const {
        std::vector<ws::Kind> kinds;
        if (doc_.algebras.count(name)) kinds.push_back(ws::Kind::algebra);
        if (doc_.forms.count(name)) kinds.push_back(ws::Kind::form);
        if (doc_.cobrackets.count(name)) kinds.push_back(ws::Kind::cobracket);
        if (doc_.rmatrices.count(name)) kinds.push_back(ws::Kind::rmatrix);
        if (doc_.reps.count(name)) kinds.push_back(ws::Kind::rep);
        if (doc_.morphisms.count(name)) kinds.push_back(ws::Kind::morphism);
        if (kinds.empty()) return {false, "unresolved reference '" + name + "'", {}};
        if (kinds.size() > 1) return {false, "ambiguous reference '" + name + "'", {}};
        return validate_one(kinds.front(), name);
    }

    LineOutcome cmd_frobenius(const std::vector<std::string>& args) {
        if (args.size() != 1)
            return {false, "frobenius takes one algebra or form name", {}};
        if (const LieAlgebra* g = find_in(doc_.algebras, args[0])) {
            const MultiPoly det = frobenius_test_symbolic(*g, options_.max_dim);
            if (det.is_zero()) return {false, "not Frobenius: symbolic determinant = 0", {}};
            const auto alpha = frobenius_functional_search(*g, options_.seed, 16,
                                                           options_.max_dim);
            if (!alpha)
                return {false,
                        "symbolic determinant = " + det.to_string(g->basis) +
                            " but witness search exhausted",
                        {}};
            return {true,
                    "Frobenius: symbolic determinant = " + det.to_string(g->basis) +
                        ", witness alpha = " + vector_text(*alpha),
                    {}};
        }
        if (const SkewForm* beta = find_in(doc_.forms, args[0])) {
            const auto alpha = exactness_witness(*beta);
            if (!alpha) return {false, "not Frobenius: form is not exact", {}};
            return {true, "Frobenius: exact with alpha = " + vector_text(*alpha), {}};
        }
        return {false, "unresolved reference '" + args[0] + "'", {}};
    }

    LineOutcome cmd_cocycle(const std::vector<std::string>& args) {
        if (args.size() != 1) return {false, "cocycle takes one form name", {}};
        const SkewForm* beta = find_in(doc_.forms, args[0]);
        if (!beta) return {false, "unresolved reference '" + args[0] + "'", {}};
        const CocycleReport report = is_two_cocycle(*beta);
        if (report.ok) return {true, "2-cocycle", {}};
        const auto& f = *report.first_failure;
        return {false, "2-cocycle fails at triple " + indices_text({f[0], f[1], f[2]}),
                one_based({f[0], f[1], f[2]})};
    }

    LineOutcome cmd_bialgebra(const std::vector<std::string>& args) {
        if (args.size() != 1) return {false, "bialgebra takes one cobracket name", {}};
        const Cobracket* gamma = find_in(doc_.cobrackets, args[0]);
        if (!gamma) return {false, "unresolved reference '" + args[0] + "'", {}};
        return validate_cobracket(args[0], *gamma);
    }

    LineOutcome cmd_double(const std::vector<std::string>& args) {
        if (args.size() != 1) return {false, "double takes one cobracket name", {}};
        const Cobracket* gamma = find_in(doc_.cobrackets, args[0]);
        if (!gamma) return {false, "unresolved reference '" + args[0] + "'", {}};
        const LieBialgebra b = validate_bialgebra(gamma->algebra, *gamma);
        if (!b.valid()) return validate_cobracket(args[0], *gamma);
        const DoubleAlgebra d = build_double(b);
        if (!(double_cobracket(d).image == cobracket_from_r(d.total, d.canonical).image))
            return {false, "double cobracket does not match delta of the canonical r", {}};
        const RClassification cls = classify_r(d.total, d.canonical);
        if (cls.verdict != RVerdict::quasitriangular)
            return {false,
                    std::string("canonical r classifies as ") + to_string(cls.verdict) +
                        ", expected quasitriangular",
                    {}};
        return {true,
                "double of dimension " + std::to_string(d.total.dim()) +
                    ": Jacobi ok, pairing invariant, cobracket = delta r, canonical r "
                    "quasitriangular",
                {}};
    }

    LineOutcome cmd_classify(const std::vector<std::string>& args) {
        if (args.empty() || args.size() > 2)
            return {false, "classify takes an rmatrix or cobracket name and an optional "
                           "expected verdict", {}};
        RVerdict verdict;
        bool skew = false;
        if (const RMatrix* r = find_in(doc_.rmatrices, args[0])) {
            const RClassification cls = classify_r(r->algebra, *r);
            verdict = cls.verdict;
            skew = cls.skew;
        } else if (const Cobracket* gamma = find_in(doc_.cobrackets, args[0])) {
            const LieBialgebra b = validate_bialgebra(gamma->algebra, *gamma);
            if (!b.valid()) return validate_cobracket(args[0], *gamma);
            const DoubleAlgebra d = build_double(b);
            const RClassification cls = classify_r(d.total, d.canonical);
            verdict = cls.verdict;
            skew = cls.skew;
        } else {
            return {false, "unresolved reference '" + args[0] + "'", {}};
        }
        const std::string detail = std::string("verdict ") + to_string(verdict) +
                                   (skew ? " (skew)" : " (not skew)");
        if (args.size() == 2) {
            if (args[1] != to_string(verdict))
                return {false, detail + ", expected " + args[1], {}};
            return {true, detail, {}};
        }
        return {true, detail, {}};
    }

    LineOutcome cmd_induce(const std::vector<std::string>& args) {
        const GqfArgs resolved = resolve_gqf_args(args, true);
        if (!resolved.error.empty()) return {false, resolved.error, {}};
        LineOutcome failure;
        const auto e = make_gqf(resolved, failure);
        if (!e) return failure;
        const Representation psi = induce_dual_action(*e, *resolved.rmatrix);
        const RepresentationReport report = validate_representation(psi);
        if (!report.ok)
            return {false,
                    "induced action violates the dual representation law at pair " +
                        indices_text({report.first_failure->first,
                                      report.first_failure->second}),
                    one_based({report.first_failure->first, report.first_failure->second})};
        return {true, "induced dual action is a representation of the dual algebra", {}};
    }

    LineOutcome cmd_assemble(const std::vector<std::string>& args) {
        const GqfArgs resolved = resolve_gqf_args(args, true);
        if (!resolved.error.empty()) return {false, resolved.error, {}};
        LineOutcome failure;
        const auto e = make_gqf(resolved, failure);
        if (!e) return failure;
        const EquivariantQF assembled = assemble_double_action(*e, *resolved.rmatrix);
        if (!assembled.report.ok()) {
            LineOutcome out = gqf_outcome(assembled.report);
            out.detail = "double action: " + out.detail;
            return out;
        }
        for (std::size_t i = 0; i < e->action.matrices.size(); ++i) {
            if (!same_matrix(assembled.action.matrices[i], e->action.matrices[i]))
                return {false, "double action does not restrict to the original action", {}};
        }
        return {true,
                "double action of dimension " + std::to_string(assembled.acting.dim()) +
                    " is quasi-Frobenius-equivariant and restricts to the original action",
                {}};
    }

    LineOutcome cmd_report(const std::vector<std::string>& args) {
        std::string text;
        if (args.empty()) {
            text = ws::serialize(doc_);
        } else {
            for (const std::string& arg : args) {
                std::string one;
                if (const LieAlgebra* g = find_in(doc_.algebras, arg)) one += ws::serialize(*g);
                if (const SkewForm* f = find_in(doc_.forms, arg))
                    one += ws::serialize(arg, *f);
                if (const Cobracket* gamma = find_in(doc_.cobrackets, arg))
                    one += ws::serialize(arg, *gamma);
                if (const RMatrix* r = find_in(doc_.rmatrices, arg))
                    one += ws::serialize(arg, *r);
                if (const ws::RepSection* rep = find_in(doc_.reps, arg))
                    one += ws::serialize(*rep);
                if (const ws::MorphismSection* m = find_in(doc_.morphisms, arg))
                    one += ws::serialize(*m);
                if (one.empty()) return {false, "unresolved reference '" + arg + "'", {}};
                text += one;
            }
        }
        return {true, "serialized sections follow\n" + text, {}};
    }
};

} // namespace

RunReport run_document(const Document& doc, const RunOptions& options) {
    Executor executor(doc, options);
    RunReport report;

    std::vector<ws::Task> tasks;
    if (options.command) {
        std::istringstream in(*options.command);
        ws::TaskLine line;
        in >> line.command;
        if (line.command == "not") {
            line.negate = true;
            in >> line.command;
        }
        std::string arg;
        while (in >> arg) line.args.push_back(arg);
        tasks.push_back(ws::Task{"command", {line}});
    } else {
        for (const ws::SectionRef& section : doc.order) {
            if (section.kind != ws::Kind::task) continue;
            if (options.only_task && section.name != *options.only_task) continue;
            tasks.push_back(doc.tasks.at(section.name));
        }
    }

    for (const ws::Task& task : tasks) {
        const auto start = std::chrono::steady_clock::now();
        TaskResult result;
        result.name = task.name;
        result.pass = true;
        for (const ws::TaskLine& line : task.lines) {
            const LineOutcome outcome = executor.run_line(line);
            if (!outcome.pass && result.pass) {
                result.pass = false;
                result.failure_indices = outcome.failure_indices;
            }
            if (!result.detail.empty()) result.detail += "; ";
            result.detail += outcome.detail;
        }
        if (task.lines.empty()) result.detail = "no lines";
        const auto stop = std::chrono::steady_clock::now();
        result.elapsed_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
        report.tasks.push_back(std::move(result));
    }
    return report;
}

std::string render_human(const RunReport& report) {
    std::string out;
    for (const TaskResult& task : report.tasks) {
        out += "TASK " + task.name + ": " + (task.pass ? "PASS" : "FAIL") + " — " +
               task.detail + "\n";
    }
    return out;
}

std::string render_machine(const RunReport& report) {
    std::string out;
    for (const TaskResult& task : report.tasks) {
        nlohmann::ordered_json record;
        record["task"] = task.name;
        record["verdict"] = task.pass ? "pass" : "fail";
        record["failure_indices"] = task.failure_indices;
        record["elapsed_ms"] = task.elapsed_ms;
        out += record.dump() + "\n";
    }
    return out;
}

} // namespace qfla
