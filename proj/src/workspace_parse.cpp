#include <algorithm>
#include <cctype>
#include <optional>

#include "qfla/errors.hpp"
#include "qfla/workspace.hpp"

namespace qfla::ws {

namespace {

struct Token {
    std::string text;
    int line = 0;
    int col = 0;
};

bool is_word_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::vector<std::vector<Token>> tokenize(std::string_view text) {
    std::vector<std::vector<Token>> lines;
    std::vector<Token> current;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto flush_line = [&] {
        if (!current.empty()) lines.push_back(std::move(current));
        current.clear();
    };
    while (i < text.size()) {
        const char c = text[i];
        if (c == '\n') {
            flush_line();
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            ++col;
            continue;
        }
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        const int start_col = col;
        if (std::string("[]=:+^*").find(c) != std::string::npos) {
            current.push_back({std::string(1, c), line, start_col});
            ++i;
            ++col;
            continue;
        }
        if (c == '-') {
            if (i + 1 < text.size() && text[i + 1] == '>') {
                current.push_back({"->", line, start_col});
                i += 2;
                col += 2;
                continue;
            }
            if (i + 1 < text.size() && is_digit(text[i + 1])) {
                std::size_t j = i + 1;
                while (j < text.size() && (is_digit(text[j]) || text[j] == '/')) ++j;
                current.push_back({std::string(text.substr(i, j - i)), line, start_col});
                col += static_cast<int>(j - i);
                i = j;
                continue;
            }
            throw ParseError("unexpected character", line, start_col, "-");
        }
        if (is_digit(c)) {
            std::size_t j = i;
            while (j < text.size() && (is_digit(text[j]) || text[j] == '/')) ++j;
            current.push_back({std::string(text.substr(i, j - i)), line, start_col});
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        if (is_word_start(c)) {
            std::size_t j = i;
            while (j < text.size() && is_word_char(text[j])) ++j;
            current.push_back({std::string(text.substr(i, j - i)), line, start_col});
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        throw ParseError("unexpected character", line, start_col, std::string(1, c));
    }
    flush_line();
    return lines;
}

class Parser {
public:
    explicit Parser(std::string_view text) : lines_(tokenize(text)) {}

    Document parse() {
        std::size_t i = 0;
        while (i < lines_.size()) {
            const std::vector<Token>& header = lines_[i];
            if (header.front().text != "[") {
                fail(header.front(), "expected a '[kind name ...]' section header");
            }
            std::size_t body_start = i + 1;
            std::size_t body_end = body_start;
            while (body_end < lines_.size() && lines_[body_end].front().text != "[") ++body_end;
            parse_section(header, body_start, body_end);
            i = body_end;
        }
        return std::move(doc_);
    }

private:
    std::vector<std::vector<Token>> lines_;
    Document doc_;

    [[noreturn]] static void fail(const Token& at, const std::string& message) {
        throw ParseError(message, at.line, at.col, at.text);
    }

    static bool is_label(const std::string& s) {
        if (s.empty() || !is_word_start(s[0])) return false;
        return std::all_of(s.begin(), s.end(), is_word_char);
    }

    // --- header -----------------------------------------------------------

    struct Header {
        Kind kind;
        std::string name;
        std::vector<std::pair<std::string, std::string>> refs; // (connector, name)
        Token at;
    };

    Header parse_header(const std::vector<Token>& tokens) {
        std::size_t p = 1; // past '['
        auto need = [&](const char* what) -> const Token& {
            if (p >= tokens.size()) fail(tokens.back(), std::string("expected ") + what);
            return tokens[p];
        };
        Header h;
        h.at = tokens[0];
        const Token& kind_tok = need("a section kind");
        static const std::map<std::string, Kind> kinds = {
            {"algebra", Kind::algebra},   {"form", Kind::form}, {"cobracket", Kind::cobracket},
            {"rmatrix", Kind::rmatrix},   {"rep", Kind::rep},   {"morphism", Kind::morphism},
            {"task", Kind::task}};
        const auto kind_it = kinds.find(kind_tok.text);
        if (kind_it == kinds.end())
            fail(kind_tok, "expected one of algebra, form, cobracket, rmatrix, rep, morphism, task");
        h.kind = kind_it->second;
        ++p;
        const Token& name_tok = need("a section name");
        if (!is_label(name_tok.text)) fail(name_tok, "expected a section name");
        h.name = name_tok.text;
        ++p;
        while (p < tokens.size() && tokens[p].text != "]") {
            const Token& conn = tokens[p];
            if (conn.text != "of" && conn.text != "on")
                fail(conn, "expected 'of', 'on', or ']'");
            ++p;
            const Token& ref = need("a referenced section name");
            if (!is_label(ref.text)) fail(ref, "expected a referenced section name");
            h.refs.emplace_back(conn.text, ref.text);
            ++p;
        }
        if (p >= tokens.size() || tokens[p].text != "]") fail(tokens.back(), "expected ']'");
        if (p + 1 != tokens.size()) fail(tokens[p + 1], "unexpected tokens after ']'");
        return h;
    }

    void check_unique(const Header& h, bool exists) {
        if (exists)
            fail(h.at, std::string("duplicate ") + kind_name(h.kind) + " name '" + h.name + "'");
    }

    const LieAlgebra& resolve_algebra(const Header& h, const std::string& ref) {
        const auto it = doc_.algebras.find(ref);
        if (it == doc_.algebras.end())
            fail(h.at, "unresolved reference to algebra '" + ref + "'");
        return it->second;
    }

    void parse_section(const std::vector<Token>& header_tokens, std::size_t body_start,
                       std::size_t body_end) {
        const Header h = parse_header(header_tokens);
        switch (h.kind) {
            case Kind::algebra: parse_algebra(h, body_start, body_end); break;
            case Kind::form: parse_form(h, body_start, body_end); break;
            case Kind::cobracket: parse_cobracket(h, body_start, body_end); break;
            case Kind::rmatrix: parse_rmatrix(h, body_start, body_end); break;
            case Kind::rep: parse_rep(h, body_start, body_end); break;
            case Kind::morphism: parse_morphism(h, body_start, body_end); break;
            case Kind::task: parse_task(h, body_start, body_end); break;
        }
        doc_.order.push_back({h.kind, h.name});
    }

    void expect_refs(const Header& h, std::initializer_list<const char*> connectors) {
        if (h.refs.size() != connectors.size()) {
            fail(h.at, std::string(kind_name(h.kind)) + " header takes " +
                           std::to_string(connectors.size()) + " reference(s)");
        }
        std::size_t i = 0;
        for (const char* conn : connectors) {
            if (h.refs[i].first != conn)
                fail(h.at, std::string("expected '") + conn + "' reference at position " +
                               std::to_string(i + 1));
            ++i;
        }
    }

    // --- scalars and combos -------------------------------------------------

    Rational parse_rational_token(const Token& t) {
        const auto value = parse_rational(t.text);
        if (!value) fail(t, "expected a rational literal p or p/q");
        return *value;
    }

    static bool looks_numeric(const std::string& s) {
        return !s.empty() && (is_digit(s[0]) || (s[0] == '-' && s.size() > 1));
    }

    Eigen::Index label_index(const LieAlgebra& g, const Token& t) {
        for (std::size_t i = 0; i < g.basis.size(); ++i)
            if (g.basis[i] == t.text) return static_cast<Eigen::Index>(i);
        fail(t, "unknown basis label '" + t.text + "' in algebra '" + g.name + "'");
    }

    /// combo := [rational] label ('+' [rational] label)*
    VectorQ parse_combo(const std::vector<Token>& tokens, std::size_t p, const LieAlgebra& g) {
        VectorQ v = VectorQ::Zero(g.dim());
        bool first = true;
        while (p < tokens.size()) {
            if (!first) {
                if (tokens[p].text != "+") fail(tokens[p], "expected '+'");
                ++p;
                if (p >= tokens.size()) fail(tokens.back(), "expected a term after '+'");
            }
            first = false;
            Rational coeff(1);
            if (looks_numeric(tokens[p].text)) {
                coeff = parse_rational_token(tokens[p]);
                ++p;
                if (p >= tokens.size()) fail(tokens.back(), "expected a basis label");
            }
            v(label_index(g, tokens[p])) += coeff;
            ++p;
        }
        if (first) fail(tokens.back(), "expected at least one term");
        return v;
    }

    // --- sections -----------------------------------------------------------

    void parse_algebra(const Header& h, std::size_t body_start, std::size_t body_end) {
        expect_refs(h, {});
        check_unique(h, doc_.algebras.count(h.name) > 0);
        LieAlgebra g;
        g.name = h.name;
        std::vector<std::vector<bool>> pair_seen;
        bool basis_seen = false;
        for (std::size_t li = body_start; li < body_end; ++li) {
            const std::vector<Token>& t = lines_[li];
            if (t[0].text == "basis") {
                if (basis_seen) fail(t[0], "duplicate basis line");
                basis_seen = true;
                if (t.size() < 2) fail(t[0], "basis line needs at least one label");
                for (std::size_t p = 1; p < t.size(); ++p) {
                    if (!is_label(t[p].text)) fail(t[p], "expected a basis label");
                    if (std::find(g.basis.begin(), g.basis.end(), t[p].text) != g.basis.end())
                        fail(t[p], "duplicate basis label '" + t[p].text + "'");
                    g.basis.push_back(t[p].text);
                }
                const Eigen::Index n = g.dim();
                g.c = Tensor3Q::Zero(n, n, n);
                pair_seen.assign(static_cast<std::size_t>(n),
                                 std::vector<bool>(static_cast<std::size_t>(n), false));
            } else if (t[0].text == "bracket") {
                if (!basis_seen) fail(t[0], "bracket before basis line");
                if (t.size() < 4 || t[3].text != "=")
                    fail(t[0], "expected 'bracket <label> <label> = <combo>'");
                const Eigen::Index i = label_index(g, t[1]);
                const Eigen::Index j = label_index(g, t[2]);
                const VectorQ value = parse_combo(t, 4, g);
                if (i == j) {
                    if (!value.isZero(Rational(0)))
                        fail(t[1], "antisymmetry conflict: bracket of a label with itself "
                                   "must vanish");
                    continue;
                }
                VectorQ oriented = (i < j) ? value : VectorQ(-value);
                const Eigen::Index a = std::min(i, j), b = std::max(i, j);
                if (pair_seen[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) {
                    VectorQ existing(g.dim());
                    for (Eigen::Index k = 0; k < g.dim(); ++k) existing(k) = g.c(a, b, k);
                    if (!same_vector(existing, oriented))
                        fail(t[1], "antisymmetry conflict: pair (" + t[1].text + ", " +
                                       t[2].text + ") already defined with a different value");
                    continue;
                }
                pair_seen[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
                LieAlgebra& target = g;
                set_bracket(target, a, b, oriented);
            } else {
                fail(t[0], "expected 'basis' or 'bracket' in an algebra section");
            }
        }
        if (!basis_seen) fail(h.at, "algebra section needs a basis line");
        doc_.algebras.emplace(h.name, std::move(g));
    }

    void parse_form(const Header& h, std::size_t body_start, std::size_t body_end) {
        expect_refs(h, {"on"});
        check_unique(h, doc_.forms.count(h.name) > 0);
        const LieAlgebra& g = resolve_algebra(h, h.refs[0].second);
        const Eigen::Index n = g.dim();
        MatrixQ gram = MatrixQ::Zero(n, n);
        std::vector<std::vector<bool>> seen(static_cast<std::size_t>(n),
                                            std::vector<bool>(static_cast<std::size_t>(n), false));
        for (std::size_t li = body_start; li < body_end; ++li) {
            const std::vector<Token>& t = lines_[li];
            if (t[0].text != "entry" || t.size() != 5 || t[3].text != "=")
                fail(t[0], "expected 'entry <label> <label> = <rational>'");
            const Eigen::Index i = label_index(g, t[1]);
            const Eigen::Index j = label_index(g, t[2]);
            const Rational value = parse_rational_token(t[4]);
            if (i == j) {
                if (!value.is_zero())
                    fail(t[1], "antisymmetry conflict: diagonal entry must be zero");
                continue;
            }
            const Rational oriented = (i < j) ? value : -value;
            const Eigen::Index a = std::min(i, j), b = std::max(i, j);
            if (seen[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) {
                if (gram(a, b) != oriented)
                    fail(t[1], "antisymmetry conflict: entry (" + t[1].text + ", " + t[2].text +
                                   ") already defined with a different value");
                continue;
            }
            seen[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
            gram(a, b) = oriented;
            gram(b, a) = -oriented;
        }
        doc_.forms.emplace(h.name, SkewForm{g, std::move(gram)});
    }

    void parse_cobracket(const Header& h, std::size_t body_start, std::size_t body_end) {
        expect_refs(h, {"on"});
        check_unique(h, doc_.cobrackets.count(h.name) > 0);
        const LieAlgebra& g = resolve_algebra(h, h.refs[0].second);
        Cobracket gamma = zero_cobracket(g);
        std::vector<bool> seen(static_cast<std::size_t>(g.dim()), false);
        for (std::size_t li = body_start; li < body_end; ++li) {
            const std::vector<Token>& t = lines_[li];
            if (t[0].text != "gamma" || t.size() < 3 || t[2].text != "=")
                fail(t[0], "expected 'gamma <label> = <wedge combo>'");
            const Eigen::Index i = label_index(g, t[1]);
            if (seen[static_cast<std::size_t>(i)])
                fail(t[1], "duplicate gamma line for '" + t[1].text + "'");
            seen[static_cast<std::size_t>(i)] = true;
            std::size_t p = 3;
            bool first = true;
            while (p < t.size()) {
                if (!first) {
                    if (t[p].text != "+") fail(t[p], "expected '+'");
                    ++p;
                }
                first = false;
                Rational coeff(1);
                if (looks_numeric(t[p].text)) {
                    coeff = parse_rational_token(t[p]);
                    ++p;
                }
                if (p + 2 >= t.size() || t[p + 1].text != "^")
                    fail(t[p], "expected a wedge term '<label> ^ <label>'");
                const Eigen::Index j = label_index(g, t[p]);
                const Eigen::Index k = label_index(g, t[p + 2]);
                add_wedge(gamma, i, j, k, coeff);
                p += 3;
            }
            if (first) fail(t[2], "expected at least one wedge term");
        }
        doc_.cobrackets.emplace(h.name, std::move(gamma));
    }

    void parse_rmatrix(const Header& h, std::size_t body_start, std::size_t body_end) {
        expect_refs(h, {"on"});
        check_unique(h, doc_.rmatrices.count(h.name) > 0);
        const LieAlgebra& g = resolve_algebra(h, h.refs[0].second);
        RMatrix r{g, MatrixQ::Zero(g.dim(), g.dim())};
        bool seen = false;
        for (std::size_t li = body_start; li < body_end; ++li) {
            const std::vector<Token>& t = lines_[li];
            if (t[0].text != "r" || t.size() < 2 || t[1].text != "=")
                fail(t[0], "expected 'r = <tensor combo>'");
            if (seen) fail(t[0], "duplicate r line");
            seen = true;
            std::size_t p = 2;
            bool first = true;
            while (p < t.size()) {
                if (!first) {
                    if (t[p].text != "+") fail(t[p], "expected '+'");
                    ++p;
                }
                first = false;
                Rational coeff(1);
                if (looks_numeric(t[p].text)) {
                    coeff = parse_rational_token(t[p]);
                    ++p;
                }
                if (p + 2 >= t.size() || (t[p + 1].text != "*" && t[p + 1].text != "^"))
                    fail(t[p], "expected a tensor term '<label> * <label>' or "
                               "'<label> ^ <label>'");
                const Eigen::Index i = label_index(g, t[p]);
                const Eigen::Index j = label_index(g, t[p + 2]);
                r.coeffs(i, j) += coeff;
                if (t[p + 1].text == "^") r.coeffs(j, i) -= coeff;
                p += 3;
            }
            if (first) fail(t[1], "expected at least one tensor term");
        }
        doc_.rmatrices.emplace(h.name, std::move(r));
    }

    void parse_rep(const Header& h, std::size_t body_start, std::size_t body_end) {
        expect_refs(h, {"of", "on"});
        check_unique(h, doc_.reps.count(h.name) > 0);
        const LieAlgebra& acting = resolve_algebra(h, h.refs[0].second);
        const LieAlgebra& module = resolve_algebra(h, h.refs[1].second);
        RepSection section;
        section.name = h.name;
        section.acting = h.refs[0].second;
        section.module = h.refs[1].second;
        section.module_labels = module.basis;
        section.rep.algebra = acting;
        section.rep.module_dim = module.dim();
        section.rep.matrices.assign(static_cast<std::size_t>(acting.dim()),
                                    MatrixQ::Zero(module.dim(), module.dim()));
        std::vector<std::vector<bool>> seen(
            static_cast<std::size_t>(acting.dim()),
            std::vector<bool>(static_cast<std::size_t>(module.dim()), false));
        for (std::size_t li = body_start; li < body_end; ++li) {
            const std::vector<Token>& t = lines_[li];
            if (t[0].text != "act" || t.size() < 6 || t[2].text != ":" || t[4].text != "->")
                fail(t[0], "expected 'act <acting label> : <module label> -> <combo>'");
            const Eigen::Index x = label_index(acting, t[1]);
            const Eigen::Index u = label_index(module, t[3]);
            if (seen[static_cast<std::size_t>(x)][static_cast<std::size_t>(u)])
                fail(t[1], "duplicate act line for (" + t[1].text + ", " + t[3].text + ")");
            seen[static_cast<std::size_t>(x)][static_cast<std::size_t>(u)] = true;
            section.rep.matrices[static_cast<std::size_t>(x)].col(u) = parse_combo(t, 5, module);
        }
        doc_.reps.emplace(h.name, std::move(section));
    }

    void parse_morphism(const Header& h, std::size_t body_start, std::size_t body_end) {
        expect_refs(h, {"of", "on"});
        check_unique(h, doc_.morphisms.count(h.name) > 0);
        const LieAlgebra& source = resolve_algebra(h, h.refs[0].second);
        const LieAlgebra& target = resolve_algebra(h, h.refs[1].second);
        MorphismSection section;
        section.name = h.name;
        section.source = h.refs[0].second;
        section.target = h.refs[1].second;
        section.source_labels = source.basis;
        section.target_labels = target.basis;
        section.map = MatrixQ::Zero(target.dim(), source.dim());
        std::vector<bool> seen(static_cast<std::size_t>(source.dim()), false);
        for (std::size_t li = body_start; li < body_end; ++li) {
            const std::vector<Token>& t = lines_[li];
            if (t[0].text != "map" || t.size() < 4 || t[2].text != "->")
                fail(t[0], "expected 'map <source label> -> <combo>'");
            const Eigen::Index u = label_index(source, t[1]);
            if (seen[static_cast<std::size_t>(u)])
                fail(t[1], "duplicate map line for '" + t[1].text + "'");
            seen[static_cast<std::size_t>(u)] = true;
            section.map.col(u) = parse_combo(t, 3, target);
        }
        doc_.morphisms.emplace(h.name, std::move(section));
    }

    void parse_task(const Header& h, std::size_t body_start, std::size_t body_end) {
        expect_refs(h, {});
        check_unique(h, doc_.tasks.count(h.name) > 0);
        Task task;
        task.name = h.name;
        for (std::size_t li = body_start; li < body_end; ++li) {
            const std::vector<Token>& t = lines_[li];
            TaskLine line;
            line.line = t[0].line;
            std::size_t p = 0;
            if (t[p].text == "run") {
                line.expect = false;
            } else if (t[p].text == "expect") {
                line.expect = true;
            } else {
                fail(t[p], "expected 'run' or 'expect'");
            }
            ++p;
            if (p < t.size() && t[p].text == "not") {
                line.negate = true;
                ++p;
            }
            if (p >= t.size()) fail(t.back(), "expected a command");
            if (!is_command(t[p].text)) fail(t[p], "unknown command '" + t[p].text + "'");
            line.command = t[p].text;
            ++p;
            for (; p < t.size(); ++p) {
                if (!is_label(t[p].text)) fail(t[p], "expected a name");
                line.args.push_back(t[p].text);
            }
            task.lines.push_back(std::move(line));
        }
        doc_.tasks.emplace(h.name, std::move(task));
    }
};

} // namespace

bool is_command(const std::string& name) {
    static const std::vector<std::string> commands = {
        "validate", "frobenius", "cocycle",  "bialgebra", "double",
        "classify", "induce",    "assemble", "report"};
    return std::find(commands.begin(), commands.end(), name) != commands.end();
}

const char* kind_name(Kind k) {
    switch (k) {
        case Kind::algebra: return "algebra";
        case Kind::form: return "form";
        case Kind::cobracket: return "cobracket";
        case Kind::rmatrix: return "rmatrix";
        case Kind::rep: return "rep";
        case Kind::morphism: return "morphism";
        case Kind::task: return "task";
    }
    return "?";
}

Document parse_workspace(std::string_view text) { return Parser(text).parse(); }

} // namespace qfla::ws
