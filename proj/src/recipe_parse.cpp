#include <cctype>

#include "spackgen/errors.hpp"
#include "spackgen/recipe.hpp"
#include "spackgen/util.hpp"

// Parser for the recipe directive dialect: a class header, directive calls
// with positional/keyword literal arguments, when() blocks, and method
// bodies captured verbatim. Anything outside the dialect at class scope is
// preserved as an opaque block and counted in the diagnostics.

namespace spackgen {
namespace {

int indent_of(const std::string& line) {
    int col = 0;
    for (char c : line) {
        if (c == ' ')
            ++col;
        else if (c == '\t')
            col += 8 - col % 8;
        else
            break;
    }
    return col;
}

bool is_blank(const std::string& line) {
    return trim(line).empty();
}

bool is_comment(const std::string& line) {
    std::string t = trim(line);
    return !t.empty() && t[0] == '#';
}

bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

struct Token {
    enum class Type { name, str, num, punct, end };
    Type type = Type::end;
    std::string text;      // decoded string value / identifier / number / punct
    bool fstring = false;  // string carried an f prefix
    size_t offset = 0;     // into the statement text
    size_t length = 0;
};

// Tokenizes one logical statement. Comments were already stripped while the
// statement was being assembled.
class Lexer {
public:
    Lexer(std::string_view text, int line) : text_(text), line_(line) {}

    std::vector<Token> run() {
        std::vector<Token> toks;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
                continue;
            }
            if (is_ident_start(c)) {
                size_t start = pos_;
                while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
                std::string word(text_.substr(start, pos_ - start));
                // string prefix (r"", f"", b"", rb"", ...)
                if (pos_ < text_.size() && (text_[pos_] == '"' || text_[pos_] == '\'') &&
                    word.size() <= 2 && is_string_prefix(word)) {
                    bool raw = contains_ci(word, "r");
                    bool fstr = contains_ci(word, "f");
                    toks.push_back(read_string(start, raw, fstr));
                    continue;
                }
                toks.push_back({Token::Type::name, word, false, start, pos_ - start});
                continue;
            }
            if (c == '"' || c == '\'') {
                toks.push_back(read_string(pos_, false, false));
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                size_t start = pos_;
                while (pos_ < text_.size() &&
                       (is_ident_char(text_[pos_]) || text_[pos_] == '.')) {
                    ++pos_;
                }
                toks.push_back({Token::Type::num, std::string(text_.substr(start, pos_ - start)),
                                false, start, pos_ - start});
                continue;
            }
            // two-char operators that matter for disambiguation
            size_t start = pos_;
            std::string p(1, c);
            ++pos_;
            if (pos_ < text_.size()) {
                char n = text_[pos_];
                if ((c == '=' && n == '=') || (c == '!' && n == '=') || (c == '<' && n == '=') ||
                    (c == '>' && n == '=') || (c == '*' && n == '*') || (c == '/' && n == '/') ||
                    (c == '-' && n == '>') || (c == ':' && n == '=')) {
                    p.push_back(n);
                    ++pos_;
                }
            }
            toks.push_back({Token::Type::punct, p, false, start, pos_ - start});
        }
        toks.push_back({Token::Type::end, "", false, text_.size(), 0});
        return toks;
    }

private:
    static bool is_string_prefix(const std::string& w) {
        for (char c : w) {
            char l = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
            if (l != 'r' && l != 'b' && l != 'f' && l != 'u') return false;
        }
        return !w.empty();
    }

    Token read_string(size_t token_start, bool raw, bool fstr) {
        char quote = text_[pos_];
        bool triple = pos_ + 2 < text_.size() && text_[pos_ + 1] == quote && text_[pos_ + 2] == quote;
        pos_ += triple ? 3 : 1;
        std::string value;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (!raw && c == '\\') {
                if (pos_ + 1 >= text_.size())
                    throw ParseError("unterminated string literal", line_);
                char e = text_[pos_ + 1];
                switch (e) {
                    case 'n': value.push_back('\n'); break;
                    case 't': value.push_back('\t'); break;
                    case 'r': value.push_back('\r'); break;
                    case '\\': value.push_back('\\'); break;
                    case '\'': value.push_back('\''); break;
                    case '"': value.push_back('"'); break;
                    default:
                        value.push_back('\\');
                        value.push_back(e);
                }
                pos_ += 2;
                continue;
            }
            if (c == quote) {
                if (!triple) {
                    ++pos_;
                    return {Token::Type::str, value, fstr, token_start, pos_ - token_start};
                }
                if (pos_ + 2 < text_.size() && text_[pos_ + 1] == quote && text_[pos_ + 2] == quote) {
                    pos_ += 3;
                    return {Token::Type::str, value, fstr, token_start, pos_ - token_start};
                }
            }
            value.push_back(c);
            ++pos_;
        }
        throw ParseError("unterminated string literal", line_);
    }

    std::string_view text_;
    int line_;
    size_t pos_ = 0;
};

class RecipeParser {
public:
    explicit RecipeParser(std::string_view source) : lines_(split_lines(source)) {
        recipe_.raw_text = std::string(source);
    }

    Recipe run() {
        size_t li = 0;
        bool saw_class = false;
        while (li < lines_.size()) {
            const std::string& line = lines_[li];
            if (is_blank(line) || is_comment(line)) {
                if (!saw_class) recipe_.prefix_lines.push_back(line);
                ++li;
                continue;
            }
            std::string t = trim(line);
            if (starts_with(t, "class ") || t == "class") {
                if (saw_class) throw ParseError("multiple classes in one recipe file", int(li) + 1);
                saw_class = true;
                li = parse_class(li);
                continue;
            }
            if (!saw_class) {
                // imports, module constants, __all__, ... kept verbatim
                size_t end_li;
                extract_logical(li, end_li);
                for (size_t k = li; k <= end_li; ++k) recipe_.prefix_lines.push_back(lines_[k]);
                li = end_li + 1;
                continue;
            }
            recipe_.diagnostics.notes.push_back("ignored module-level statement after class at line " +
                                                std::to_string(li + 1));
            size_t end_li;
            extract_logical(li, end_li);
            li = end_li + 1;
        }
        if (!saw_class) throw ParseError("no recipe class found", 1);
        return std::move(recipe_);
    }

private:
    // Assembles the logical statement starting at line `li`: joins lines while
    // bracket depth is open, a backslash continuation is pending, or a triple
    // string is unterminated. Strips comments. Newlines become spaces.
    std::string extract_logical(size_t li, size_t& end_li) {
        std::string out;
        int depth = 0;
        char quote = 0;
        bool triple = false;
        bool escape = false;
        size_t cur = li;
        while (cur < lines_.size()) {
            const std::string& line = lines_[cur];
            bool backslash_cont = false;
            for (size_t i = 0; i < line.size(); ++i) {
                char c = line[i];
                if (quote != 0) {
                    out.push_back(c);
                    if (escape) {
                        escape = false;
                        continue;
                    }
                    if (c == '\\') {
                        escape = true;
                        continue;
                    }
                    if (c == quote) {
                        if (!triple) {
                            quote = 0;
                        } else if (i + 2 < line.size() && line[i + 1] == quote &&
                                   line[i + 2] == quote) {
                            out.push_back(quote);
                            out.push_back(quote);
                            i += 2;
                            quote = 0;
                            triple = false;
                        } else if (i + 2 == line.size() && line[i + 1] == quote) {
                            // quote-quote at EOL: still inside unless next char closes
                            out.push_back(quote);
                            i += 1;
                        }
                    }
                    continue;
                }
                if (c == '#') break;  // comment to end of physical line
                if (c == '"' || c == '\'') {
                    quote = c;
                    triple = i + 2 < line.size() && line[i + 1] == c && line[i + 2] == c;
                    out.push_back(c);
                    if (triple) {
                        out.push_back(c);
                        out.push_back(c);
                        i += 2;
                    }
                    continue;
                }
                if (c == '(' || c == '[' || c == '{') ++depth;
                if (c == ')' || c == ']' || c == '}') --depth;
                if (c == '\\' && i + 1 == line.size()) {
                    backslash_cont = true;
                    break;
                }
                out.push_back(c);
            }
            escape = false;
            if (quote != 0 && !triple) throw ParseError("unterminated string literal", int(cur) + 1);
            if (depth <= 0 && quote == 0 && !backslash_cont) {
                end_li = cur;
                return out;
            }
            out.push_back(quote != 0 ? '\n' : ' ');
            ++cur;
        }
        if (quote != 0) throw ParseError("unterminated string literal", int(li) + 1);
        throw ParseError("unbalanced delimiters", int(li) + 1);
    }

    size_t parse_class(size_t li) {
        size_t header_end;
        std::string header = extract_logical(li, header_end);
        parse_class_header(header, int(li) + 1);
        recipe_.class_line = int(li) + 1;
        int class_indent = indent_of(lines_[li]);

        // locate class body
        size_t cur = header_end + 1;
        int body_indent = -1;
        while (cur < lines_.size()) {
            if (is_blank(lines_[cur]) || is_comment(lines_[cur])) {
                ++cur;
                continue;
            }
            body_indent = indent_of(lines_[cur]);
            break;
        }
        if (body_indent <= class_indent)
            throw ParseError("expected an indented class body", int(header_end) + 2);

        bool first_stmt = true;
        while (cur < lines_.size()) {
            const std::string& line = lines_[cur];
            if (is_blank(line) || is_comment(line)) {
                ++cur;
                continue;
            }
            int ind = indent_of(line);
            if (ind <= class_indent) break;  // class ends
            if (ind != body_indent)
                throw ParseError("unexpected indentation", int(cur) + 1);
            cur = parse_body_statement(cur, body_indent, "", first_stmt);
            first_stmt = false;
        }
        return cur;
    }

    void parse_class_header(const std::string& header, int line) {
        auto toks = Lexer(header, line).run();
        size_t i = 0;
        auto expect_name = [&](const char* what) -> std::string {
            if (toks[i].type != Token::Type::name)
                throw ParseError(std::string("expected ") + what + " in class header", line);
            return toks[i++].text;
        };
        if (expect_name("'class'") != "class")
            throw ParseError("expected 'class' keyword", line);
        recipe_.class_name = expect_name("class name");
        if (toks[i].type == Token::Type::punct && toks[i].text == "(") {
            ++i;
            while (toks[i].type != Token::Type::end) {
                if (toks[i].type == Token::Type::punct && toks[i].text == ")") {
                    ++i;
                    break;
                }
                std::string base = expect_name("base class name");
                while (toks[i].type == Token::Type::punct && toks[i].text == ".") {
                    ++i;
                    base += "." + expect_name("base class name");
                }
                recipe_.base_classes.push_back(base);
                if (toks[i].type == Token::Type::punct && toks[i].text == ",") ++i;
            }
        }
        if (!(toks[i].type == Token::Type::punct && toks[i].text == ":"))
            throw ParseError("malformed class header, missing ':'", line);
        if (toks[i + 1].type != Token::Type::end)
            throw ParseError("class body must start on its own line", line);

        bool has_build_system_base = false;
        for (const auto& b : recipe_.base_classes) {
            std::string last = b;
            if (auto p = last.rfind('.'); p != std::string::npos) last = last.substr(p + 1);
            if (ends_with(last, "Package")) has_build_system_base = true;
        }
        if (!has_build_system_base)
            throw ParseError("recipe class must inherit a build-system package class", line);
    }

    // Parses one class-scope statement starting at `li`; returns next line index.
    size_t parse_body_statement(size_t li, int stmt_indent, const std::string& block_condition,
                                bool first_stmt) {
        const std::string& line = lines_[li];
        std::string t = trim(line);

        if (starts_with(t, "def ")) return parse_method(li, stmt_indent);
        if (starts_with(t, "with ")) return parse_with(li, stmt_indent, block_condition);
        if (starts_with(t, "@") || starts_with(t, "for ") || starts_with(t, "if ") ||
            starts_with(t, "while ") || starts_with(t, "try") || starts_with(t, "class ") ||
            starts_with(t, "else") || starts_with(t, "elif ") || starts_with(t, "except")) {
            return capture_opaque(li, stmt_indent, block_condition);
        }

        size_t end_li;
        std::string stmt = extract_logical(li, end_li);
        auto toks = Lexer(stmt, int(li) + 1).run();

        if (first_stmt && toks[0].type == Token::Type::str && toks[1].type == Token::Type::end) {
            recipe_.docstring = toks[0].text;
            recipe_.docstring_end_line = int(end_li) + 1;
            return end_li + 1;
        }
        if (toks[0].type == Token::Type::name && toks[1].type == Token::Type::punct &&
            toks[1].text == "=" && toks[2].type != Token::Type::end) {
            Directive d;
            d.kind = Directive::Kind::assignment;
            d.call = toks[0].text;
            d.line = int(li) + 1;
            d.end_line = int(end_li) + 1;
            d.block_condition = block_condition;
            d.args.push_back({"", parse_value(toks, 2, toks.size() - 1, stmt)});
            recipe_.directives.push_back(std::move(d));
            return end_li + 1;
        }
        if (toks[0].type == Token::Type::name && toks[1].type == Token::Type::punct &&
            toks[1].text == "(") {
            size_t close = find_matching(toks, 1);
            if (toks[close + 1].type == Token::Type::end) {
                parse_directive_call(toks, stmt, int(li) + 1, int(end_li) + 1, block_condition);
                return end_li + 1;
            }
        }
        // outside the dialect: keep the raw lines
        return capture_opaque(li, stmt_indent, block_condition);
    }

    size_t parse_method(size_t li, int def_indent) {
        size_t header_end;
        std::string header = extract_logical(li, header_end);
        auto toks = Lexer(header, int(li) + 1).run();
        if (!(toks[0].type == Token::Type::name && toks[0].text == "def" &&
              toks[1].type == Token::Type::name && toks[2].type == Token::Type::punct &&
              toks[2].text == "("))
            throw ParseError("malformed method definition", int(li) + 1);
        size_t close = find_matching(toks, 2);
        MethodDef m;
        m.name = toks[1].text;
        size_t sig_begin = toks[2].offset + 1;
        size_t sig_end = toks[close].offset;
        m.signature = trim(std::string(header.substr(sig_begin, sig_end - sig_begin)));
        m.line = int(li) + 1;
        size_t cur = header_end + 1;
        while (cur < lines_.size()) {
            const std::string& l = lines_[cur];
            if (is_blank(l)) {
                m.body_lines.push_back(l);
                ++cur;
                continue;
            }
            if (indent_of(l) <= def_indent) break;
            m.body_lines.push_back(l);
            ++cur;
        }
        while (!m.body_lines.empty() && is_blank(m.body_lines.back())) m.body_lines.pop_back();
        m.end_line = int(cur);
        recipe_.methods.push_back(std::move(m));
        return cur;
    }

    size_t parse_with(size_t li, int stmt_indent, const std::string& outer_condition) {
        size_t header_end;
        std::string header = extract_logical(li, header_end);
        auto toks = Lexer(header, int(li) + 1).run();
        // with when("<cond>"):
        bool is_when = toks[0].type == Token::Type::name && toks[0].text == "with" &&
                       toks[1].type == Token::Type::name && toks[1].text == "when" &&
                       toks[2].type == Token::Type::punct && toks[2].text == "(" &&
                       toks[3].type == Token::Type::str && !toks[3].fstring &&
                       toks[4].type == Token::Type::punct && toks[4].text == ")" &&
                       toks[5].type == Token::Type::punct && toks[5].text == ":" &&
                       toks[6].type == Token::Type::end;
        if (!is_when) return capture_opaque(li, stmt_indent, outer_condition);

        std::string cond = normalize_constraint(toks[3].text);
        if (!outer_condition.empty()) cond = outer_condition + " and " + cond;

        size_t cur = header_end + 1;
        int inner_indent = -1;
        while (cur < lines_.size()) {
            const std::string& l = lines_[cur];
            if (is_blank(l) || is_comment(l)) {
                ++cur;
                continue;
            }
            int ind = indent_of(l);
            if (ind <= stmt_indent) break;
            if (inner_indent < 0) inner_indent = ind;
            if (ind != inner_indent) throw ParseError("unexpected indentation", int(cur) + 1);
            cur = parse_body_statement(cur, inner_indent, cond, false);
        }
        if (inner_indent < 0) throw ParseError("empty with-block", int(li) + 1);
        return cur;
    }

    size_t capture_opaque(size_t li, int stmt_indent, const std::string& block_condition) {
        Directive d;
        d.kind = Directive::Kind::opaque;
        d.line = int(li) + 1;
        d.block_condition = block_condition;
        size_t end_li;
        extract_logical(li, end_li);  // validates delimiters
        for (size_t k = li; k <= end_li; ++k) d.raw_lines.push_back(lines_[k]);
        size_t cur = end_li + 1;
        bool header_was_decorator = starts_with(trim(lines_[li]), "@");
        // trailing block body (deeper indent), plus the decorated statement itself
        while (cur < lines_.size()) {
            const std::string& l = lines_[cur];
            if (is_blank(l)) {
                d.raw_lines.push_back(l);
                ++cur;
                continue;
            }
            int ind = indent_of(l);
            if (ind > stmt_indent || (header_was_decorator && ind == stmt_indent)) {
                header_was_decorator = header_was_decorator && starts_with(trim(l), "@");
                d.raw_lines.push_back(l);
                ++cur;
                continue;
            }
            break;
        }
        while (!d.raw_lines.empty() && is_blank(d.raw_lines.back())) d.raw_lines.pop_back();
        d.end_line = int(cur);
        recipe_.diagnostics.opaque_directives++;
        recipe_.directives.push_back(std::move(d));
        return cur;
    }

    static size_t find_matching(const std::vector<Token>& toks, size_t open) {
        int depth = 0;
        for (size_t i = open; i < toks.size(); ++i) {
            if (toks[i].type != Token::Type::punct) continue;
            const std::string& p = toks[i].text;
            if (p == "(" || p == "[" || p == "{") ++depth;
            if (p == ")" || p == "]" || p == "}") {
                --depth;
                if (depth == 0) return i;
            }
        }
        return toks.size() - 1;  // the end token; callers treat as mismatch
    }

    ArgValue parse_value(const std::vector<Token>& toks, size_t begin, size_t end,
                         const std::string& stmt) {
        auto opaque_slice = [&](size_t b, size_t e) {
            size_t from = toks[b].offset;
            size_t to = toks[e - 1].offset + toks[e - 1].length;
            return ArgValue::make_opaque(collapse_ws(stmt.substr(from, to - from)));
        };
        if (begin >= end) return ArgValue::make_opaque("");
        size_t n = end - begin;
        const Token& f = toks[begin];
        if (f.type == Token::Type::str) {
            // adjacent literals concatenate; any f-string makes the value opaque
            std::string v;
            bool all_str = true, any_f = false;
            for (size_t i = begin; i < end; ++i) {
                if (toks[i].type != Token::Type::str) {
                    all_str = false;
                    break;
                }
                any_f = any_f || toks[i].fstring;
                v += toks[i].text;
            }
            if (all_str && !any_f) return ArgValue::make_string(v);
            return opaque_slice(begin, end);
        }
        if (n == 1 && f.type == Token::Type::name) {
            if (f.text == "True") return ArgValue::make_bool(true);
            if (f.text == "False") return ArgValue::make_bool(false);
            if (f.text == "None") {
                ArgValue v;
                v.kind = ArgValue::Kind::none;
                return v;
            }
        }
        if (n == 1 && f.type == Token::Type::num) {
            ArgValue v;
            v.kind = ArgValue::Kind::number;
            v.text = f.text;
            return v;
        }
        if (f.type == Token::Type::punct && (f.text == "(" || f.text == "[")) {
            size_t close = find_matching(toks, begin);
            if (close == end - 1) {
                ArgValue v;
                v.kind = ArgValue::Kind::string_list;
                bool ok = true;
                size_t i = begin + 1;
                while (i < close) {
                    if (toks[i].type == Token::Type::str && !toks[i].fstring) {
                        v.items.push_back(toks[i].text);
                        ++i;
                        if (i < close && toks[i].type == Token::Type::punct && toks[i].text == ",")
                            ++i;
                    } else {
                        ok = false;
                        break;
                    }
                }
                if (ok) return v;
            }
        }
        return opaque_slice(begin, end);
    }

    void parse_directive_call(const std::vector<Token>& toks, const std::string& stmt, int line,
                              int end_line, const std::string& block_condition) {
        Directive d;
        d.call = toks[0].text;
        d.line = line;
        d.end_line = end_line;
        d.block_condition = block_condition;
        d.kind = directive_kind(d.call);

        size_t close = find_matching(toks, 1);
        // split top-level commas
        size_t i = 2;
        while (i < close) {
            size_t arg_begin = i;
            int depth = 0;
            while (i < close) {
                if (toks[i].type == Token::Type::punct) {
                    const std::string& p = toks[i].text;
                    if (p == "(" || p == "[" || p == "{") ++depth;
                    if (p == ")" || p == "]" || p == "}") --depth;
                    if (p == "," && depth == 0) break;
                }
                ++i;
            }
            size_t arg_end = i;
            if (i < close) ++i;  // skip comma
            if (arg_begin == arg_end) continue;  // trailing comma

            DirectiveArg arg;
            size_t vb = arg_begin;
            if (toks[arg_begin].type == Token::Type::name && arg_begin + 1 < arg_end &&
                toks[arg_begin + 1].type == Token::Type::punct && toks[arg_begin + 1].text == "=") {
                arg.name = toks[arg_begin].text;
                vb = arg_begin + 2;
            }
            arg.value = parse_value(toks, vb, arg_end, stmt);
            d.args.push_back(std::move(arg));
        }
        derive_semantics(d);
        recipe_.directives.push_back(std::move(d));
    }

    static Directive::Kind directive_kind(const std::string& call) {
        if (call == "version") return Directive::Kind::version;
        if (call == "variant") return Directive::Kind::variant;
        if (call == "depends_on") return Directive::Kind::depends_on;
        if (call == "conflicts") return Directive::Kind::conflicts;
        return Directive::Kind::other;
    }

    const ArgValue* kwarg(const Directive& d, std::string_view name) const {
        for (const auto& a : d.args)
            if (a.name == name) return &a.value;
        return nullptr;
    }

    const ArgValue* positional(const Directive& d, size_t idx) const {
        size_t seen = 0;
        for (const auto& a : d.args) {
            if (!a.name.empty()) continue;
            if (seen == idx) return &a.value;
            ++seen;
        }
        return nullptr;
    }

    void derive_semantics(Directive& d) {
        auto first = positional(d, 0);
        auto first_is_string = first != nullptr && first->kind == ArgValue::Kind::string;
        switch (d.kind) {
            case Directive::Kind::version: {
                if (!first_is_string) return mark_opaque_semantics(d);
                VersionDecl v;
                v.version_string = first->text;
                if (v.version_string.empty()) return mark_opaque_semantics(d);
                if (auto* u = kwarg(d, "url"); u && u->kind == ArgValue::Kind::string)
                    v.source_url = u->text;
                for (const char* key : {"sha256", "md5", "checksum", "sha512"}) {
                    if (auto* c = kwarg(d, key); c && c->kind == ArgValue::Kind::string) {
                        v.checksum = c->text;
                        break;
                    }
                }
                recipe_.versions.push_back(std::move(v));
                break;
            }
            case Directive::Kind::variant: {
                if (!first_is_string || first->text.empty()) return mark_opaque_semantics(d);
                VariantDecl v;
                v.name = first->text;
                for (const auto& existing : recipe_.variants) {
                    if (existing.name == v.name) {
                        recipe_.diagnostics.duplicate_variants++;
                        recipe_.diagnostics.notes.push_back("duplicate variant '" + v.name +
                                                            "' at line " + std::to_string(d.line));
                        return;
                    }
                }
                if (auto* def = kwarg(d, "default")) v.default_value = *def;
                if (auto* desc = kwarg(d, "description");
                    desc && desc->kind == ArgValue::Kind::string)
                    v.description = desc->text;
                recipe_.variants.push_back(std::move(v));
                break;
            }
            case Directive::Kind::depends_on: {
                if (!first_is_string) return mark_opaque_semantics(d);
                auto [name, spec] = split_spec_name(first->text);
                if (name.empty()) return mark_opaque_semantics(d);
                Dependency dep;
                dep.name = name;
                dep.spec = normalize_constraint(spec);
                if (auto* w = kwarg(d, "when"); w && w->kind == ArgValue::Kind::string)
                    dep.condition = normalize_constraint(w->text);
                if (auto* t = kwarg(d, "type")) {
                    if (t->kind == ArgValue::Kind::string)
                        dep.types.insert(t->text);
                    else if (t->kind == ArgValue::Kind::string_list)
                        dep.types.insert(t->items.begin(), t->items.end());
                }
                dep.from_block = !d.block_condition.empty();
                recipe_.dependencies.push_back(std::move(dep));
                break;
            }
            case Directive::Kind::conflicts: {
                if (!first_is_string || first->text.empty()) return mark_opaque_semantics(d);
                ConflictDecl c;
                c.spec = normalize_constraint(first->text);
                if (auto* w = kwarg(d, "when"); w && w->kind == ArgValue::Kind::string)
                    c.when = normalize_constraint(w->text);
                recipe_.conflicts.push_back(std::move(c));
                break;
            }
            default:
                break;
        }
    }

    void mark_opaque_semantics(const Directive& d) {
        recipe_.diagnostics.opaque_directives++;
        recipe_.diagnostics.notes.push_back("directive '" + d.call + "' at line " +
                                            std::to_string(d.line) +
                                            " has a non-literal argument; excluded from model");
    }

    std::vector<std::string> lines_;
    Recipe recipe_;
};

}  // namespace

ArgValue ArgValue::make_string(std::string s) {
    ArgValue v;
    v.kind = Kind::string;
    v.text = std::move(s);
    return v;
}

ArgValue ArgValue::make_bool(bool b) {
    ArgValue v;
    v.kind = Kind::boolean;
    v.flag = b;
    return v;
}

ArgValue ArgValue::make_opaque(std::string raw) {
    ArgValue v;
    v.kind = Kind::opaque;
    v.text = std::move(raw);
    return v;
}

std::pair<std::string, std::string> split_spec_name(std::string_view spec) {
    std::string s = trim(spec);
    size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '.')
            ++i;
        else
            break;
    }
    return {s.substr(0, i), std::string(s.substr(i))};
}

std::string normalize_constraint(std::string_view s) {
    return collapse_ws(s);
}

Recipe parse_recipe(std::string_view source_text) {
    return RecipeParser(source_text).run();
}

}  // namespace spackgen
