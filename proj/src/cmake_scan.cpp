#include "spackgen/cmake_scan.hpp"

#include <cctype>

namespace spackgen {
namespace {

bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

struct Scanner {
    std::string_view text;
    size_t pos = 0;
    int line = 1;

    bool done() const { return pos >= text.size(); }
    char peek(size_t off = 0) const {
        return pos + off < text.size() ? text[pos + off] : '\0';
    }
    void advance() {
        if (text[pos] == '\n') ++line;
        ++pos;
    }

    // "#[=*[" opens a bracket comment; "[=*[" opens a bracket argument.
    // Returns the number of '=' signs, or -1 when not a bracket opener.
    int bracket_open_level(size_t at) const {
        if (at >= text.size() || text[at] != '[') return -1;
        size_t i = at + 1;
        int eq = 0;
        while (i < text.size() && text[i] == '=') {
            ++eq;
            ++i;
        }
        if (i < text.size() && text[i] == '[') return eq;
        return -1;
    }

    void skip_bracket(int level) {
        // positioned at the initial '['; consume to the matching close
        advance();
        for (int i = 0; i < level; ++i) advance();
        advance();  // second '['
        std::string close = "]";
        close.append(static_cast<size_t>(level), '=');
        close.push_back(']');
        while (!done()) {
            if (text.compare(pos, close.size(), close) == 0) {
                for (size_t i = 0; i < close.size(); ++i) advance();
                return;
            }
            advance();
        }
    }

    void skip_line_comment() {
        while (!done() && text[pos] != '\n') advance();
    }

    void skip_noise() {
        while (!done()) {
            char c = text[pos];
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
                continue;
            }
            if (c == '#') {
                int lvl = bracket_open_level(pos + 1);
                advance();
                if (lvl >= 0)
                    skip_bracket(lvl);
                else
                    skip_line_comment();
                continue;
            }
            break;
        }
    }
};

// Splits a raw argument region into tokens, resolving quotes and brackets.
std::vector<std::string> split_args(std::string_view region) {
    std::vector<std::string> args;
    std::string cur;
    bool have_cur = false;
    size_t i = 0;
    auto flush = [&] {
        if (have_cur) args.push_back(cur);
        cur.clear();
        have_cur = false;
    };
    while (i < region.size()) {
        char c = region[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            flush();
            ++i;
            continue;
        }
        if (c == '#') {  // comment to end of line inside the arg region
            flush();
            while (i < region.size() && region[i] != '\n') ++i;
            continue;
        }
        if (c == '"') {
            have_cur = true;
            ++i;
            while (i < region.size() && region[i] != '"') {
                if (region[i] == '\\' && i + 1 < region.size()) {
                    char e = region[i + 1];
                    if (e == 'n')
                        cur.push_back('\n');
                    else if (e == 't')
                        cur.push_back('\t');
                    else
                        cur.push_back(e);
                    i += 2;
                    continue;
                }
                cur.push_back(region[i]);
                ++i;
            }
            if (i < region.size()) ++i;  // closing quote
            continue;
        }
        if (c == '[') {
            // bracket argument [=*[ ... ]=*]
            size_t j = i + 1;
            int eq = 0;
            while (j < region.size() && region[j] == '=') {
                ++eq;
                ++j;
            }
            if (j < region.size() && region[j] == '[') {
                std::string close = "]" + std::string(static_cast<size_t>(eq), '=') + "]";
                size_t end = region.find(close, j + 1);
                have_cur = true;
                if (end == std::string_view::npos) {
                    cur.append(region.substr(j + 1));
                    i = region.size();
                } else {
                    cur.append(region.substr(j + 1, end - j - 1));
                    i = end + close.size();
                }
                continue;
            }
        }
        have_cur = true;
        cur.push_back(c);
        ++i;
    }
    flush();
    return args;
}

}  // namespace

std::vector<CMakeCommand> scan_cmake(std::string_view text) {
    std::vector<CMakeCommand> commands;
    Scanner s{text};
    while (true) {
        s.skip_noise();
        if (s.done()) break;
        if (!ident_start(s.text[s.pos])) {
            s.advance();
            continue;
        }
        size_t name_begin = s.pos;
        int cmd_line = s.line;
        while (!s.done() && ident_char(s.text[s.pos])) s.advance();
        std::string name(text.substr(name_begin, s.pos - name_begin));
        // optional whitespace between name and '('
        size_t probe = s.pos;
        while (probe < text.size() &&
               std::isspace(static_cast<unsigned char>(text[probe])) && text[probe] != '\n')
            ++probe;
        if (probe >= text.size() || text[probe] != '(') continue;  // not an invocation

        // consume to the matching ')', honoring quotes, brackets, comments
        s.pos = probe;
        int depth = 0;
        size_t args_begin = probe + 1;
        bool closed = false;
        while (!s.done()) {
            char c = s.text[s.pos];
            if (c == '"') {
                s.advance();
                while (!s.done() && s.text[s.pos] != '"') {
                    if (s.text[s.pos] == '\\') s.advance();
                    if (!s.done()) s.advance();
                }
                if (!s.done()) s.advance();
                continue;
            }
            if (c == '#') {
                int lvl = s.bracket_open_level(s.pos + 1);
                s.advance();
                if (lvl >= 0)
                    s.skip_bracket(lvl);
                else
                    s.skip_line_comment();
                continue;
            }
            if (c == '[') {
                int lvl = s.bracket_open_level(s.pos);
                if (lvl >= 0) {
                    s.skip_bracket(lvl);
                    continue;
                }
            }
            if (c == '(') ++depth;
            if (c == ')') {
                --depth;
                if (depth == 0) {
                    size_t args_end = s.pos;
                    s.advance();
                    CMakeCommand cmd;
                    for (char& nc : name)
                        nc = static_cast<char>(std::tolower(static_cast<unsigned char>(nc)));
                    cmd.name = name;
                    cmd.args = split_args(text.substr(args_begin, args_end - args_begin));
                    cmd.raw = std::string(text.substr(name_begin, s.pos - name_begin));
                    cmd.line = cmd_line;
                    commands.push_back(std::move(cmd));
                    closed = true;
                    break;
                }
            }
            s.advance();
        }
        if (!closed) break;  // unbalanced tail; lexical scan stops here
    }
    return commands;
}

}  // namespace spackgen
