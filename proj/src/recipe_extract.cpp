#include <cctype>

#include "spackgen/recipe.hpp"
#include "spackgen/util.hpp"

// Static extraction of configuration argument keys from method bodies.
// The scan is lenient by design: method bodies are outside the directive
// grammar, and a key either appears as a string literal or is skipped.

namespace spackgen {
namespace {

// Reads a python string literal starting at the quote; returns false when the
// literal is unterminated. `out` receives the decoded content.
bool read_string_at(const std::string& text, size_t& pos, std::string& out) {
    char quote = text[pos];
    ++pos;
    out.clear();
    while (pos < text.size()) {
        char c = text[pos];
        if (c == '\\' && pos + 1 < text.size()) {
            out.push_back(text[pos + 1]);
            pos += 2;
            continue;
        }
        if (c == quote) {
            ++pos;
            return true;
        }
        if (c == '\n') return false;
        out.push_back(c);
        ++pos;
    }
    return false;
}

void scan_define_calls(const std::string& body, ConfigKeySet& keys) {
    static const std::string names[] = {"define_from_variant", "define"};
    for (const auto& name : names) {
        size_t pos = 0;
        while ((pos = body.find(name, pos)) != std::string::npos) {
            size_t start = pos;
            pos += name.size();
            if (start == 0 || body[start - 1] != '.') continue;
            if (pos < body.size() &&
                (std::isalnum(static_cast<unsigned char>(body[pos])) || body[pos] == '_'))
                continue;  // longer identifier (e.g. "define" inside "define_from_variant")
            size_t i = pos;
            while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i;
            if (i >= body.size() || body[i] != '(') continue;
            ++i;
            while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i;
            if (i < body.size() && (body[i] == '"' || body[i] == '\'')) {
                std::string key;
                size_t p = i;
                if (read_string_at(body, p, key)) {
                    std::string k = trim(key);
                    if (!k.empty() && k.find(' ') == std::string::npos)
                        keys.keys.insert(k);
                    else
                        keys.skipped_dynamic++;
                } else {
                    keys.skipped_dynamic++;
                }
            } else {
                keys.skipped_dynamic++;  // dynamic key expression
            }
        }
    }
}

void scan_dash_d_literals(const std::string& body, ConfigKeySet& keys) {
    for (size_t i = 0; i < body.size(); ++i) {
        if (body[i] != '"' && body[i] != '\'') continue;
        std::string content;
        size_t p = i;
        if (!read_string_at(body, p, content)) continue;
        i = p - 1;
        if (!starts_with(content, "-D")) continue;
        size_t k = 2;
        size_t kb = k;
        while (k < content.size() &&
               (std::isalnum(static_cast<unsigned char>(content[k])) || content[k] == '_'))
            ++k;
        if (k == kb) continue;
        if (k < content.size() && (content[k] == '=' || content[k] == ':'))
            keys.keys.insert(content.substr(kb, k - kb));
    }
}

bool returns_argument_list(const MethodDef& m) {
    if (ends_with(m.name, "_args")) return true;
    for (const auto& l : m.body_lines) {
        std::string t = trim(l);
        if (starts_with(t, "return [") || starts_with(t, "return[")) return true;
    }
    return false;
}

}  // namespace

ConfigKeySet extract_config_keys(const Recipe& r) {
    ConfigKeySet keys;
    for (const auto& m : r.methods) {
        std::string body = join(m.body_lines, "\n");
        scan_define_calls(body, keys);
        if (returns_argument_list(m)) scan_dash_d_literals(body, keys);
    }
    return keys;
}

}  // namespace spackgen
