#include <sstream>

#include "spackgen/recipe.hpp"
#include "spackgen/util.hpp"

namespace spackgen {
namespace {

std::string quote_py(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '\\': out += "\\\\"; break;
            case '"': out += "\\\""; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default: out.push_back(c);
        }
    }
    out.push_back('"');
    return out;
}

std::string value_repr(const ArgValue& v) {
    switch (v.kind) {
        case ArgValue::Kind::string: return quote_py(v.text);
        case ArgValue::Kind::boolean: return v.flag ? "True" : "False";
        case ArgValue::Kind::none: return "None";
        case ArgValue::Kind::number: return v.text;
        case ArgValue::Kind::string_list: {
            std::string out = "(";
            for (size_t i = 0; i < v.items.size(); ++i) {
                if (i) out += ", ";
                out += quote_py(v.items[i]);
            }
            if (v.items.size() == 1) out += ",";
            out += ")";
            return out;
        }
        case ArgValue::Kind::opaque: return v.text;
    }
    return v.text;
}

std::string directive_text(const Directive& d) {
    if (d.kind == Directive::Kind::assignment)
        return d.call + " = " + value_repr(d.args.empty() ? ArgValue{} : d.args[0].value);
    std::string out = d.call + "(";
    for (size_t i = 0; i < d.args.size(); ++i) {
        if (i) out += ", ";
        if (!d.args[i].name.empty()) out += d.args[i].name + "=";
        out += value_repr(d.args[i].value);
    }
    out += ")";
    return out;
}

std::string rtrim(const std::string& s) {
    size_t e = s.size();
    while (e > 0 && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(0, e);
}

}  // namespace

std::string serialize_recipe(const Recipe& r) {
    std::ostringstream out;
    for (const auto& l : r.prefix_lines) out << l << "\n";
    if (!r.prefix_lines.empty() && !trim(r.prefix_lines.back()).empty()) out << "\n";

    out << "class " << r.class_name;
    if (!r.base_classes.empty()) out << "(" << join(r.base_classes, ", ") << ")";
    out << ":\n";
    if (!r.docstring.empty()) {
        const char* delim = r.docstring.find("\"\"\"") == std::string::npos ? "\"\"\"" : "'''";
        out << "    " << delim << r.docstring << delim << "\n";
    }
    out << "\n";

    std::string open_condition;
    for (const auto& d : r.directives) {
        if (d.block_condition != open_condition) {
            open_condition = d.block_condition;
            if (!open_condition.empty())
                out << "    with when(" << quote_py(open_condition) << "):\n";
        }
        if (d.kind == Directive::Kind::opaque) {
            for (const auto& l : d.raw_lines) out << l << "\n";
            continue;
        }
        out << (d.block_condition.empty() ? "    " : "        ") << directive_text(d) << "\n";
    }

    for (const auto& m : r.methods) {
        out << "\n    def " << m.name << "(" << m.signature << "):\n";
        for (const auto& l : m.body_lines) out << l << "\n";
    }
    return out.str();
}

bool directive_identical(const Recipe& a, const Recipe& b) {
    if (a.class_name != b.class_name || a.base_classes != b.base_classes) return false;
    if (a.docstring != b.docstring) return false;
    if (a.directives.size() != b.directives.size()) return false;
    for (size_t i = 0; i < a.directives.size(); ++i)
        if (!a.directives[i].same_content(b.directives[i])) return false;
    if (a.methods.size() != b.methods.size()) return false;
    for (size_t i = 0; i < a.methods.size(); ++i) {
        const auto& ma = a.methods[i];
        const auto& mb = b.methods[i];
        if (ma.name != mb.name || ma.signature != mb.signature) return false;
        if (ma.body_lines.size() != mb.body_lines.size()) return false;
        for (size_t k = 0; k < ma.body_lines.size(); ++k)
            if (rtrim(ma.body_lines[k]) != rtrim(mb.body_lines[k])) return false;
    }
    return true;
}

std::vector<Dependency> extract_dependencies(const Recipe& r,
                                             const std::set<std::string>& class_inherent) {
    std::set<std::string> inherent;
    for (const auto& n : class_inherent) inherent.insert(to_lower(n));
    std::vector<Dependency> out;
    for (const auto& d : r.dependencies)
        if (!inherent.count(to_lower(d.name))) out.push_back(d);
    return out;
}

}  // namespace spackgen
