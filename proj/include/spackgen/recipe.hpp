#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace spackgen {

// Parsed value of one directive argument. Anything outside the literal
// subset (string, boolean, number, None, tuple/list of strings) is kept
// verbatim as an opaque expression so serialization loses nothing.
struct ArgValue {
    enum class Kind { string, boolean, number, none, string_list, opaque };
    Kind kind = Kind::opaque;
    std::string text;                 // string payload, number text, or raw opaque text
    bool flag = false;                // boolean payload
    std::vector<std::string> items;   // string_list payload

    bool operator==(const ArgValue&) const = default;

    static ArgValue make_string(std::string s);
    static ArgValue make_bool(bool b);
    static ArgValue make_opaque(std::string raw);
};

struct DirectiveArg {
    std::string name;  // empty for positional
    ArgValue value;
    bool operator==(const DirectiveArg&) const = default;
};

struct Directive {
    enum class Kind { version, variant, depends_on, conflicts, other, assignment, opaque };
    Kind kind = Kind::other;
    std::string call;                 // call name, assigned attribute, or "" for opaque
    std::vector<DirectiveArg> args;   // assignment stores its RHS as one positional arg
    std::string block_condition;      // when() context the directive appeared under
    std::vector<std::string> raw_lines;  // opaque blocks only: source kept verbatim
    int line = 0;
    int end_line = 0;

    bool same_content(const Directive& o) const {
        return kind == o.kind && call == o.call && args == o.args &&
               block_condition == o.block_condition && raw_lines == o.raw_lines;
    }
};

struct MethodDef {
    std::string name;
    std::string signature;               // text inside "def name(...)" parentheses
    std::vector<std::string> body_lines; // verbatim, original indentation
    int line = 0;
    int end_line = 0;
};

struct VersionDecl {
    std::string version_string;
    std::optional<std::string> source_url;
    std::optional<std::string> checksum;
};

struct VariantDecl {
    std::string name;
    ArgValue default_value;  // boolean or string; opaque when dynamic
    std::string description;
};

// Dependency tuple: (name, spec, condition, types). Spec and condition are
// stored whitespace-normalized; types may be empty (ecosystem default).
struct Dependency {
    std::string name;
    std::string spec;
    std::string condition;
    std::set<std::string> types;
    bool from_block = false;  // declared inside a when() context

    bool operator==(const Dependency&) const = default;
};

struct ConflictDecl {
    std::string spec;
    std::string when;
};

struct ConfigKeySet {
    std::set<std::string> keys;
    int skipped_dynamic = 0;  // define()-style calls whose key is not a literal
};

struct ParseDiagnostics {
    int opaque_directives = 0;
    int duplicate_variants = 0;
    std::vector<std::string> notes;
};

struct Recipe {
    std::string class_name;
    std::vector<std::string> base_classes;
    int class_line = 0;          // 1-based line of the class header
    int docstring_end_line = 0;  // 1-based last docstring line, 0 when absent
    std::string docstring;
    std::vector<std::string> prefix_lines;  // module-level lines before the class, verbatim
    std::vector<Directive> directives;      // ordered class-scope directives
    std::vector<MethodDef> methods;

    // Views derived from `directives` during parsing.
    std::vector<VersionDecl> versions;
    std::vector<VariantDecl> variants;
    std::vector<Dependency> dependencies;
    std::vector<ConflictDecl> conflicts;

    ParseDiagnostics diagnostics;
    std::string raw_text;
};

// Parses recipe source into the directive model. Throws ParseError (with a
// line number) on text that is not valid in the directive dialect; never
// aborts on arbitrary byte input.
Recipe parse_recipe(std::string_view source_text);

// Canonical recipe text for a parsed model. parse(serialize(parse(t))) is
// directive-identical to parse(t).
std::string serialize_recipe(const Recipe& r);

// Structural equality: class header, directives, docstring, and methods.
// Raw text, line numbers, and module prefix lines are ignored.
bool directive_identical(const Recipe& a, const Recipe& b);

// Configuration argument keys from build-argument constructs: the first
// string argument of define()/define_from_variant() calls anywhere in method
// bodies, plus "-DKEY=" literals inside argument-list-returning methods.
ConfigKeySet extract_config_keys(const Recipe& r);

// recipe.dependencies minus entries whose name is in class_inherent;
// source order preserved.
std::vector<Dependency> extract_dependencies(const Recipe& r,
                                             const std::set<std::string>& class_inherent);

// "cmake@3.5:" -> {"cmake", "@3.5:"}; "mpi" -> {"mpi", ""}.
std::pair<std::string, std::string> split_spec_name(std::string_view spec);

// Trim + collapse internal whitespace, preserving case. Matching on specs
// and conditions uses exact equality of this form.
std::string normalize_constraint(std::string_view s);

}  // namespace spackgen
