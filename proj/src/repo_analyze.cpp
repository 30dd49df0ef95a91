#include <algorithm>
#include <map>

#include <json.hpp>

#include "spackgen/cmake_scan.hpp"
#include "spackgen/errors.hpp"
#include "spackgen/repo.hpp"
#include "spackgen/util.hpp"

namespace spackgen {

namespace fs = std::filesystem;

namespace {

// find_package/pkg-config names that map onto a differently-named package,
// or onto no package at all (empty string: handled via compiler/runtime).
const std::map<std::string, std::string, std::less<>>& alias_table() {
    static const std::map<std::string, std::string, std::less<>> table = {
        {"gtest", "googletest"},
        {"googletest", "googletest"},
        {"nlohmann_json", "nlohmann-json"},
        {"python", "python"},
        {"python3", "python"},
        {"pythoninterp", "python"},
        {"pythonlibs", "python"},
        {"mpi", "mpi"},
        {"openmp", ""},        // compiler feature, not a package
        {"threads", ""},       // toolchain feature
        {"pkgconfig", ""},
        {"cuda", "cuda"},
        {"cudatoolkit", "cuda"},
        {"hip", "hip"},
        {"eigen3", "eigen"},
        {"zlib", "zlib"},
        {"curl", "curl"},
        {"openssl", "openssl"},
        {"boost", "boost"},
        {"blas", "blas"},
        {"lapack", "lapack"},
        {"gsl", "gsl"},
        {"catch2", "catch2"},
        {"benchmark", "benchmark"},
        {"doxygen", ""},       // docs tooling, not a build dependency
    };
    return table;
}

std::string language_hint(std::string_view lang_arg) {
    std::string l = to_lower(lang_arg);
    if (l == "c") return "c";
    if (l == "cxx" || l == "c++") return "cxx";
    if (l == "fortran") return "fortran";
    if (l == "cuda") return "cuda";
    if (l == "hip") return "hip";
    return "";
}

struct FeatureRule {
    std::string needle;  // matched case-insensitively against option names
    std::string feature;
};

const std::vector<FeatureRule>& option_feature_rules() {
    static const std::vector<FeatureRule> rules = {
        {"benchmark", "benchmarks"}, {"test", "tests"},   {"cuda", "cuda"},
        {"rocm", "rocm"},            {"hip", "rocm"},     {"openmp", "openmp"},
        {"mpi", "mpi"},              {"python", "python"}, {"fortran", "fortran"},
    };
    return rules;
}

bool is_probably_binary(const std::string& content) {
    return content.find('\0') != std::string::npos;
}

}  // namespace

std::string normalize_dependency_name(std::string_view cmake_name) {
    std::string lower = to_lower(cmake_name);
    if (auto it = alias_table().find(lower); it != alias_table().end()) return it->second;
    return lower;
}

std::string strip_option_name(std::string_view option, std::string_view project_name) {
    std::string s = to_lower(option);
    std::string proj = to_lower(project_name);
    auto strip_prefix = [&](std::string_view p) {
        if (!p.empty() && starts_with(s, p)) {
            s = s.substr(p.size());
            if (starts_with(s, "_") || starts_with(s, "-")) s = s.substr(1);
            return true;
        }
        return false;
    };
    if (!proj.empty()) {
        strip_prefix(proj);
        std::string packed = proj;
        packed.erase(std::remove(packed.begin(), packed.end(), '-'), packed.end());
        strip_prefix(packed);
    }
    for (const char* p : {"enable", "with", "use", "build"})
        if (strip_prefix(p)) break;
    if (s == "testing" || s == "tests" || s == "test") return "tests";
    if (s == "benchmark" || s == "benchmarks") return "benchmarks";
    if (s == "examples" || s == "example") return "examples";
    return s;
}

std::string TreeMap::render() const {
    std::string out;
    for (const auto& e : entries) {
        out += e;
        out += '\n';
    }
    for (const auto& m : overflow_markers) {
        out += m;
        out += '\n';
    }
    return out;
}

TreeMap map_tree(const fs::path& repo_root, int max_depth, int max_entries, int per_dir_cap) {
    TreeMap tree;
    if (!fs::exists(repo_root)) throw IoError("no such directory: " + repo_root.string());

    struct Frame {
        fs::path dir;
        std::string rel;
        int depth;
    };
    std::vector<Frame> stack{{repo_root, "", 0}};
    bool truncated = false;

    while (!stack.empty() && !truncated) {
        Frame frame = stack.back();
        stack.pop_back();

        std::vector<fs::directory_entry> children;
        std::error_code ec;
        for (fs::directory_iterator it(frame.dir, ec), end; !ec && it != end;
             it.increment(ec)) {
            const auto& entry = *it;
            std::string name = entry.path().filename().string();
            if (!name.empty() && name[0] == '.') continue;  // VCS and tool state
            children.push_back(entry);
        }
        std::sort(children.begin(), children.end(),
                  [](const fs::directory_entry& a, const fs::directory_entry& b) {
                      return a.path().filename().string() < b.path().filename().string();
                  });

        int emitted = 0;
        std::vector<Frame> subdirs;
        for (const auto& child : children) {
            if (emitted >= per_dir_cap) {
                tree.overflow_markers.push_back(frame.rel + "/: +" +
                                                std::to_string(children.size() - emitted) +
                                                " more entries");
                break;
            }
            if ((int)tree.entries.size() >= max_entries) {
                truncated = true;
                break;
            }
            std::string name = child.path().filename().string();
            std::string rel = frame.rel.empty() ? name : frame.rel + "/" + name;
            std::error_code tec;
            bool is_dir = child.is_directory(tec) && !tec;
            bool is_link = child.is_symlink(tec) && !tec;
            tree.entries.push_back(is_dir ? rel + "/" : rel);
            ++emitted;
            // symlinked directories are listed but never followed
            if (is_dir && !is_link && frame.depth + 1 < max_depth)
                subdirs.push_back({child.path(), rel, frame.depth + 1});
        }
        // push in reverse so lexicographically first is processed first
        for (auto it = subdirs.rbegin(); it != subdirs.rend(); ++it) stack.push_back(*it);
    }
    if (truncated)
        tree.overflow_markers.push_back("(truncated at " + std::to_string(max_entries) +
                                        " entries)");
    std::sort(tree.entries.begin(), tree.entries.end());
    return tree;
}

VersionDecl load_version_sidecar(const fs::path& path) {
    nlohmann::json j = nlohmann::json::parse(read_file(path), nullptr, false);
    if (j.is_discarded()) throw IoError("invalid version sidecar: " + path.string());
    VersionDecl v;
    v.version_string = j.value("version", "");
    if (j.contains("url")) v.source_url = j["url"].get<std::string>();
    if (j.contains("sha256")) v.checksum = j["sha256"].get<std::string>();
    else if (j.contains("checksum")) v.checksum = j["checksum"].get<std::string>();
    return v;
}

RepoMetadata extract_metadata(const fs::path& repo_root, const AnalyzerOptions& options) {
    if (!fs::exists(repo_root)) throw IoError("no such directory: " + repo_root.string());

    // Collect CMake listfiles: top-level first, then discovered ones, capped.
    std::vector<fs::path> build_files;
    fs::path top = repo_root / "CMakeLists.txt";
    if (fs::exists(top)) build_files.push_back(top);
    std::vector<fs::path> discovered;
    std::error_code ec;
    for (fs::recursive_directory_iterator it(repo_root, ec), end; !ec && it != end;
         it.increment(ec)) {
        if (it.depth() >= 4) {
            it.disable_recursion_pending();
            continue;
        }
        std::string name = it->path().filename().string();
        if (!name.empty() && name[0] == '.' && it->is_directory()) {
            it.disable_recursion_pending();
            continue;
        }
        if (it->is_regular_file() &&
            (name == "CMakeLists.txt" || ends_with(name, ".cmake")) && it->path() != top)
            discovered.push_back(it->path());
    }
    std::sort(discovered.begin(), discovered.end());
    for (const auto& p : discovered) {
        if ((int)build_files.size() >= options.max_build_files) break;
        build_files.push_back(p);
    }
    if (build_files.empty())
        throw NoBuildSystemError("no CMakeLists.txt found under " + repo_root.string());

    RepoMetadata meta;
    meta.build_system = "cmake";
    meta.dependency_hints.insert("cmake");

    std::string project_name;
    std::string project_version;

    for (const auto& file : build_files) {
        std::string content = read_file(file);
        if (is_probably_binary(content)) continue;
        std::string rel = fs::relative(file, repo_root, ec).string();
        auto commands = scan_cmake(content);
        for (const auto& cmd : commands) {
            bool interesting = false;
            if (cmd.name == "project" && !cmd.args.empty()) {
                interesting = true;
                if (project_name.empty()) project_name = cmd.args[0];
                for (size_t i = 1; i < cmd.args.size(); ++i) {
                    if (cmd.args[i] == "VERSION" && i + 1 < cmd.args.size() &&
                        project_version.empty())
                        project_version = cmd.args[i + 1];
                    if (cmd.args[i] == "LANGUAGES") {
                        for (size_t k = i + 1; k < cmd.args.size(); ++k) {
                            std::string hint = language_hint(cmd.args[k]);
                            if (hint.empty()) break;
                            meta.dependency_hints.insert(hint);
                            if (hint == "cuda") meta.feature_hints.insert("cuda");
                            if (hint == "hip") meta.feature_hints.insert("rocm");
                            if (hint == "fortran") meta.feature_hints.insert("fortran");
                        }
                    }
                }
            } else if (cmd.name == "enable_language" && !cmd.args.empty()) {
                interesting = true;
                for (const auto& arg : cmd.args) {
                    std::string hint = language_hint(arg);
                    if (hint.empty()) continue;
                    meta.dependency_hints.insert(hint);
                    if (hint == "cuda") meta.feature_hints.insert("cuda");
                    if (hint == "hip") meta.feature_hints.insert("rocm");
                    if (hint == "fortran") meta.feature_hints.insert("fortran");
                }
            } else if (cmd.name == "find_package" && !cmd.args.empty()) {
                interesting = true;
                std::string normalized = normalize_dependency_name(cmd.args[0]);
                if (!normalized.empty()) meta.dependency_hints.insert(normalized);
                std::string lower = to_lower(cmd.args[0]);
                if (lower == "mpi") meta.feature_hints.insert("mpi");
                if (lower == "openmp") meta.feature_hints.insert("openmp");
                if (starts_with(lower, "python")) meta.feature_hints.insert("python");
                if (lower == "cuda" || lower == "cudatoolkit")
                    meta.feature_hints.insert("cuda");
                if (lower == "hip") meta.feature_hints.insert("rocm");
            } else if ((cmd.name == "pkg_check_modules" || cmd.name == "pkg_search_module") &&
                       cmd.args.size() >= 2) {
                interesting = true;
                for (size_t i = 1; i < cmd.args.size(); ++i) {
                    const std::string& a = cmd.args[i];
                    if (a == "REQUIRED" || a == "QUIET" || a == "IMPORTED_TARGET" ||
                        a == "GLOBAL" || a == "NO_CMAKE_PATH" || a == "NO_CMAKE_ENVIRONMENT_PATH")
                        continue;
                    // module spec may carry a version expression: "foo >= 1.2"
                    auto [name, rest] = split_spec_name(a);
                    (void)rest;
                    if (name.empty()) continue;
                    std::string normalized = normalize_dependency_name(name);
                    if (!normalized.empty()) meta.dependency_hints.insert(normalized);
                }
            } else if (cmd.name == "option" && !cmd.args.empty()) {
                interesting = true;
                meta.build_options.insert(to_lower(cmd.args[0]));
                std::string stripped = strip_option_name(cmd.args[0], project_name);
                if (!stripped.empty()) meta.build_options.insert(stripped);
                for (const auto& rule : option_feature_rules())
                    if (contains_ci(cmd.args[0], rule.needle))
                        meta.feature_hints.insert(rule.feature);
            } else if (cmd.name == "set" && cmd.args.size() >= 4) {
                bool is_cache = std::find(cmd.args.begin(), cmd.args.end(), "CACHE") !=
                                cmd.args.end();
                bool is_bool = std::find(cmd.args.begin(), cmd.args.end(), "BOOL") !=
                               cmd.args.end();
                if (is_cache && is_bool) {
                    interesting = true;
                    meta.build_options.insert(to_lower(cmd.args[0]));
                    std::string stripped = strip_option_name(cmd.args[0], project_name);
                    if (!stripped.empty()) meta.build_options.insert(stripped);
                    for (const auto& rule : option_feature_rules())
                        if (contains_ci(cmd.args[0], rule.needle))
                            meta.feature_hints.insert(rule.feature);
                }
            }
            if (cmd.name == "set" && cmd.args.size() >= 2) {
                const std::string& var = cmd.args[0];
                if (var == "CMAKE_CXX_STANDARD") {
                    interesting = true;
                    meta.language_requirements.emplace_back("cxx", cmd.args[1]);
                    meta.dependency_hints.insert("cxx");
                } else if (var == "CMAKE_C_STANDARD") {
                    interesting = true;
                    meta.language_requirements.emplace_back("c", cmd.args[1]);
                    meta.dependency_hints.insert("c");
                }
            }
            if (cmd.name == "cmake_minimum_required") interesting = true;
            if (interesting) meta.raw_fragments.emplace_back(rel, cmd.raw);
        }
    }

    // Top-level docs contribute evidence only.
    for (const char* doc : {"README.md", "README.rst", "README.txt", "README"}) {
        fs::path p = repo_root / doc;
        if (fs::exists(p)) {
            std::string excerpt = read_file(p).substr(0, 2048);
            if (!is_probably_binary(excerpt)) meta.raw_fragments.emplace_back(doc, excerpt);
            break;
        }
    }

    meta.package_name = !options.package_name_override.empty()
                            ? options.package_name_override
                            : spackify_name(project_name.empty()
                                                ? repo_root.filename().string()
                                                : project_name);
    if (options.version_override) {
        meta.version_info = *options.version_override;
    } else {
        meta.version_info.version_string = project_version;
    }
    meta.tree = map_tree(repo_root, options.tree_max_depth, options.tree_max_entries,
                         options.per_dir_cap);
    return meta;
}

DistilledMetadata distill_rule_based(const RepoMetadata& meta, int char_budget) {
    std::string text;
    text += "package: " + meta.package_name + "\n";
    text += "build system: " + meta.build_system + "\n";
    if (!meta.version_info.version_string.empty())
        text += "version: " + meta.version_info.version_string + "\n";
    if (!meta.language_requirements.empty()) {
        text += "languages:";
        for (const auto& [lang, std_] : meta.language_requirements)
            text += " " + lang + "(" + std_ + ")";
        text += "\n";
    }
    if (!meta.dependency_hints.empty())
        text += "dependencies: " + join(meta.dependency_hints, ", ") + "\n";
    if (!meta.build_options.empty())
        text += "options: " + join(meta.build_options, ", ") + "\n";
    if (!meta.feature_hints.empty())
        text += "features: " + join(meta.feature_hints, ", ") + "\n";
    std::set<std::string> paths;
    for (const auto& [path, _] : meta.raw_fragments) paths.insert(path);
    if (!paths.empty()) text += "build files: " + join(paths, ", ") + "\n";

    if ((int)text.size() > char_budget) {
        text.resize(static_cast<size_t>(std::max(char_budget - 16, 0)));
        text += "\n[truncated]\n";
    }
    DistilledMetadata out;
    out.text = std::move(text);
    out.token_estimate = std::max<int>(1, (int)out.text.size() / 4);
    out.source = DistillMode::rule_based;
    return out;
}

}  // namespace spackgen
