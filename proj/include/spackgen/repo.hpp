#pragma once

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "spackgen/recipe.hpp"

namespace spackgen {

struct TreeMap {
    std::vector<std::string> entries;           // repository-relative, sorted, no ".."
    std::vector<std::string> overflow_markers;  // per-directory and global truncation notes
    std::string render() const;
};

// Distilled view of one repository: everything the generation prompt and the
// retrieval queries need, with the evidence lines that produced each hint.
struct RepoMetadata {
    std::string package_name;
    std::string build_system = "cmake";
    std::set<std::string> dependency_hints;  // normalized, lowercase
    std::set<std::string> build_options;     // lowercase raw names plus stripped variant forms
    std::set<std::string> feature_hints;
    std::vector<std::pair<std::string, std::string>> language_requirements;  // (language, standard)
    VersionDecl version_info;
    TreeMap tree;
    std::vector<std::pair<std::string, std::string>> raw_fragments;  // (path, excerpt)
};

enum class DistillMode { rule_based, llm_assisted };

struct DistilledMetadata {
    std::string text;
    int token_estimate = 0;
    DistillMode source = DistillMode::rule_based;
};

struct AnalyzerOptions {
    int tree_max_depth = 4;
    int tree_max_entries = 400;
    int per_dir_cap = 64;
    int max_build_files = 32;
    std::optional<VersionDecl> version_override;  // from the version sidecar
    std::string package_name_override;
};

// Scans the repository's CMake listfiles and top-level docs. Throws
// NoBuildSystemError when no CMakeLists.txt is found, IoError on unreadable
// paths.
RepoMetadata extract_metadata(const std::filesystem::path& repo_root,
                              const AnalyzerOptions& options = {});

TreeMap map_tree(const std::filesystem::path& repo_root, int max_depth, int max_entries,
                 int per_dir_cap = 64);

// Deterministic key/value outline of the metadata, bounded by char_budget.
DistilledMetadata distill_rule_based(const RepoMetadata& meta, int char_budget);

// find_package / pkg-config name -> ecosystem package name. Returns an empty
// string for names that are not packages (OpenMP, Threads); otherwise the
// alias-table entry or the lowercased input.
std::string normalize_dependency_name(std::string_view cmake_name);

// "CabanaPD_ENABLE_HDF5" -> "hdf5" (project prefix and enable/with/use/build
// prefixes stripped, test/benchmark names canonicalized). Empty result means
// nothing remains after stripping.
std::string strip_option_name(std::string_view option, std::string_view project_name);

// Version sidecar: JSON file {"version": ..., "url": ..., "sha256": ...}.
VersionDecl load_version_sidecar(const std::filesystem::path& path);

}  // namespace spackgen
