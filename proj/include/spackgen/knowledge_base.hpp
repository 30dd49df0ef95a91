#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "spackgen/recipe.hpp"
#include "spackgen/repo.hpp"

namespace spackgen {

enum class Strategy { none, similar, random, random_same_build_system, embedding };

std::string strategy_name(Strategy s);
Strategy strategy_from_name(const std::string& name);

struct PackageNode {
    std::string name;
    std::set<std::string> build_systems;
    std::set<std::string> dependencies;  // dependency names from the parsed recipe
    std::set<std::string> variants;
    std::string recipe_text;
    Recipe recipe;
};

struct IngestEntry {
    std::string name;
    std::string source;
    std::set<std::string> build_systems;
};

struct IngestReport {
    int added = 0;
    std::vector<std::pair<std::string, std::string>> skipped;   // (name, error)
    std::vector<std::pair<std::string, std::string>> dangling;  // (package, missing dep)
    std::vector<std::string> class_name_mismatches;
};

struct AffinityWeights {
    double w_dep = 0.6;
    double w_opt = 0.4;
};

struct AffinityScore {
    std::string candidate;
    double score = 0.0;
    int dep_overlap = 0;
    int opt_overlap = 0;
    AffinityWeights weights;
};

struct ReferenceItem {
    std::string package;
    std::string text;           // full recipe or joined chunks
    std::string role_preamble;  // how the prompt introduces this reference
};

struct ReferenceBundle {
    Strategy strategy = Strategy::none;
    std::vector<ReferenceItem> items;
    std::set<std::string> exclusions;
    bool insufficient = false;  // fewer eligible candidates than requested
};

// Reference preamble lines used in assembled prompts.
extern const char* kSimilarPreamble;
extern const char* kRandomPreamble;
extern const char* kEmbeddingPreamble;

// Structure-aware recipe excerpt. `text` is a contiguous region of the
// source; `context` carries the class header line so the chunk reads
// standalone when rendered.
struct RecipeChunk {
    std::string package;
    enum class Kind { variants, dependencies, method_override, header } kind;
    std::string context;
    std::string text;
    std::vector<float> vector;  // filled by the embedding index
    std::string rendered() const { return context.empty() ? text : context + "\n" + text; }
};

std::string chunk_kind_name(RecipeChunk::Kind k);

// Throws ParseError when the recipe does not parse.
std::vector<RecipeChunk> chunk_recipe(const std::string& recipe_text);

struct FeatureCard {
    std::string package;
    std::string text;
};

FeatureCard make_feature_card(const PackageNode& node);

// In-memory package store backed by the corpus directory + manifest format.
// Ingestion is exclusive; retrieval after ingestion is concurrent-read safe.
class KnowledgeBase {
public:
    IngestReport ingest(const std::vector<IngestEntry>& entries);

    // Corpus format: manifest.json {"packages": [{"name","file","build_systems"}]}
    // with recipe files next to the manifest.
    static std::pair<KnowledgeBase, IngestReport> load(const std::filesystem::path& manifest_path);

    size_t size() const { return nodes_.size(); }
    bool empty() const { return nodes_.empty(); }
    const PackageNode* find(const std::string& name) const;
    std::vector<const PackageNode*> nodes() const;  // sorted by name
    std::uint64_t content_hash() const;

    AffinityScore affinity(const RepoMetadata& target, const PackageNode& candidate,
                           const AffinityWeights& weights = {}) const;

    // Top-count candidates sharing the target's build system, ranked by
    // affinity score (ties lexicographic). The target itself is excluded by
    // exact and substring name match.
    ReferenceBundle retrieve_similar(const RepoMetadata& target, int count,
                                     const AffinityWeights& weights = {}) const;

    ReferenceBundle retrieve_random(const RepoMetadata& target, int count,
                                    bool same_build_system, std::uint32_t rng_seed) const;

    // Query in the external graph-database dialect, for deployments that keep
    // the corpus in such a store instead of this embedded one.
    std::string render_graph_query(const RepoMetadata& target, int count,
                                   const AffinityWeights& weights = {}) const;

private:
    static bool excluded_by_name(const std::string& candidate, const std::string& target);
    std::map<std::string, PackageNode> nodes_;  // ordered for deterministic iteration
};

}  // namespace spackgen
