#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "spackgen/gateway.hpp"
#include "spackgen/knowledge_base.hpp"

namespace spackgen {

double cosine_similarity(std::span<const float> a, std::span<const float> b);

struct IndexItem {
    std::string package;
    std::string kind;  // "card" or a chunk kind
    std::string text;  // rendered text that was embedded
    std::vector<float> vec;
};

// Vector index over feature cards and recipe chunks. Built once per corpus;
// persisted under a cache key derived from the corpus content hash and the
// embedder id, so rebuilding an unchanged corpus issues no embedding calls.
class EmbeddingIndex {
public:
    static EmbeddingIndex build(const KnowledgeBase& kb, Embedder& embedder,
                                const std::filesystem::path& cache_dir);

    size_t size() const { return items_.size(); }
    size_t dim() const { return items_.empty() ? 0 : items_.front().vec.size(); }
    bool loaded_from_cache() const { return cache_hit_; }
    const std::vector<IndexItem>& items() const { return items_; }

    // "deps: a, b; build: cmake; flags: f, g" — fixed field order keeps the
    // query cache-stable.
    static std::string query_string(const RepoMetadata& target);

    // Packages ranked by max cosine similarity over their cards/chunks; the
    // bundle carries the best chunks of each retrieved package.
    ReferenceBundle retrieve(const RepoMetadata& target, Embedder& embedder, int top_k,
                             int chunks_per_package = 2, int char_budget = 4000) const;

private:
    std::vector<IndexItem> items_;
    bool cache_hit_ = false;
};

}  // namespace spackgen
