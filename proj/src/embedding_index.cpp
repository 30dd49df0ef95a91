#include "spackgen/embedding_index.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <json.hpp>

#include "spackgen/errors.hpp"
#include "spackgen/util.hpp"

namespace spackgen {

using nlohmann::json;

double cosine_similarity(std::span<const float> a, std::span<const float> b) {
    if (a.size() != b.size() || a.empty()) return 0.0;
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        dot += double(a[i]) * b[i];
        na += double(a[i]) * a[i];
        nb += double(b[i]) * b[i];
    }
    if (na == 0.0 || nb == 0.0) return 0.0;
    return dot / (std::sqrt(na) * std::sqrt(nb));
}

EmbeddingIndex EmbeddingIndex::build(const KnowledgeBase& kb, Embedder& embedder,
                                     const std::filesystem::path& cache_dir) {
    std::string cache_key =
        "embed-index-" + hex64(kb.content_hash()) + "-" + embedder.id() + ".json";
    std::filesystem::path cache_file = cache_dir / cache_key;

    EmbeddingIndex index;
    if (std::filesystem::exists(cache_file)) {
        json j = json::parse(read_file(cache_file), nullptr, false);
        if (!j.is_discarded() && j.value("corpus_hash", "") == hex64(kb.content_hash()) &&
            j.value("embedder", "") == embedder.id()) {
            for (const auto& item : j["items"]) {
                IndexItem it;
                it.package = item.at("package").get<std::string>();
                it.kind = item.at("kind").get<std::string>();
                it.text = item.at("text").get<std::string>();
                it.vec = item.at("vec").get<std::vector<float>>();
                index.items_.push_back(std::move(it));
            }
            index.cache_hit_ = true;
            return index;
        }
    }

    std::vector<IndexItem> items;
    std::vector<std::string> texts;
    for (const PackageNode* node : kb.nodes()) {
        FeatureCard card = make_feature_card(*node);
        items.push_back({node->name, "card", card.text, {}});
        texts.push_back(card.text);
        try {
            for (auto& chunk : chunk_recipe(node->recipe_text)) {
                items.push_back({node->name, chunk_kind_name(chunk.kind), chunk.rendered(), {}});
                texts.push_back(items.back().text);
            }
        } catch (const ParseError&) {
            // the store only holds parseable recipes; defensive skip
        }
    }
    auto vectors = embedder.embed(texts);
    if (vectors.size() != texts.size())
        throw GatewayError("embedder returned wrong vector count");
    size_t dim = vectors.empty() ? 0 : vectors.front().size();
    for (size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != dim)
            throw DimensionMismatchError("embedder changed vector width within one build");
        items[i].vec = std::move(vectors[i]);
    }
    index.items_ = std::move(items);

    json out;
    out["corpus_hash"] = hex64(kb.content_hash());
    out["embedder"] = embedder.id();
    out["dim"] = dim;
    out["items"] = json::array();
    for (const auto& it : index.items_)
        out["items"].push_back(
            {{"package", it.package}, {"kind", it.kind}, {"text", it.text}, {"vec", it.vec}});
    std::error_code ec;
    std::filesystem::create_directories(cache_dir, ec);
    write_file(cache_file, out.dump());
    return index;
}

std::string EmbeddingIndex::query_string(const RepoMetadata& target) {
    std::string q = "deps: " + join(target.dependency_hints, ", ");
    q += "; build: " + target.build_system;
    q += "; flags: " + join(target.feature_hints, ", ");
    return q;
}

ReferenceBundle EmbeddingIndex::retrieve(const RepoMetadata& target, Embedder& embedder,
                                         int top_k, int chunks_per_package,
                                         int char_budget) const {
    if (items_.empty()) throw EmptyStoreError("embedding index is empty");
    auto query_vec = embedder.embed({query_string(target)});
    if (query_vec.empty() || query_vec[0].size() != dim())
        throw DimensionMismatchError("query embedding width differs from the index");
    std::span<const float> qv(query_vec[0]);

    std::string target_lower = to_lower(target.package_name);
    auto excluded = [&](const std::string& name) {
        if (target_lower.empty()) return false;
        std::string n = to_lower(name);
        return n == target_lower || n.find(target_lower) != std::string::npos;
    };

    struct Ranked {
        std::string package;
        double best = -2.0;
    };
    std::map<std::string, double> best_by_package;
    ReferenceBundle bundle;
    bundle.strategy = Strategy::embedding;
    for (const auto& item : items_) {
        if (excluded(item.package)) {
            bundle.exclusions.insert(item.package);
            continue;
        }
        double sim = cosine_similarity(item.vec, qv);
        auto [it, inserted] = best_by_package.emplace(item.package, sim);
        if (!inserted && sim > it->second) it->second = sim;
    }
    std::vector<Ranked> ranked;
    for (const auto& [name, sim] : best_by_package) ranked.push_back({name, sim});
    std::sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) {
        if (a.best != b.best) return a.best > b.best;
        return a.package < b.package;
    });

    for (const auto& r : ranked) {
        if ((int)bundle.items.size() >= top_k) break;
        // representative chunks for this package, most similar first
        std::vector<std::pair<double, const IndexItem*>> chunks;
        for (const auto& item : items_) {
            if (item.package != r.package || item.kind == "card") continue;
            chunks.emplace_back(cosine_similarity(item.vec, qv), &item);
        }
        std::sort(chunks.begin(), chunks.end(),
                  [](const auto& a, const auto& b) { return a.first > b.first; });
        std::string text;
        int used = 0;
        for (const auto& [sim, item] : chunks) {
            if (used >= chunks_per_package) break;
            if (!text.empty()) text += "\n\n";
            text += item->text;
            ++used;
        }
        if (text.empty()) {  // no chunks: fall back to the feature card
            for (const auto& item : items_)
                if (item.package == r.package && item.kind == "card") text = item.text;
        }
        if ((int)text.size() > char_budget) {
            text.resize(static_cast<size_t>(std::max(char_budget - 14, 0)));
            text += "\n[truncated]";
        }
        bundle.items.push_back({r.package, text, kEmbeddingPreamble});
    }
    bundle.insufficient = (int)bundle.items.size() < top_k;
    return bundle;
}

}  // namespace spackgen
