#include "spackgen/knowledge_base.hpp"

#include <algorithm>
#include <random>

#include <fmt/format.h>
#include <json.hpp>

#include "spackgen/errors.hpp"
#include "spackgen/util.hpp"

namespace spackgen {

const char* kSimilarPreamble =
    "the recipe was found to be one of the most \"similar\" to the target package, based on "
    "the supplied metadata";
const char* kRandomPreamble =
    "this recipe was randomly selected. it will provide useful heuristics to you about spack "
    "packages.";
const char* kEmbeddingPreamble =
    "the following recipe excerpts were retrieved as the most relevant to the target package "
    "metadata";

std::string strategy_name(Strategy s) {
    switch (s) {
        case Strategy::none: return "none";
        case Strategy::similar: return "similar";
        case Strategy::random: return "random";
        case Strategy::random_same_build_system: return "random_same_build_system";
        case Strategy::embedding: return "embedding";
    }
    return "none";
}

Strategy strategy_from_name(const std::string& name) {
    if (name == "none") return Strategy::none;
    if (name == "similar") return Strategy::similar;
    if (name == "random") return Strategy::random;
    if (name == "random_same_build_system" || name == "random-same-build-system" ||
        name == "random_cmake")
        return Strategy::random_same_build_system;
    if (name == "embedding") return Strategy::embedding;
    throw Error("unknown retrieval strategy: " + name);
}

std::string chunk_kind_name(RecipeChunk::Kind k) {
    switch (k) {
        case RecipeChunk::Kind::variants: return "variants";
        case RecipeChunk::Kind::dependencies: return "dependencies";
        case RecipeChunk::Kind::method_override: return "method_override";
        case RecipeChunk::Kind::header: return "header";
    }
    return "header";
}

IngestReport KnowledgeBase::ingest(const std::vector<IngestEntry>& entries) {
    IngestReport report;
    for (const auto& entry : entries) {
        if (nodes_.count(entry.name))
            throw DuplicateNameError("package already in store: " + entry.name);
        PackageNode node;
        node.name = entry.name;
        node.build_systems = entry.build_systems;
        node.recipe_text = entry.source;
        try {
            node.recipe = parse_recipe(entry.source);
        } catch (const ParseError& e) {
            report.skipped.emplace_back(entry.name, e.what());
            continue;
        }
        for (const auto& d : node.recipe.dependencies) node.dependencies.insert(d.name);
        for (const auto& v : node.recipe.variants) node.variants.insert(v.name);
        // build systems implied by the base classes
        for (const auto& base : node.recipe.base_classes) {
            if (base == "CMakePackage") node.build_systems.insert("cmake");
            if (base == "AutotoolsPackage") node.build_systems.insert("autotools");
            if (base == "MakefilePackage") node.build_systems.insert("makefile");
            if (base == "PythonPackage") node.build_systems.insert("python");
            if (base == "MesonPackage") node.build_systems.insert("meson");
        }
        if (node.recipe.class_name != pascal_case(entry.name))
            report.class_name_mismatches.push_back(entry.name);
        nodes_.emplace(entry.name, std::move(node));
        report.added++;
    }
    for (const auto& [name, node] : nodes_) {
        for (const auto& dep : node.dependencies) {
            if (dep == "c" || dep == "cxx" || dep == "fortran") continue;  // language virtuals
            if (!nodes_.count(dep)) report.dangling.emplace_back(name, dep);
        }
    }
    return report;
}

std::pair<KnowledgeBase, IngestReport> KnowledgeBase::load(
    const std::filesystem::path& manifest_path) {
    nlohmann::json j = nlohmann::json::parse(read_file(manifest_path), nullptr, false);
    if (j.is_discarded() || !j.contains("packages"))
        throw IoError("invalid corpus manifest: " + manifest_path.string());
    std::vector<IngestEntry> entries;
    auto dir = manifest_path.parent_path();
    for (const auto& p : j["packages"]) {
        IngestEntry e;
        e.name = p.at("name").get<std::string>();
        e.source = read_file(dir / p.at("file").get<std::string>());
        if (p.contains("build_systems"))
            for (const auto& b : p["build_systems"]) e.build_systems.insert(b.get<std::string>());
        entries.push_back(std::move(e));
    }
    KnowledgeBase kb;
    IngestReport report = kb.ingest(entries);
    return {std::move(kb), std::move(report)};
}

const PackageNode* KnowledgeBase::find(const std::string& name) const {
    auto it = nodes_.find(name);
    return it == nodes_.end() ? nullptr : &it->second;
}

std::vector<const PackageNode*> KnowledgeBase::nodes() const {
    std::vector<const PackageNode*> out;
    out.reserve(nodes_.size());
    for (const auto& [_, node] : nodes_) out.push_back(&node);
    return out;
}

std::uint64_t KnowledgeBase::content_hash() const {
    std::uint64_t h = fnv1a("spackgen-store");
    for (const auto& [name, node] : nodes_) {
        h = fnv1a(name, h);
        h = fnv1a(node.recipe_text, h);
        for (const auto& b : node.build_systems) h = fnv1a(b, h);
    }
    return h;
}

AffinityScore KnowledgeBase::affinity(const RepoMetadata& target, const PackageNode& candidate,
                                      const AffinityWeights& weights) const {
    std::set<std::string> target_deps, target_opts, cand_deps, cand_opts;
    for (const auto& d : target.dependency_hints) target_deps.insert(to_lower(d));
    for (const auto& o : target.build_options) target_opts.insert(to_lower(o));
    for (const auto& d : candidate.dependencies) cand_deps.insert(to_lower(d));
    for (const auto& v : candidate.variants) cand_opts.insert(to_lower(v));

    AffinityScore s;
    s.candidate = candidate.name;
    s.weights = weights;
    for (const auto& d : target_deps) s.dep_overlap += (int)cand_deps.count(d);
    for (const auto& o : target_opts) s.opt_overlap += (int)cand_opts.count(o);
    s.score = weights.w_dep * s.dep_overlap + weights.w_opt * s.opt_overlap;
    return s;
}

bool KnowledgeBase::excluded_by_name(const std::string& candidate, const std::string& target) {
    if (target.empty()) return false;
    std::string c = to_lower(candidate), t = to_lower(target);
    return c == t || c.find(t) != std::string::npos;
}

ReferenceBundle KnowledgeBase::retrieve_similar(const RepoMetadata& target, int count,
                                                const AffinityWeights& weights) const {
    if (nodes_.empty()) throw EmptyStoreError("knowledge base is empty");
    ReferenceBundle bundle;
    bundle.strategy = Strategy::similar;

    std::vector<AffinityScore> scored;
    for (const auto& [name, node] : nodes_) {
        if (excluded_by_name(name, target.package_name)) {
            bundle.exclusions.insert(name);
            continue;
        }
        if (!node.build_systems.count(target.build_system)) continue;
        scored.push_back(affinity(target, node, weights));
    }
    std::sort(scored.begin(), scored.end(), [](const AffinityScore& a, const AffinityScore& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.candidate < b.candidate;
    });
    for (const auto& s : scored) {
        if ((int)bundle.items.size() >= count) break;
        const PackageNode* node = find(s.candidate);
        bundle.items.push_back({s.candidate, node->recipe_text, kSimilarPreamble});
    }
    bundle.insufficient = (int)bundle.items.size() < count;
    return bundle;
}

ReferenceBundle KnowledgeBase::retrieve_random(const RepoMetadata& target, int count,
                                               bool same_build_system,
                                               std::uint32_t rng_seed) const {
    if (nodes_.empty()) throw EmptyStoreError("knowledge base is empty");
    ReferenceBundle bundle;
    bundle.strategy = same_build_system ? Strategy::random_same_build_system : Strategy::random;

    std::vector<std::string> eligible;
    for (const auto& [name, node] : nodes_) {
        if (excluded_by_name(name, target.package_name)) {
            bundle.exclusions.insert(name);
            continue;
        }
        if (same_build_system && !node.build_systems.count(target.build_system)) continue;
        eligible.push_back(name);
    }
    // partial Fisher-Yates over the sorted name list; stable across platforms
    std::mt19937 rng(rng_seed);
    size_t take = std::min<size_t>(static_cast<size_t>(std::max(count, 0)), eligible.size());
    for (size_t i = 0; i < take; ++i) {
        size_t j = i + bounded_uniform(rng, (std::uint32_t)(eligible.size() - i));
        std::swap(eligible[i], eligible[j]);
        const PackageNode* node = find(eligible[i]);
        bundle.items.push_back({eligible[i], node->recipe_text, kRandomPreamble});
    }
    bundle.insufficient = (int)bundle.items.size() < count;
    return bundle;
}

std::string KnowledgeBase::render_graph_query(const RepoMetadata& target, int count,
                                              const AffinityWeights& weights) const {
    auto quoted_list = [](const std::set<std::string>& items) {
        std::string out;
        for (const auto& i : items) {
            if (!out.empty()) out += ",";
            out += "\"" + to_lower(i) + "\"";
        }
        return "[" + out + "]";
    };
    return fmt::format(
        "MATCH (p:Package)\n"
        "WHERE p.name <> \"{0}\"\n"
        "  AND NOT toLower(p.name) CONTAINS toLower(\"{0}\")\n"
        "  AND \"{1}\" IN p.build_systems\n"
        "OPTIONAL MATCH (p)-[:DEPENDS_ON]->(d:Package)\n"
        "OPTIONAL MATCH (p)-[:HAS_VARIANT]->(v:Variant)\n"
        "WITH p,\n"
        "     size(apoc.coll.intersection(\n"
        "         {2},\n"
        "         collect(d.name))) AS dep_score,\n"
        "     size(apoc.coll.intersection(\n"
        "         {3},\n"
        "         collect(v.name))) AS var_score\n"
        "WITH p, dep_score, var_score,\n"
        "     ({4} * dep_score + {5} * var_score) AS total_score\n"
        "ORDER BY total_score DESC\n"
        "LIMIT {6}\n"
        "RETURN p.name AS match_name, p.recipe AS recipe, total_score",
        target.package_name, target.build_system, quoted_list(target.dependency_hints),
        quoted_list(target.build_options), weights.w_dep, weights.w_opt, count);
}

FeatureCard make_feature_card(const PackageNode& node) {
    FeatureCard card;
    card.package = node.name;
    card.text = "package: " + node.name + "; build: " + join(node.build_systems, ", ") +
                "; deps: " + join(node.dependencies, ", ") +
                "; options: " + join(node.variants, ", ");
    return card;
}

std::vector<RecipeChunk> chunk_recipe(const std::string& recipe_text) {
    Recipe recipe = parse_recipe(recipe_text);
    std::vector<std::string> lines = split_lines(recipe_text);

    auto slice = [&](int first_line, int last_line) {  // 1-based, inclusive
        std::string out;
        for (int i = first_line; i <= last_line && i <= (int)lines.size(); ++i) {
            if (i < 1) continue;
            out += lines[static_cast<size_t>(i - 1)];
            if (i != last_line) out += '\n';
        }
        return out;
    };

    std::string context =
        recipe.class_line >= 1 ? lines[static_cast<size_t>(recipe.class_line - 1)] : "";

    auto bucket_of = [](const Directive& d) {
        switch (d.kind) {
            case Directive::Kind::variant:
            case Directive::Kind::conflicts: return RecipeChunk::Kind::variants;
            case Directive::Kind::depends_on: return RecipeChunk::Kind::dependencies;
            default: return RecipeChunk::Kind::header;
        }
    };

    std::vector<RecipeChunk> chunks;
    size_t i = 0;
    bool first_run = true;
    while (i < recipe.directives.size()) {
        RecipeChunk::Kind bucket = bucket_of(recipe.directives[i]);
        int begin = recipe.directives[i].line;
        int end = recipe.directives[i].end_line;
        size_t j = i + 1;
        while (j < recipe.directives.size() && bucket_of(recipe.directives[j]) == bucket) {
            end = recipe.directives[j].end_line;
            ++j;
        }
        RecipeChunk chunk;
        chunk.package = recipe.class_name;
        chunk.kind = bucket;
        if (first_run && bucket == RecipeChunk::Kind::header) {
            // the leading header run absorbs the class line and docstring
            chunk.text = slice(recipe.class_line, end);
        } else {
            chunk.context = context;
            chunk.text = slice(begin, end);
        }
        chunks.push_back(std::move(chunk));
        first_run = false;
        i = j;
    }
    if (chunks.empty() || chunks.front().kind != RecipeChunk::Kind::header ||
        !chunks.front().context.empty()) {
        // no leading declarative run: synthesize the header chunk from the class line
        RecipeChunk header;
        header.package = recipe.class_name;
        header.kind = RecipeChunk::Kind::header;
        int hdr_end = recipe.docstring_end_line > 0 ? recipe.docstring_end_line
                                                    : recipe.class_line;
        header.text = slice(recipe.class_line, hdr_end);
        chunks.insert(chunks.begin(), std::move(header));
    }
    for (const auto& m : recipe.methods) {
        RecipeChunk chunk;
        chunk.package = recipe.class_name;
        chunk.kind = RecipeChunk::Kind::method_override;
        chunk.context = context;
        chunk.text = slice(m.line, m.end_line);
        chunks.push_back(std::move(chunk));
    }
    return chunks;
}

}  // namespace spackgen
