#include "spackgen/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "spackgen/errors.hpp"
#include "spackgen/util.hpp"

namespace spackgen {

void MatchWeights::validate() const {
    if (alpha < 0 || beta < 0 || gamma < 0 || lambda_ < 0)
        throw Error("match weights must be nonnegative");
    double sum = alpha + beta + gamma + lambda_;
    if (std::abs(sum - 1.0) > 1e-9) throw Error("match weights must sum to 1");
}

std::optional<double> variant_similarity(const ConfigKeySet& ground_truth,
                                         const ConfigKeySet& generated) {
    if (ground_truth.keys.empty()) return std::nullopt;
    size_t shared = 0;
    for (const auto& k : ground_truth.keys) shared += generated.keys.count(k);
    return double(shared) / double(ground_truth.keys.size());
}

double dependency_match(const Dependency& original, const Dependency& candidate,
                        const MatchWeights& w) {
    if (original.name != candidate.name)
        throw NameMismatchError("dependency_match called with different names: '" +
                                original.name + "' vs '" + candidate.name + "'");
    size_t type_shared = 0;
    for (const auto& t : original.types) type_shared += candidate.types.count(t);
    // Absent type sets on both sides mean both use the ecosystem default, so
    // they overlap fully; the max() guard covers the one-sided case.
    double type_ratio =
        (original.types.empty() && candidate.types.empty())
            ? 1.0
            : double(type_shared) / double(std::max<size_t>(original.types.size(), 1));
    double spec_eq =
        normalize_constraint(original.spec) == normalize_constraint(candidate.spec) ? 1.0 : 0.0;
    double cond_eq =
        normalize_constraint(original.condition) == normalize_constraint(candidate.condition)
            ? 1.0
            : 0.0;
    return w.alpha + w.beta * type_ratio + w.gamma * spec_eq + w.lambda_ * cond_eq;
}

std::pair<double, std::vector<DependencyMatch>> dependency_similarity(
    const std::vector<Dependency>& originals, const std::vector<Dependency>& generated,
    const MatchWeights& w) {
    w.validate();
    std::vector<DependencyMatch> detail;
    detail.reserve(originals.size());
    double sum = 0.0;
    for (const auto& orig : originals) {
        DependencyMatch m;
        m.original = orig;
        for (const auto& cand : generated) {
            if (cand.name != orig.name) continue;
            double s = dependency_match(orig, cand, w);
            if (!m.best || s > m.score) {
                m.best = cand;
                m.score = s;
                m.tie_count = 0;
            } else if (s == m.score) {
                m.tie_count++;
            }
        }
        sum += m.score;
        detail.push_back(std::move(m));
    }
    double sd = sum / double(std::max<size_t>(originals.size(), 1));
    return {sd, std::move(detail)};
}

MetricReport score_recipes(const std::string& ground_truth_text,
                           const std::string& generated_text, const MatchWeights& w,
                           const std::set<std::string>& class_inherent) {
    Recipe gt = parse_recipe(ground_truth_text);
    Recipe gen = parse_recipe(generated_text);

    MetricReport report;
    report.variant_score = variant_similarity(extract_config_keys(gt), extract_config_keys(gen));
    report.excluded_variant_sample = !report.variant_score.has_value();

    auto d_a = extract_dependencies(gt, class_inherent);
    auto d_b = extract_dependencies(gen, class_inherent);
    auto [sd, detail] = dependency_similarity(d_a, d_b, w);
    report.dependency_score = sd;
    report.per_dependency = std::move(detail);

    auto any_block = [](const std::vector<Dependency>& deps) {
        return std::any_of(deps.begin(), deps.end(),
                           [](const Dependency& d) { return d.from_block; });
    };
    if (any_block(d_a) || any_block(d_b))
        report.notes.push_back(
            "dependencies declared inside when() blocks are counted with an empty condition");
    return report;
}

}  // namespace spackgen
