#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spackgen/recipe.hpp"

namespace spackgen {

// Weights of the composite dependency match score. The name-match reward is
// `alpha`; `beta` rewards type overlap, `gamma` exact spec equality, and
// `lambda_` condition equality. They must be nonnegative and sum to 1.
struct MatchWeights {
    double alpha = 0.6;
    double beta = 0.2;
    double gamma = 0.1;
    double lambda_ = 0.1;

    void validate() const;  // throws Error on violation
};

struct DependencyMatch {
    Dependency original;
    std::optional<Dependency> best;
    double score = 0.0;
    int tie_count = 0;  // candidates sharing the best score beyond the recorded one
};

struct MetricReport {
    std::optional<double> variant_score;  // absent when the ground-truth key set is empty
    double dependency_score = 0.0;
    std::vector<DependencyMatch> per_dependency;
    bool excluded_variant_sample = false;
    std::vector<std::string> notes;
};

// Fraction of ground-truth configuration keys present in the generated set:
// |A∩B| / |A|. Absent (sample excluded) when |A| = 0.
std::optional<double> variant_similarity(const ConfigKeySet& ground_truth,
                                         const ConfigKeySet& generated);

// Composite match score for one name-gated candidate pair. Throws
// NameMismatchError when names differ.
double dependency_match(const Dependency& original, const Dependency& candidate,
                        const MatchWeights& w);

// Mean best-match score over the originals; name-gated, non-exclusive.
std::pair<double, std::vector<DependencyMatch>> dependency_similarity(
    const std::vector<Dependency>& originals, const std::vector<Dependency>& generated,
    const MatchWeights& w);

// Parses both recipes, extracts keys and dependencies (minus class-inherent
// names), and assembles the full report.
MetricReport score_recipes(const std::string& ground_truth_text,
                           const std::string& generated_text, const MatchWeights& w,
                           const std::set<std::string>& class_inherent);

}  // namespace spackgen
