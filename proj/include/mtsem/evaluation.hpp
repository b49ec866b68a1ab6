#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "mtsem/corpus.hpp"
#include "mtsem/predictors.hpp"

namespace mtsem {

// Score of one predicted vector against one gold vector. rho is empty when
// the correlation is undefined (fewer than 2 annotated features, or either
// restricted vector constant).
struct ConceptScore {
    std::string concept;
    std::optional<double> rho;
    int n_annotated = 0;
};

struct RunScore {
    double mean_rho = 0.0;  // arithmetic mean over defined ConceptScores
    int n_scored = 0;
    int n_skipped_undefined = 0;
    int n_skipped_coverage = 0;
};

// Spearman rank-order correlation: Pearson correlation of fractional
// (average) ranks. Returns nullopt when either vector is constant. Throws
// ArgumentError on length mismatch or length < 2.
std::optional<double> spearman(const Eigen::VectorXd& a, const Eigen::VectorXd& b);

// Restricts both vectors to the gold-annotated coordinates (annotated `no`
// counts as annotated; only unannotated coordinates are dropped), then
// spearman. Throws ArgumentError on a length mismatch.
ConceptScore masked_spearman(const Eigen::VectorXd& pred, const ModelTheoreticVector& gold);

// Predicts every test concept, applies masked_spearman, and averages the
// defined scores. Coverage errors and undefined correlations are counted and
// skipped. The mean is computed over value-sorted scores, so it does not
// depend on test order. Throws ArgumentError on an empty test list and
// EvaluationError when no concept score is defined.
RunScore evaluate_run(const Predictor& p, const std::vector<std::string>& test,
                      const Dataset& d);

}  // namespace mtsem
