#pragma once

#include <memory>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "mtsem/corpus.hpp"
#include "mtsem/embeddings.hpp"
#include "mtsem/regression.hpp"

namespace mtsem {

// Uniform interface over the five methods. predict returns a mask-free value
// vector of length |features|; the evaluation applies the gold mask. Fitted
// predictors are immutable and safe for concurrent predict calls.
class Predictor {
public:
    virtual ~Predictor() = default;

    // Throws CoverageError when the concept has no embedding (embedding-based
    // predictors only); the harness owns the skip policy.
    virtual Eigen::VectorXd predict(const std::string& concept) const = 0;
};

// Concept-independent per-feature constant predictor. Features with no
// training annotation predict 0 (consistent with "presumed no").
class ModePredictor : public Predictor {
public:
    Eigen::VectorXd predict(const std::string&) const override { return values_; }

    const Eigen::VectorXd& values() const { return values_; }
    bool covered(std::size_t feature_idx) const { return covered_[feature_idx]; }

private:
    friend ModePredictor fit_mode(const std::vector<std::string>&, const Dataset&);
    friend ModePredictor fit_true_mode(const std::vector<std::string>&, const Dataset&);
    Eigen::VectorXd values_;
    std::vector<bool> covered_;
};

// Mode of the per-concept mean values of each feature. Means are binned with
// tolerance 1e-9; ties break toward the larger scalar.
ModePredictor fit_mode(const std::vector<std::string>& train, const Dataset& d);

// Mode over all pooled individual annotations of each feature; ties break
// toward the larger scalar. Identical to fit_mode on one-annotator data.
ModePredictor fit_true_mode(const std::vector<std::string>& train, const Dataset& d);

// Returns the gold value vector of the training concept whose embedding has
// maximal cosine similarity with the query's; ties break by training-list
// order. The table must outlive the predictor.
class NearestNeighborPredictor : public Predictor {
public:
    Eigen::VectorXd predict(const std::string& concept) const override;

    std::size_t skipped_train() const { return skipped_train_; }
    const std::vector<std::string>& training_concepts() const { return train_concepts_; }

private:
    friend NearestNeighborPredictor fit_nn(const std::vector<std::string>&,
                                           const Dataset&, const EmbeddingTable&);
    const EmbeddingTable* table_ = nullptr;
    std::vector<std::string> train_concepts_;   // with embeddings, list order
    std::vector<Eigen::VectorXd> train_vectors_;
    std::vector<Eigen::VectorXd> train_gold_;
    std::size_t skipped_train_ = 0;
};

// Training concepts without embeddings are skipped and counted. Throws
// InsufficientDataError when no training concept has an embedding.
NearestNeighborPredictor fit_nn(const std::vector<std::string>& train,
                                const Dataset& d, const EmbeddingTable& e);

// PLSR from embeddings to model-theoretic value vectors. The table must
// outlive the predictor.
class PlsrPredictor : public Predictor {
public:
    Eigen::VectorXd predict(const std::string& concept) const override;

    std::size_t skipped_train() const { return skipped_train_; }
    const PlsrModel& model() const { return model_; }

private:
    friend PlsrPredictor fit_plsr_predictor(const std::vector<std::string>&,
                                            const Dataset&, const EmbeddingTable&, int);
    const EmbeddingTable* table_ = nullptr;
    PlsrModel model_;
    std::size_t skipped_train_ = 0;
};

// Stacks X = training embeddings, Y = their gold value vectors and fits
// plsr_fit. n_components is clamped to min(usable_rows - 1, dim), mirroring
// the configurable default of min(50, n_train - 1, d). Training concepts
// without embeddings are skipped and counted. Throws InsufficientDataError
// with fewer than 2 usable rows and ArgumentError for n_components < 1.
PlsrPredictor fit_plsr_predictor(const std::vector<std::string>& train,
                                 const Dataset& d, const EmbeddingTable& e,
                                 int n_components);

}  // namespace mtsem
