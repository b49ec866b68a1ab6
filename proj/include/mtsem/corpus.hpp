#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <Eigen/Core>

#include "mtsem/errors.hpp"

namespace mtsem {

// Annotation levels, ordered by their scalar value.
enum class Quantifier : int { no = 0, few = 1, some = 2, most = 3, all = 4 };

inline constexpr int kQuantifierCount = 5;

// Fixed scalar mapping: no->0, few->0.05, some->0.35, most->0.95, all->1.
double quantifier_scalar(Quantifier q) noexcept;

const char* quantifier_name(Quantifier q) noexcept;
std::optional<Quantifier> quantifier_from_token(std::string_view token) noexcept;

struct AnnotationRecord {
    std::string concept;
    std::string feature;
    std::vector<Quantifier> annotations;  // non-empty, input order

    // Arithmetic mean of the mapped annotations.
    double mean_value() const;

    bool operator==(const AnnotationRecord&) const = default;
};

// Concepts x features annotation store. Concept and feature indices are
// assigned in first-seen order, so the i-th coordinate means the same
// feature for every concept. At most one record per (concept, feature).
class Dataset {
public:
    Dataset() = default;

    // Throws ArgumentError on an empty annotation list or a duplicate
    // (concept, feature) pair.
    void add_record(std::string concept, std::string feature,
                    std::vector<Quantifier> annotations);

    const std::vector<std::string>& concepts() const { return concepts_; }
    const std::vector<std::string>& features() const { return features_; }
    const std::vector<AnnotationRecord>& records() const { return records_; }

    std::optional<std::size_t> concept_index(std::string_view concept) const;
    std::optional<std::size_t> feature_index(std::string_view feature) const;

    // nullptr when the pair is not annotated.
    const AnnotationRecord* find(std::string_view concept, std::string_view feature) const;

    // Indices into records() for one concept, in record order.
    const std::vector<std::size_t>& records_of(std::size_t concept_idx) const;

    std::size_t total_annotations() const;

    bool operator==(const Dataset& other) const;

private:
    std::vector<std::string> concepts_;
    std::vector<std::string> features_;
    std::vector<AnnotationRecord> records_;
    std::unordered_map<std::string, std::size_t> concept_idx_;
    std::unordered_map<std::string, std::size_t> feature_idx_;
    std::unordered_map<std::uint64_t, std::size_t> record_idx_;  // (c<<32)|f -> record
    std::vector<std::vector<std::size_t>> concept_records_;
};

// TSV lines `concept<TAB>feature<TAB>q1[<TAB>q2 ...]`. `#` lines and blank
// lines are ignored; CRLF accepted. Throws ParseError with the line number.
Dataset parse_dataset(std::istream& in);

// Inverse of parse_dataset: records in first-seen order, LF line ends.
void serialize_dataset(const Dataset& d, std::ostream& out);

// Per-concept feature values in [0,1] plus the annotated mask. mask[i]=false
// implies values[i]=0 ("presumed no").
struct ModelTheoreticVector {
    Eigen::VectorXd values;
    std::vector<bool> mask;

    std::size_t annotated_count() const;
};

// Throws NotFoundError for a concept not in the dataset.
ModelTheoreticVector build_feature_vector(const Dataset& d, std::string_view concept);

// Per-feature counts of individual annotations (not means), aligned with
// Dataset::features().
struct QuantifierDistribution {
    std::vector<std::array<std::size_t, kQuantifierCount>> counts;

    std::size_t total() const;
};

QuantifierDistribution quantifier_distribution(const Dataset& d);

// Synthetic dataset generator. Every concept is assigned
// `features_per_concept` distinct features; each (pair, annotator) draws the
// feature's dominant quantifier with probability `dominance`, the remaining
// four sharing the rest uniformly. Deterministic given the seed. Feature
// indices follow first appearance in the generated records, matching
// parse_dataset semantics.
Dataset synth_dataset(std::size_t n_concepts, std::size_t n_features,
                      std::size_t features_per_concept, std::size_t annotators,
                      double dominance, std::uint64_t rng_seed);

}  // namespace mtsem
