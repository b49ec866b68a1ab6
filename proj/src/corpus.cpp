#include "mtsem/corpus.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "mtsem/rng.hpp"

namespace mtsem {

namespace {

constexpr double kScalar[kQuantifierCount] = {0.0, 0.05, 0.35, 0.95, 1.0};
constexpr const char* kName[kQuantifierCount] = {"no", "few", "some", "most", "all"};

std::uint64_t pair_key(std::size_t c, std::size_t f) {
    return (static_cast<std::uint64_t>(c) << 32) | static_cast<std::uint64_t>(f);
}

}  // namespace

double quantifier_scalar(Quantifier q) noexcept {
    return kScalar[static_cast<int>(q)];
}

const char* quantifier_name(Quantifier q) noexcept {
    return kName[static_cast<int>(q)];
}

std::optional<Quantifier> quantifier_from_token(std::string_view token) noexcept {
    for (int i = 0; i < kQuantifierCount; ++i)
        if (token == kName[i]) return static_cast<Quantifier>(i);
    return std::nullopt;
}

double AnnotationRecord::mean_value() const {
    double sum = 0.0;
    for (Quantifier q : annotations) sum += quantifier_scalar(q);
    return sum / static_cast<double>(annotations.size());
}

void Dataset::add_record(std::string concept, std::string feature,
                         std::vector<Quantifier> annotations) {
    if (annotations.empty())
        throw ArgumentError("record (" + concept + ", " + feature + ") has no annotations");

    auto [cit, c_new] = concept_idx_.try_emplace(concept, concepts_.size());
    if (c_new) {
        concepts_.push_back(concept);
        concept_records_.emplace_back();
    }
    auto [fit, f_new] = feature_idx_.try_emplace(feature, features_.size());
    if (f_new) features_.push_back(feature);

    const std::uint64_t key = pair_key(cit->second, fit->second);
    if (!record_idx_.try_emplace(key, records_.size()).second)
        throw ArgumentError("duplicate record for (" + concept + ", " + feature + ")");

    concept_records_[cit->second].push_back(records_.size());
    records_.push_back({std::move(concept), std::move(feature), std::move(annotations)});
}

std::optional<std::size_t> Dataset::concept_index(std::string_view concept) const {
    auto it = concept_idx_.find(std::string(concept));
    if (it == concept_idx_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> Dataset::feature_index(std::string_view feature) const {
    auto it = feature_idx_.find(std::string(feature));
    if (it == feature_idx_.end()) return std::nullopt;
    return it->second;
}

const AnnotationRecord* Dataset::find(std::string_view concept, std::string_view feature) const {
    auto c = concept_index(concept);
    auto f = feature_index(feature);
    if (!c || !f) return nullptr;
    auto it = record_idx_.find(pair_key(*c, *f));
    if (it == record_idx_.end()) return nullptr;
    return &records_[it->second];
}

const std::vector<std::size_t>& Dataset::records_of(std::size_t concept_idx) const {
    return concept_records_.at(concept_idx);
}

std::size_t Dataset::total_annotations() const {
    std::size_t n = 0;
    for (const auto& r : records_) n += r.annotations.size();
    return n;
}

bool Dataset::operator==(const Dataset& other) const {
    return concepts_ == other.concepts_ && features_ == other.features_ &&
           records_ == other.records_;
}

Dataset parse_dataset(std::istream& in) {
    Dataset d;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;

        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            std::size_t tab = line.find('\t', start);
            fields.push_back(line.substr(start, tab - start));
            if (tab == std::string::npos) break;
            start = tab + 1;
        }
        if (fields.size() < 3)
            throw ParseError("expected concept, feature and at least one quantifier", line_no);
        if (fields[0].empty() || fields[1].empty())
            throw ParseError("empty concept or feature token", line_no);

        std::vector<Quantifier> annotations;
        annotations.reserve(fields.size() - 2);
        for (std::size_t i = 2; i < fields.size(); ++i) {
            auto q = quantifier_from_token(fields[i]);
            if (!q) throw ParseError("unknown quantifier '" + fields[i] + "'", line_no);
            annotations.push_back(*q);
        }
        try {
            d.add_record(std::move(fields[0]), std::move(fields[1]), std::move(annotations));
        } catch (const ArgumentError& e) {
            throw ParseError(e.what(), line_no);
        }
    }
    return d;
}

void serialize_dataset(const Dataset& d, std::ostream& out) {
    for (const auto& r : d.records()) {
        out << r.concept << '\t' << r.feature;
        for (Quantifier q : r.annotations) out << '\t' << quantifier_name(q);
        out << '\n';
    }
}

std::size_t ModelTheoreticVector::annotated_count() const {
    return static_cast<std::size_t>(std::count(mask.begin(), mask.end(), true));
}

ModelTheoreticVector build_feature_vector(const Dataset& d, std::string_view concept) {
    auto c = d.concept_index(concept);
    if (!c) throw NotFoundError("unknown concept '" + std::string(concept) + "'");

    ModelTheoreticVector v;
    v.values = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(d.features().size()));
    v.mask.assign(d.features().size(), false);
    for (std::size_t ri : d.records_of(*c)) {
        const AnnotationRecord& r = d.records()[ri];
        std::size_t f = *d.feature_index(r.feature);
        v.values[static_cast<Eigen::Index>(f)] = r.mean_value();
        v.mask[f] = true;
    }
    return v;
}

std::size_t QuantifierDistribution::total() const {
    std::size_t n = 0;
    for (const auto& row : counts)
        for (std::size_t c : row) n += c;
    return n;
}

QuantifierDistribution quantifier_distribution(const Dataset& d) {
    QuantifierDistribution dist;
    dist.counts.assign(d.features().size(), {});
    for (const auto& r : d.records()) {
        auto& row = dist.counts[*d.feature_index(r.feature)];
        for (Quantifier q : r.annotations) ++row[static_cast<int>(q)];
    }
    return dist;
}

namespace {

std::string padded_token(char prefix, std::size_t index, std::size_t count) {
    std::size_t width = 1;
    for (std::size_t v = count > 0 ? count - 1 : 0; v >= 10; v /= 10) ++width;
    std::string digits = std::to_string(index);
    std::string token(1, prefix);
    token.append(width - digits.size(), '0');
    token += digits;
    return token;
}

}  // namespace

Dataset synth_dataset(std::size_t n_concepts, std::size_t n_features,
                      std::size_t features_per_concept, std::size_t annotators,
                      double dominance, std::uint64_t rng_seed) {
    if (features_per_concept < 1 || features_per_concept > n_features)
        throw ArgumentError("features_per_concept must be in [1, n_features]");
    if (annotators < 1) throw ArgumentError("annotators must be >= 1");
    if (dominance < 0.0 || dominance > 1.0)
        throw ArgumentError("dominance must be in [0, 1]");

    SplitMix64 rng(rng_seed);

    // One dominant quantifier per feature, drawn up front so the stream does
    // not depend on which features end up sampled.
    std::vector<int> dominant(n_features);
    for (std::size_t f = 0; f < n_features; ++f)
        dominant[f] = static_cast<int>(rng.below(kQuantifierCount));

    Dataset d;
    for (std::size_t c = 0; c < n_concepts; ++c) {
        std::string concept = padded_token('c', c, n_concepts);
        auto feats = sample_without_replacement(n_features, features_per_concept, rng);
        std::sort(feats.begin(), feats.end());
        for (std::size_t f : feats) {
            std::vector<Quantifier> annotations;
            annotations.reserve(annotators);
            for (std::size_t a = 0; a < annotators; ++a) {
                int q;
                if (rng.next_double() < dominance) {
                    q = dominant[f];
                } else {
                    // The other four quantifiers share the remainder evenly.
                    q = static_cast<int>(rng.below(kQuantifierCount - 1));
                    if (q >= dominant[f]) ++q;
                }
                annotations.push_back(static_cast<Quantifier>(q));
            }
            d.add_record(concept, padded_token('f', f, n_features), std::move(annotations));
        }
    }
    return d;
}

}  // namespace mtsem
