#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mtsem/corpus.hpp"
#include "mtsem/embeddings.hpp"
#include "mtsem/evaluation.hpp"
#include "mtsem/rng.hpp"

namespace mtsem {

enum class Method { plsr, mode, true_mode, nn, plsr_random, nn_random };

std::string_view method_name(Method m);
std::optional<Method> method_from_name(std::string_view name);

struct ExperimentConfig {
    std::string dataset_path;
    std::string embeddings_path;  // required for plsr/nn
    std::string lexicon_path;     // retrofits the embeddings when set
    std::vector<Method> methods;
    int train_size = 0;
    int runs = 1;
    int n_components = 0;  // 0 = auto: min(50, usable_train - 1, dim)
    std::uint64_t seed = 0;
    int retrofit_iterations = 10;
    double retrofit_alpha = 1.0;
    int random_dim = 300;  // dimension of per-run random tables
    int threads = 1;
    std::string out_path;          // empty = stdout only
    std::string per_run_log_path;  // empty = no log
};

struct MethodSummary {
    Method method;
    double min_rho = 0.0;
    double avg_rho = 0.0;
    double max_rho = 0.0;
    int n_runs = 0;       // runs that produced a defined mean
    int failed_runs = 0;  // runs where the method was unusable
    long long skipped_undefined = 0;  // summed over runs
    long long skipped_coverage = 0;
};

struct ExperimentSummary {
    std::vector<MethodSummary> methods;  // config order
    int runs = 0;
};

struct PerRunScore {
    Method method;
    int run;
    std::optional<RunScore> score;  // empty when the run failed
};

// Uniform sample without replacement; train in draw order, test = complement
// in concept order. Requires 1 <= train_size < |concepts|.
std::pair<std::vector<std::string>, std::vector<std::string>>
split(const Dataset& d, int train_size, SplitMix64& rng);

// Runs the method matrix: for each run r, the seed mix_seed(cfg.seed, r)
// derives the split and the per-run random tables, every selected method is
// fitted on the same split, and min/avg/max of the per-run means are
// aggregated per method. Runs may execute on cfg.threads threads; the output
// does not depend on the thread count. `embeddings` may be null when no
// selected method needs it. Throws ExperimentError naming the method when
// one is unusable on every run.
ExperimentSummary run_experiment(const ExperimentConfig& cfg, const Dataset& d,
                                 const EmbeddingTable* embeddings,
                                 std::vector<PerRunScore>* per_run = nullptr);

enum class SummaryFormat { csv, table };

// CSV columns `method,min,avg,max,n_runs,skipped_undefined,skipped_coverage`
// at full precision; table mode renders floats with 3 decimals.
std::string emit_summary(const ExperimentSummary& s, SummaryFormat format);

// CSV `run,method,mean_rho,n_scored,skipped_undefined,skipped_coverage`;
// failed runs keep an empty mean_rho field.
std::string emit_per_run_log(const std::vector<PerRunScore>& log);

}  // namespace mtsem
