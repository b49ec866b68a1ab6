#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <Eigen/Core>

#include "mtsem/errors.hpp"

namespace mtsem {

// Word -> fixed-dimension vector store. All vectors share one dimension,
// fixed by the first insert. Immutable in practice after loading; concurrent
// reads are safe.
class EmbeddingTable {
public:
    EmbeddingTable() = default;

    int dim() const { return dim_; }  // 0 while empty
    std::size_t size() const { return words_.size(); }
    bool empty() const { return words_.empty(); }

    bool contains(std::string_view word) const;

    // nullptr when absent.
    const Eigen::VectorXd* find(std::string_view word) const;

    // Inserts or overwrites (last wins). Returns true when the word was new.
    // Throws ArgumentError on a dimension mismatch.
    bool insert(const std::string& word, Eigen::VectorXd v);

    const std::vector<std::string>& words() const { return words_; }
    const Eigen::VectorXd& vector_at(std::size_t i) const { return vectors_[i]; }

private:
    int dim_ = 0;
    std::vector<std::string> words_;  // insertion order
    std::vector<Eigen::VectorXd> vectors_;
    std::unordered_map<std::string, std::size_t> index_;
};

struct EmbeddingLoadResult {
    EmbeddingTable table;
    std::size_t duplicate_words = 0;  // overwritten entries (last wins)
};

// Word2vec-style text: `word<SP>f1<SP>...<SP>fD` per line. A first line of
// exactly two integer tokens is treated as a `N D` header and skipped; the
// dimension is inferred from the first data line. Throws ParseError with the
// line number on a dimension mismatch or a malformed number.
EmbeddingLoadResult load_embeddings(std::istream& in);

// Same format, no header, 17 significant digits (round-trips exactly).
void serialize_embeddings(const EmbeddingTable& t, std::ostream& out);

// One i.i.d. Uniform[0,1) vector per word; deterministic given the seed.
EmbeddingTable random_table(const std::vector<std::string>& words, int dim,
                            std::uint64_t seed);

// u.v / (|u||v|). Throws ArgumentError on length mismatch and
// UndefinedSimilarityError on a zero-norm input.
double cosine(const Eigen::VectorXd& u, const Eigen::VectorXd& v);

struct FilterResult {
    EmbeddingTable table;
    std::size_t missing = 0;  // requested words absent from the input table
};

// Restriction to the given words (in list order, duplicates collapsed).
FilterResult filter_vocab(const EmbeddingTable& t, const std::vector<std::string>& words);

}  // namespace mtsem
