#pragma once

#include <iosfwd>
#include <map>
#include <set>
#include <string>

#include "mtsem/embeddings.hpp"

namespace mtsem {

// Undirected semantic lexicon graph. Symmetrized on construction; no
// self-loops.
class Lexicon {
public:
    // Lines `word<SP>neighbor1<SP>neighbor2 ...`; blank lines ignored.
    static Lexicon parse(std::istream& in);

    void add_edge(const std::string& a, const std::string& b);

    // nullptr when the word has no entry.
    const std::set<std::string>* neighbors(const std::string& word) const;

    std::size_t word_count() const { return adjacency_.size(); }
    bool empty() const { return adjacency_.empty(); }
    const std::map<std::string, std::set<std::string>>& adjacency() const { return adjacency_; }

private:
    std::map<std::string, std::set<std::string>> adjacency_;
};

// Edge weight scheme for retrofitting: beta_ij = 1/deg(i) (degree counted
// over embedded neighbors) or a constant.
struct BetaMode {
    static BetaMode inverse_degree() { return {true, 0.0}; }
    static BetaMode constant(double c) { return {false, c}; }

    bool is_inverse_degree;
    double c;
};

// Iterative update over words present in both the table and the lexicon:
//   q_i <- (sum_j beta_ij q_j + alpha q̂_i) / (sum_j beta_ij + alpha)
// where q̂_i is the original vector and j ranges over embedded neighbors.
// Updates are applied in place (Gauss-Seidel) in sorted word order, so every
// sweep is deterministic. Words absent from the lexicon or with no embedded
// neighbors are returned unchanged. Requires iterations >= 1 and alpha > 0.
EmbeddingTable retrofit(const EmbeddingTable& t, const Lexicon& lex,
                        int iterations = 10, double alpha = 1.0,
                        BetaMode beta = BetaMode::inverse_degree());

}  // namespace mtsem
