#include "mtsem/embeddings.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <unordered_set>

#include "mtsem/rng.hpp"

namespace mtsem {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) tokens.emplace_back(line.substr(start, i - start));
    }
    return tokens;
}

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

double parse_double(const std::string& token, std::size_t line_no) {
    const char* begin = token.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end != begin + token.size())
        throw ParseError("malformed number '" + token + "'", line_no);
    return v;
}

}  // namespace

bool EmbeddingTable::contains(std::string_view word) const {
    return index_.count(std::string(word)) != 0;
}

const Eigen::VectorXd* EmbeddingTable::find(std::string_view word) const {
    auto it = index_.find(std::string(word));
    if (it == index_.end()) return nullptr;
    return &vectors_[it->second];
}

bool EmbeddingTable::insert(const std::string& word, Eigen::VectorXd v) {
    if (words_.empty())
        dim_ = static_cast<int>(v.size());
    else if (static_cast<int>(v.size()) != dim_)
        throw ArgumentError("vector for '" + word + "' has dimension " +
                            std::to_string(v.size()) + ", table has " + std::to_string(dim_));

    auto [it, is_new] = index_.try_emplace(word, words_.size());
    if (is_new) {
        words_.push_back(word);
        vectors_.push_back(std::move(v));
    } else {
        vectors_[it->second] = std::move(v);
    }
    return is_new;
}

EmbeddingLoadResult load_embeddings(std::istream& in) {
    EmbeddingLoadResult result;
    std::string line;
    std::size_t line_no = 0;
    bool first_content_line = true;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto tokens = split_ws(line);
        if (tokens.empty()) continue;

        if (first_content_line) {
            first_content_line = false;
            // Optional `N D` word2vec header: exactly two integer tokens.
            if (tokens.size() == 2 && is_integer_token(tokens[0]) && is_integer_token(tokens[1]))
                continue;
        }

        if (tokens.size() < 2)
            throw ParseError("expected a word followed by vector components", line_no);

        const int line_dim = static_cast<int>(tokens.size()) - 1;
        if (result.table.dim() != 0 && line_dim != result.table.dim())
            throw ParseError("expected " + std::to_string(result.table.dim()) +
                                 " components, found " + std::to_string(line_dim),
                             line_no);

        Eigen::VectorXd v(line_dim);
        for (int i = 0; i < line_dim; ++i) v[i] = parse_double(tokens[i + 1], line_no);
        if (!result.table.insert(tokens[0], std::move(v))) ++result.duplicate_words;
    }
    return result;
}

void serialize_embeddings(const EmbeddingTable& t, std::ostream& out) {
    char buf[32];
    for (std::size_t i = 0; i < t.size(); ++i) {
        out << t.words()[i];
        const Eigen::VectorXd& v = t.vector_at(i);
        for (Eigen::Index j = 0; j < v.size(); ++j) {
            std::snprintf(buf, sizeof(buf), "%.17g", v[j]);
            out << ' ' << buf;
        }
        out << '\n';
    }
}

EmbeddingTable random_table(const std::vector<std::string>& words, int dim,
                            std::uint64_t seed) {
    if (dim < 1) throw ArgumentError("random_table: dim must be >= 1");
    SplitMix64 rng(seed);
    EmbeddingTable t;
    for (const auto& word : words) {
        Eigen::VectorXd v(dim);
        for (int i = 0; i < dim; ++i) v[i] = rng.next_double();
        t.insert(word, std::move(v));
    }
    return t;
}

double cosine(const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
    if (u.size() != v.size())
        throw ArgumentError("cosine: vectors have different lengths");
    const double nu = u.norm();
    const double nv = v.norm();
    if (nu == 0.0 || nv == 0.0)
        throw UndefinedSimilarityError("cosine of a zero-norm vector is undefined");
    return u.dot(v) / (nu * nv);
}

FilterResult filter_vocab(const EmbeddingTable& t, const std::vector<std::string>& words) {
    FilterResult result;
    std::unordered_set<std::string> seen;
    for (const auto& word : words) {
        if (!seen.insert(word).second) continue;
        if (const Eigen::VectorXd* v = t.find(word))
            result.table.insert(word, *v);
        else
            ++result.missing;
    }
    return result;
}

}  // namespace mtsem
