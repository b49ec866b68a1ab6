#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mtsem {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text. Carries the 1-based line number when known.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t line_no)
        : Error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
    explicit ParseError(const std::string& msg) : Error(msg), line(0) {}
    std::size_t line;
};

// A parameter is outside its documented range.
struct ArgumentError : Error {
    using Error::Error;
};

// A requested key (concept, word) does not exist.
struct NotFoundError : Error {
    using Error::Error;
};

// Cosine of a zero-norm vector.
struct UndefinedSimilarityError : Error {
    using Error::Error;
};

// Numerically unusable input (e.g. all-zero design matrix).
struct DegenerateInputError : Error {
    using Error::Error;
};

// Too few usable rows to fit a model.
struct InsufficientDataError : Error {
    using Error::Error;
};

// A query concept has no embedding; the caller decides the skip policy.
struct CoverageError : Error {
    using Error::Error;
};

// A run produced no defined concept scores.
struct EvaluationError : Error {
    using Error::Error;
};

// A method failed on every run of an experiment.
struct ExperimentError : Error {
    using Error::Error;
};

}  // namespace mtsem
