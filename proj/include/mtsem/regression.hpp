#pragma once

#include <iosfwd>

#include <Eigen/Core>

#include "mtsem/errors.hpp"

namespace mtsem {

// PLSR2 model fitted by NIPALS. Columns of X and Y are centered, not scaled.
// coefficients B = W (P^T W)^-1 Q^T maps centered x to centered y:
//   predict(x) = y_mean + B^T (x - x_mean).
struct PlsrModel {
    int n_components = 0;          // components actually fitted
    int requested_components = 0;  // may exceed n_components after early stop
    Eigen::VectorXd x_mean;        // d
    Eigen::VectorXd y_mean;        // q
    Eigen::MatrixXd x_weights;     // d x A
    Eigen::MatrixXd x_loadings;    // d x A
    Eigen::MatrixXd y_loadings;    // q x A
    Eigen::MatrixXd x_scores;      // n x A, mutually orthogonal columns
    Eigen::MatrixXd coefficients;  // d x q

    int dim_x() const { return static_cast<int>(x_mean.size()); }
    int dim_y() const { return static_cast<int>(y_mean.size()); }

    // Debugging dump: one labeled section per matrix, row-major,
    // space-separated. Not a stability-guaranteed format.
    void dump(std::ostream& out) const;
};

// NIPALS fit. X is n x d (one embedding per row), Y is n x q (one
// model-theoretic value vector per row). Requires n >= 2 and
// 1 <= n_components <= min(n-1, d). The per-component inner loop iterates to
// convergence (1e-10 on the change of the unit weight vector, at most 500
// iterations); X and Y are deflated after each component; extraction stops
// early once the residual X norm falls below 1e-12 or Y is exhausted, and
// the model records the smaller component count. Each weight vector is
// sign-flipped so its largest-magnitude entry is positive, which makes the
// fit deterministic across platforms.
// Throws ArgumentError on dimension violations and DegenerateInputError when
// X (or centered X) is all zero.
PlsrModel plsr_fit(const Eigen::MatrixXd& X, const Eigen::MatrixXd& Y, int n_components);

// y_mean + B^T (x - x_mean). Throws ArgumentError on a length mismatch.
Eigen::VectorXd plsr_predict(const PlsrModel& m, const Eigen::VectorXd& x);

// Row-wise batch form of the above.
Eigen::MatrixXd plsr_predict_rows(const PlsrModel& m, const Eigen::MatrixXd& X);

}  // namespace mtsem
