#pragma once

#include <Eigen/Dense>
#include <vector>

#include "vcnet/graph.hpp"

namespace vcnet {

struct EigenDecomposition {
    Eigen::VectorXd eigenvalues;   // ascending
    Eigen::MatrixXd eigenvectors;  // orthonormal columns, matching order
};

/// Full spectrum of a symmetric matrix, ascending. Rejects non-finite or
/// asymmetric input (1e-12 relative tolerance).
EigenDecomposition sym_eigh(const Eigen::MatrixXd& a);

/// Solves A X = B for symmetric positive definite A. Throws naming the
/// smallest pivot when A is not PD.
Eigen::MatrixXd solve_spd(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

/// L = I' - D^{-1/2} A D^{-1/2}. I' carries 1 only on rows of positive
/// degree, so isolated nodes contribute a zero row/column (eigenvalue 0).
Eigen::MatrixXd normalized_laplacian(const ConceptGraph& g, bool use_weights);

/// Dense adjacency of g; weights taken as-is when use_weights, else 1.
Eigen::MatrixXd adjacency_matrix(const ConceptGraph& g, bool use_weights);

/// Equal-width histogram over [lo, hi); bins are half-open with the final
/// bin closed, and out-of-range values clamp to the first/last bin. With
/// normalize the entries sum to 1 whenever any value is present.
std::vector<double> histogram(const std::vector<double>& values, int bins, double lo, double hi,
                              bool normalize);

}  // namespace vcnet
