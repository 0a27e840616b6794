#pragma once

#include "netcent/netmodel.hpp"

#include <functional>

namespace netcent {

// Symmetric nonnegative matrix seen through its matrix-vector product, so the
// same solvers run on dense expected matrices and sparse realized networks.
struct LinearOperator {
    int n = 0;
    std::function<void(const Vector&, Vector&)> apply;

    static LinearOperator from(const ExpectedMatrix& m);
    static LinearOperator from(const RealizedNetwork& a);
    static LinearOperator from(const Matrix& m);
};

struct EigenPair {
    double value = 0.0;
    Vector vector;
    double residual = 0.0;
    int iterations = 0;
};

struct KatzResult {
    double phi = 0.0;
    Vector scores;
    double residual = 0.0;
};

struct SpectralDiagnostics {
    double lambda1 = 0.0;
    double lambda2 = 0.0;        // absolute value of the second eigenvalue
    double gap_ratio = 0.0;      // 1 - |lambda2| / lambda1
    double max_expected_degree = 0.0;
    double large_eig_ratio = 0.0;  // lambda1 / sqrt(Delta * log n)
    double leveq_lhs = 0.0;        // lambda1^2
    double leveq_rhs = 0.0;        // (min entry) * (sum of entries)
};

inline constexpr double kDefaultTol = 1e-10;
inline constexpr int kDefaultMaxIter = 100000;
inline constexpr double kPhiMargin = 1e-6;

// Power iteration; the returned vector has unit Euclidean norm and is
// oriented so its entry sum is nonnegative (first nonzero entry positive when
// the sum vanishes). Throws NonConvergence past max_iter.
EigenPair top_eigenpair(const LinearOperator& op, double tol = kDefaultTol,
                        int max_iter = kDefaultMaxIter);
EigenPair top_eigenpair(const ExpectedMatrix& m, double tol = kDefaultTol,
                        int max_iter = kDefaultMaxIter);
EigenPair top_eigenpair(const RealizedNetwork& a, double tol = kDefaultTol,
                        int max_iter = kDefaultMaxIter);

// |lambda2| by power iteration on the deflated operator A - lambda1 v v^T,
// restarting from fresh start vectors up to three times on stagnation.
double second_eigenvalue(const LinearOperator& op, double tol = kDefaultTol,
                         int max_iter = kDefaultMaxIter);
double second_eigenvalue(const LinearOperator& op, const EigenPair& top,
                         double tol = kDefaultTol, int max_iter = kDefaultMaxIter);

Vector eigenvector_centrality(const LinearOperator& op, double tol = kDefaultTol,
                              int max_iter = kDefaultMaxIter);

// Neumann series sum_{k<=K} phi^k A^k 1 with K set by the geometric tail
// bound (phi lambda1)^{K+1} / (1 - phi lambda1) * sqrt(n) < tol.
// Throws InfeasiblePhi when phi * lambda1 > 1 - margin.
KatzResult katz_bonacich(const LinearOperator& op, double phi, double tol = kDefaultTol,
                         int max_terms = kDefaultMaxIter, double margin = kPhiMargin);
KatzResult katz_bonacich(const ExpectedMatrix& m, double phi, double tol = kDefaultTol,
                         int max_terms = kDefaultMaxIter, double margin = kPhiMargin);
KatzResult katz_bonacich(const RealizedNetwork& a, double phi, double tol = kDefaultTol,
                         int max_terms = kDefaultMaxIter, double margin = kPhiMargin);

// Representative-agent matrix P with P(i, j) = (rounded size of group j) * p_ij.
// Carries all nonzero eigenvalues of the expected SBM matrix.
Matrix reduced_block_matrix(const BlockModel& model, int n);

// Per-group centralities computed on the m x m reduced system; expand() lays
// them out over the n agents (group-contiguous order). For the eigenvector
// case group_values are already normalized over the full population.
struct BlockCentrality {
    Vector group_values;
    std::vector<int> sizes;

    Vector expand() const;
};

BlockCentrality block_eigenvector_centrality(const BlockModel& model, int n);
BlockCentrality block_katz_centrality(const BlockModel& model, int n, double phi,
                                      double margin = kPhiMargin);

SpectralDiagnostics diagnostics(const ExpectedMatrix& m, double tol = kDefaultTol,
                                int max_iter = kDefaultMaxIter);

}  // namespace netcent
