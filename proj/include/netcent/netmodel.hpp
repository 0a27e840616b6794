#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <vector>

namespace netcent {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Stochastic block family: m groups with population shares summing to 1 and a
// symmetric matrix of strictly positive link probabilities.
struct BlockModel {
    int m = 0;
    Vector shares;
    Matrix probs;

    // Convenience constructor for the two-probability (p_s / p_d) form.
    static BlockModel two_probability(const Vector& shares, double p_same, double p_diff);

    void validate() const;

    // True when probs has the p_s / p_d structure (all diagonal entries equal,
    // all off-diagonal entries equal).
    bool is_two_probability(double* p_same = nullptr, double* p_diff = nullptr) const;
};

// Expected adjacency matrix for a concrete population size. Entries are link
// probabilities for Bernoulli models and expected weights otherwise.
struct ExpectedMatrix {
    int n = 0;
    Matrix entries;
    std::optional<std::vector<int>> group_of;

    void validate() const;
};

struct Edge {
    int i;
    int j;
    double weight;
};

// One sampled symmetric weighted network, stored as an upper-triangular edge
// list (i < j). The diagonal is zero; spatial expected matrices are used
// deterministically and never sampled.
struct RealizedNetwork {
    int n = 0;
    std::vector<Edge> edges;
    std::uint64_t seed = 0;

    // y = A x with the symmetric interpretation of the edge list.
    void multiply(const Vector& x, Vector& y) const;
    Matrix dense() const;
};

// Agents on the integer grid {0..k} x {0..k}; off-diagonal expected weight of
// a pair at Euclidean distance d is d^-rho, self-links weigh 1.
struct SpatialGridModel {
    int k = 0;
    double rho = 1.0;
};

struct MulticharacteristicModel {
    ExpectedMatrix layer1;
    ExpectedMatrix layer2;
};

// Dyad probabilities plus symmetric triplet probabilities p[i][i'][i''];
// triangles add shared weight to their three edges.
struct ClusteredModel {
    BlockModel base;
    std::vector<std::vector<std::vector<double>>> triangle_probs;

    void validate() const;
};

// Edge weights uniform on [lower_ij, upper_ij] per group pair.
struct WeightedIntervalModel {
    int m = 0;
    Vector shares;
    Matrix lower;
    Matrix upper;

    void validate() const;
};

// Largest-remainder rounding of shares * n, ties to the lower group index.
// Sizes sum to n exactly.
std::vector<int> group_sizes(const BlockModel& model, int n);
std::vector<int> group_sizes(const Vector& shares, int n);

// Agents are group-contiguous: group 0 first, then group 1, etc.
std::vector<int> group_assignment(const Vector& shares, int n);

ExpectedMatrix build_expected_sbm(const BlockModel& model, int n);
ExpectedMatrix build_spatial_grid(const SpatialGridModel& model);
ExpectedMatrix build_kronecker(const MulticharacteristicModel& model);

// Two-block matrix with within entries 1/2 and cross entries n^-3 (vanishing
// spectral gap). Requires n even, n >= 4.
ExpectedMatrix build_counterexample_split(int n);

// Hub row/column 1/2, all other entries log(n)/n (fails large enough
// eigenvalues). The quoted rule is applied on the diagonal as well.
ExpectedMatrix build_counterexample_star(int n);

RealizedNetwork sample_bernoulli(const ExpectedMatrix& expected, std::uint64_t seed);
RealizedNetwork sample_weighted_uniform(const WeightedIntervalModel& model, int n,
                                        std::uint64_t seed);
RealizedNetwork sample_clustered(const ClusteredModel& model, int n, std::uint64_t seed);

// Expected matrix of sample_clustered: dyad probability plus the summed
// triangle probabilities over all third agents.
ExpectedMatrix clustered_expected(const ClusteredModel& model, int n);

}  // namespace netcent
