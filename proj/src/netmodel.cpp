#include "netcent/netmodel.hpp"

#include "netcent/errors.hpp"
#include "netcent/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace netcent {

namespace {

void require_symmetric(const Matrix& m, const char* what) {
    if (m.rows() != m.cols() || !m.isApprox(m.transpose(), 0.0))
        throw std::invalid_argument(std::string(what) + " must be symmetric");
}

}  // namespace

BlockModel BlockModel::two_probability(const Vector& shares, double p_same, double p_diff) {
    BlockModel model;
    model.m = static_cast<int>(shares.size());
    model.shares = shares;
    model.probs = Matrix::Constant(model.m, model.m, p_diff);
    model.probs.diagonal().setConstant(p_same);
    model.validate();
    return model;
}

void BlockModel::validate() const {
    if (m < 1 || shares.size() != m || probs.rows() != m || probs.cols() != m)
        throw std::invalid_argument("block model: inconsistent dimensions");
    if ((shares.array() <= 0.0).any())
        throw std::invalid_argument("block model: shares must be strictly positive");
    if (std::abs(shares.sum() - 1.0) > 1e-12)
        throw std::invalid_argument("block model: shares must sum to 1");
    require_symmetric(probs, "block model probs");
    if ((probs.array() <= 0.0).any() || (probs.array() > 1.0).any())
        throw std::invalid_argument("block model: probabilities must lie in (0, 1]");
}

bool BlockModel::is_two_probability(double* p_same, double* p_diff) const {
    const double ps = probs(0, 0);
    const double pd = m > 1 ? probs(0, 1) : ps;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const double want = i == j ? ps : pd;
            if (probs(i, j) != want) return false;
        }
    if (p_same) *p_same = ps;
    if (p_diff) *p_diff = pd;
    return true;
}

void ExpectedMatrix::validate() const {
    if (entries.rows() != n || entries.cols() != n)
        throw std::invalid_argument("expected matrix: inconsistent dimensions");
    require_symmetric(entries, "expected matrix");
    if ((entries.array() < 0.0).any())
        throw std::invalid_argument("expected matrix: entries must be nonnegative");
}

void RealizedNetwork::multiply(const Vector& x, Vector& y) const {
    y.setZero(n);
    for (const Edge& e : edges) {
        y[e.i] += e.weight * x[e.j];
        y[e.j] += e.weight * x[e.i];
    }
}

Matrix RealizedNetwork::dense() const {
    Matrix a = Matrix::Zero(n, n);
    for (const Edge& e : edges) {
        a(e.i, e.j) = e.weight;
        a(e.j, e.i) = e.weight;
    }
    return a;
}

void ClusteredModel::validate() const {
    base.validate();
    const int m = base.m;
    if (static_cast<int>(triangle_probs.size()) != m)
        throw std::invalid_argument("clustered model: triangle_probs must be m x m x m");
    for (const auto& plane : triangle_probs) {
        if (static_cast<int>(plane.size()) != m)
            throw std::invalid_argument("clustered model: triangle_probs must be m x m x m");
        for (const auto& row : plane)
            if (static_cast<int>(row.size()) != m)
                throw std::invalid_argument("clustered model: triangle_probs must be m x m x m");
    }
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c) {
                const double p = triangle_probs[a][b][c];
                if (p < 0.0 || p >= 1.0)
                    throw std::invalid_argument("clustered model: triangle probabilities must lie in [0, 1)");
                if (p != triangle_probs[a][c][b] || p != triangle_probs[b][a][c] ||
                    p != triangle_probs[c][b][a])
                    throw std::invalid_argument("clustered model: triangle_probs must be permutation symmetric");
            }
}

void WeightedIntervalModel::validate() const {
    if (m < 1 || shares.size() != m || lower.rows() != m || lower.cols() != m ||
        upper.rows() != m || upper.cols() != m)
        throw std::invalid_argument("weighted model: inconsistent dimensions");
    if ((shares.array() <= 0.0).any() || std::abs(shares.sum() - 1.0) > 1e-12)
        throw std::invalid_argument("weighted model: shares must be positive and sum to 1");
    require_symmetric(lower, "weighted model lower");
    require_symmetric(upper, "weighted model upper");
    if ((lower.array() < 0.0).any())
        throw std::invalid_argument("weighted model: lower bounds must be nonnegative");
    if ((upper.array() < lower.array()).any())
        throw std::invalid_argument("weighted model: upper bounds must dominate lower bounds");
}

std::vector<int> group_sizes(const Vector& shares, int n) {
    const int m = static_cast<int>(shares.size());
    if (n < m) throw std::invalid_argument("population smaller than number of groups");
    std::vector<int> sizes(m);
    std::vector<double> remainders(m);
    int assigned = 0;
    for (int i = 0; i < m; ++i) {
        const double exact = shares[i] * n;
        sizes[i] = static_cast<int>(std::floor(exact));
        remainders[i] = exact - sizes[i];
        assigned += sizes[i];
    }
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    // Largest remainder first; ties broken by lower group index.
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return remainders[a] > remainders[b]; });
    for (int r = 0; r < n - assigned; ++r) sizes[order[r % m]] += 1;
    return sizes;
}

std::vector<int> group_sizes(const BlockModel& model, int n) {
    model.validate();
    return group_sizes(model.shares, n);
}

std::vector<int> group_assignment(const Vector& shares, int n) {
    const std::vector<int> sizes = group_sizes(shares, n);
    std::vector<int> groups;
    groups.reserve(n);
    for (int g = 0; g < static_cast<int>(sizes.size()); ++g)
        groups.insert(groups.end(), sizes[g], g);
    return groups;
}

ExpectedMatrix build_expected_sbm(const BlockModel& model, int n) {
    model.validate();
    ExpectedMatrix out;
    out.n = n;
    out.group_of = group_assignment(model.shares, n);
    out.entries.resize(n, n);
    const auto& g = *out.group_of;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.entries(i, j) = model.probs(g[i], g[j]);
    return out;
}

ExpectedMatrix build_spatial_grid(const SpatialGridModel& model) {
    if (model.k < 1) throw std::invalid_argument("spatial grid: k must be at least 1");
    if (model.rho <= 0.0) throw std::invalid_argument("spatial grid: rho must be positive");
    const int side = model.k + 1;
    ExpectedMatrix out;
    out.n = side * side;
    out.entries.resize(out.n, out.n);
    // Agent (x, y) has row-major index x * (k+1) + y.
    for (int a = 0; a < out.n; ++a) {
        const int xa = a / side, ya = a % side;
        for (int b = 0; b < out.n; ++b) {
            if (a == b) {
                out.entries(a, b) = 1.0;
                continue;
            }
            const int xb = b / side, yb = b % side;
            const double d = std::hypot(double(xa - xb), double(ya - yb));
            out.entries(a, b) = std::pow(d, -model.rho);
        }
    }
    return out;
}

ExpectedMatrix build_kronecker(const MulticharacteristicModel& model) {
    model.layer1.validate();
    model.layer2.validate();
    const int n1 = model.layer1.n, n2 = model.layer2.n;
    ExpectedMatrix out;
    out.n = n1 * n2;
    out.entries.resize(out.n, out.n);
    // Agent (i1, i2) has layer-major index i1 * n2 + i2.
    for (int i1 = 0; i1 < n1; ++i1)
        for (int i2 = 0; i2 < n2; ++i2)
            for (int j1 = 0; j1 < n1; ++j1)
                for (int j2 = 0; j2 < n2; ++j2)
                    out.entries(i1 * n2 + i2, j1 * n2 + j2) =
                        model.layer1.entries(i1, j1) * model.layer2.entries(i2, j2);
    return out;
}

ExpectedMatrix build_counterexample_split(int n) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("split counterexample: n must be even and at least 4");
    ExpectedMatrix out;
    out.n = n;
    const double cross = std::pow(static_cast<double>(n), -3.0);
    out.entries.resize(n, n);
    const int half = n / 2;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out.entries(i, j) = ((i < half) == (j < half)) ? 0.5 : cross;
    return out;
}

ExpectedMatrix build_counterexample_star(int n) {
    if (n < 3) throw std::invalid_argument("star counterexample: n must be at least 3");
    ExpectedMatrix out;
    out.n = n;
    const double background = std::log(static_cast<double>(n)) / n;
    out.entries = Matrix::Constant(n, n, background);
    out.entries.row(0).setConstant(0.5);
    out.entries.col(0).setConstant(0.5);
    return out;
}

RealizedNetwork sample_bernoulli(const ExpectedMatrix& expected, std::uint64_t seed) {
    expected.validate();
    if ((expected.entries.array() > 1.0).any())
        throw std::invalid_argument("bernoulli sampling requires entries <= 1");
    RealizedNetwork out;
    out.n = expected.n;
    out.seed = seed;
    for (int i = 0; i < expected.n; ++i)
        for (int j = i + 1; j < expected.n; ++j)
            if (rng::pair_uniform(seed, i, j) < expected.entries(i, j))
                out.edges.push_back({i, j, 1.0});
    return out;
}

RealizedNetwork sample_weighted_uniform(const WeightedIntervalModel& model, int n,
                                        std::uint64_t seed) {
    model.validate();
    const std::vector<int> g = group_assignment(model.shares, n);
    RealizedNetwork out;
    out.n = n;
    out.seed = seed;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double lo = model.lower(g[i], g[j]);
            const double hi = model.upper(g[i], g[j]);
            const double w = lo + (hi - lo) * rng::pair_uniform(seed, i, j);
            if (w > 0.0) out.edges.push_back({i, j, w});
        }
    return out;
}

RealizedNetwork sample_clustered(const ClusteredModel& model, int n, std::uint64_t seed) {
    model.validate();
    if (n < 3) throw std::invalid_argument("clustered sampling requires n >= 3");
    const std::vector<int> g = group_assignment(model.base.shares, n);
    // Dyad indicators use the same pair stream as sample_bernoulli, so zero
    // triangle probabilities reproduce the pure Bernoulli draw bit-for-bit.
    Matrix weight = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng::pair_uniform(seed, i, j) < model.base.probs(g[i], g[j]))
                weight(i, j) += 1.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                const double p = model.triangle_probs[g[i]][g[j]][g[k]];
                if (p > 0.0 && rng::triangle_uniform(seed, i, j, k) < p) {
                    weight(i, j) += 1.0;
                    weight(i, k) += 1.0;
                    weight(j, k) += 1.0;
                }
            }
    RealizedNetwork out;
    out.n = n;
    out.seed = seed;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (weight(i, j) > 0.0) out.edges.push_back({i, j, weight(i, j)});
    return out;
}

ExpectedMatrix clustered_expected(const ClusteredModel& model, int n) {
    model.validate();
    if (n < 3) throw std::invalid_argument("clustered model requires n >= 3");
    const std::vector<int> g = group_assignment(model.base.shares, n);
    ExpectedMatrix out;
    out.n = n;
    out.group_of = g;
    out.entries.resize(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double e = model.base.probs(g[i], g[j]);
            for (int k = 0; k < n; ++k)
                if (k != i && k != j) e += model.triangle_probs[g[i]][g[j]][g[k]];
            out.entries(i, j) = e;
        }
    return out;
}

}  // namespace netcent
