#include "netcent/statics.hpp"

#include "netcent/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace netcent {

namespace {

// Top eigenvalue of the reduced matrix P through its symmetrization.
double reduced_lambda1(const BlockModel& model, const std::vector<int>& sizes) {
    Matrix s(model.m, model.m);
    for (int i = 0; i < model.m; ++i)
        for (int j = 0; j < model.m; ++j)
            s(i, j) = std::sqrt(static_cast<double>(sizes[i]) * sizes[j]) * model.probs(i, j);
    Eigen::SelfAdjointEigenSolver<Matrix> solver(s);
    return solver.eigenvalues().maxCoeff();
}

struct TwoProbSetup {
    std::vector<int> sizes;
    double p_same;
    double p_diff;
};

TwoProbSetup require_two_probability(const BlockModel& model, int n) {
    model.validate();
    TwoProbSetup setup;
    if (!model.is_two_probability(&setup.p_same, &setup.p_diff))
        throw std::invalid_argument("operation requires the two-probability (p_s/p_d) form");
    setup.sizes = group_sizes(model.shares, n);
    return setup;
}

void check_group(const BlockModel& model, int g) {
    if (g < 0 || g >= model.m) throw std::invalid_argument("group index out of range");
}

}  // namespace

void TwoGroupSpec::validate() const {
    if (!(s1 > 0.5 && s1 < 1.0))
        throw std::invalid_argument("two-group spec: s1 must lie in (1/2, 1)");
    if (!(p_same > p_diff && p_diff > 0.0))
        throw std::invalid_argument("two-group spec: requires p_s > p_d > 0");
    if (n < 2) throw std::invalid_argument("two-group spec: n must be at least 2");
}

double group_centrality_ratio(const BlockModel& model, int n, int group_l, int group_lp,
                              CentralityKind kind, double phi) {
    const TwoProbSetup setup = require_two_probability(model, n);
    check_group(model, group_l);
    check_group(model, group_lp);
    const double x = setup.p_same - setup.p_diff;
    const double size_l = setup.sizes[group_l];
    const double size_lp = setup.sizes[group_lp];
    if (kind == CentralityKind::Eigenvector) {
        const double inv_lambda = 1.0 / reduced_lambda1(model, setup.sizes);
        return (1.0 - inv_lambda * size_lp * x) / (1.0 - inv_lambda * size_l * x);
    }
    // Feasibility check shares the block solver's convention.
    block_katz_centrality(model, n, phi);
    return (1.0 - size_lp * x * phi) / (1.0 - size_l * x * phi);
}

double ratio_elasticity(const BlockModel& model, int n, int group_l, int group_lp,
                        ProbParameter wrt, CentralityKind kind, double phi) {
    const TwoProbSetup setup = require_two_probability(model, n);
    check_group(model, group_l);
    check_group(model, group_lp);
    const double x = setup.p_same - setup.p_diff;
    const double size_l = setup.sizes[group_l];
    const double size_lp = setup.sizes[group_lp];
    double value;
    if (kind == CentralityKind::Eigenvector) {
        const double inv_lambda = 1.0 / reduced_lambda1(model, setup.sizes);
        const double denom = 1.0 - inv_lambda * size_l * x;
        value = inv_lambda * (size_l - size_lp) / (denom * denom);
    } else {
        block_katz_centrality(model, n, phi);
        const double denom = 1.0 - size_l * x * phi;
        value = (size_l - size_lp) * phi / (denom * denom);
    }
    return wrt == ProbParameter::WithinGroup ? value : -value;
}

double katz_derivative_walks(const BlockModel& model, int n, int group_l, int wrt_i,
                             int wrt_j, double phi, double tol) {
    model.validate();
    check_group(model, group_l);
    check_group(model, wrt_i);
    check_group(model, wrt_j);
    if (phi < 0.0) throw std::invalid_argument("katz_derivative_walks: phi must be nonnegative");
    const double p_pair = model.probs(wrt_i, wrt_j);
    if (p_pair == 0.0) throw ZeroProbability("katz_derivative_walks: p_{ii'} is zero");
    if (phi == 0.0) return 0.0;

    const std::vector<int> sizes = group_sizes(model.shares, n);
    const Matrix p = reduced_block_matrix(model, n);
    const double lambda1 = reduced_lambda1(model, sizes);
    const double r = phi * lambda1;
    if (r > 1.0 - kPhiMargin) throw InfeasiblePhi(phi, lambda1);

    // State: phi-discounted weight of group-level walks from group_l of
    // length k ending in each group (plain, and weighted by the count f of
    // i<->j transitions). Folding phi into each step keeps the state of order
    // r^k instead of lambda1^k, which would overflow for long walks.
    Vector plain = Vector::Zero(model.m);
    plain[group_l] = 1.0;
    Vector f_weighted = Vector::Zero(model.m);

    // Tail of the series after term k is at most
    // sum_{j>0} (k + j) r^j * term_k / k, bounded via the geometric sums below.
    const double tail_factor = r / (1.0 - r) + r / ((1.0 - r) * (1.0 - r));

    double total = 0.0;
    const int max_terms = 4000000;
    for (int k = 1; k <= max_terms; ++k) {
        Vector plain_next = Vector::Zero(model.m);
        Vector f_next = Vector::Zero(model.m);
        for (int g = 0; g < model.m; ++g) {
            if (plain[g] == 0.0 && f_weighted[g] == 0.0) continue;
            for (int h = 0; h < model.m; ++h) {
                const double step = phi * p(g, h);
                if (step == 0.0) continue;
                plain_next[h] += plain[g] * step;
                f_next[h] += f_weighted[g] * step;
                const bool crossing = (g == wrt_i && h == wrt_j) || (g == wrt_j && h == wrt_i);
                if (crossing) f_next[h] += plain[g] * step;
            }
        }
        plain = std::move(plain_next);
        f_weighted = std::move(f_next);
        const double term = f_weighted.sum();
        total += term;
        if (k > 8 && term * tail_factor < tol * p_pair) break;
    }
    return total / p_pair;
}

double katz_derivative_closed(const BlockModel& model, int n, int group_l, int wrt_i,
                              int wrt_j, double phi) {
    model.validate();
    check_group(model, group_l);
    check_group(model, wrt_i);
    check_group(model, wrt_j);
    if (phi < 0.0) throw std::invalid_argument("katz_derivative_closed: phi must be nonnegative");
    if (phi == 0.0) return 0.0;
    const std::vector<int> sizes = group_sizes(model.shares, n);
    const double lambda1 = reduced_lambda1(model, sizes);
    if (phi * lambda1 > 1.0 - kPhiMargin) throw InfeasiblePhi(phi, lambda1);
    const Matrix p = reduced_block_matrix(model, n);
    const Matrix resolvent =
        (Matrix::Identity(model.m, model.m) - phi * p).partialPivLu().inverse();
    const Vector c = resolvent * Vector::Ones(model.m);
    if (wrt_i == wrt_j)
        // Within-group case: the generic two-term formula would double count
        // the single perturbed block.
        return phi * sizes[wrt_i] * resolvent(group_l, wrt_i) * c[wrt_i];
    return phi * (sizes[wrt_j] * resolvent(group_l, wrt_i) * c[wrt_j] +
                  sizes[wrt_i] * resolvent(group_l, wrt_j) * c[wrt_i]);
}

double finite_difference_derivative(const BlockModel& model, int n, int group_l, int wrt_i,
                                    int wrt_j, double phi, double step) {
    model.validate();
    check_group(model, group_l);
    check_group(model, wrt_i);
    check_group(model, wrt_j);
    if (step <= 0.0) throw std::invalid_argument("finite difference step must be positive");
    const double p = model.probs(wrt_i, wrt_j);
    const double h = std::min({step, p / 2.0, (1.0 - p) / 2.0 + 1e-300});
    if (h <= 0.0) throw std::invalid_argument("finite difference step collapsed to zero");

    auto evaluate = [&](double value) {
        BlockModel perturbed = model;
        perturbed.probs(wrt_i, wrt_j) = value;
        perturbed.probs(wrt_j, wrt_i) = value;
        return block_katz_centrality(perturbed, n, phi).group_values[group_l];
    };
    return (evaluate(p + h) - evaluate(p - h)) / (2.0 * h);
}

DerivativeReport derivative_report(const BlockModel& model, int n, int group_l, int wrt_i,
                                   int wrt_j, double phi, double step) {
    DerivativeReport report;
    report.target_group = group_l;
    report.wrt_i = wrt_i;
    report.wrt_j = wrt_j;
    report.phi = phi;
    report.walk_sum_value = katz_derivative_walks(model, n, group_l, wrt_i, wrt_j, phi);
    report.closed_form_value = katz_derivative_closed(model, n, group_l, wrt_i, wrt_j, phi);
    report.finite_diff_value = finite_difference_derivative(
        model, n, group_l, wrt_i, wrt_j, phi, step * model.probs(wrt_i, wrt_j));
    const double scale = std::max({std::abs(report.walk_sum_value),
                                   std::abs(report.closed_form_value),
                                   std::abs(report.finite_diff_value), 1e-300});
    const double spread = std::max({report.walk_sum_value, report.closed_form_value,
                                    report.finite_diff_value}) -
                          std::min({report.walk_sum_value, report.closed_form_value,
                                    report.finite_diff_value});
    report.agreement = spread / scale;
    return report;
}

TwoGroupEigvec two_group_eigvec_closed_form(const TwoGroupSpec& spec) {
    spec.validate();
    const double s1 = spec.s1, ps = spec.p_same, pd = spec.p_diff;
    const double disc = (1.0 - 2.0 * s1) * (1.0 - 2.0 * s1) * ps * ps +
                        4.0 * s1 * (1.0 - s1) * pd * pd;
    const double numerator = (1.0 - 2.0 * s1) * ps + std::sqrt(disc);
    TwoGroupEigvec out;
    out.minority_ratio = numerator / ((2.0 - 2.0 * s1) * pd);
    out.total = s1 * spec.n + numerator / (2.0 * pd) * spec.n;
    return out;
}

double group_size_threshold(double p_same, double p_diff) {
    if (p_diff <= 0.0) throw std::invalid_argument("group_size_threshold: p_d must be positive");
    if (p_same < p_diff)
        throw std::invalid_argument("group_size_threshold: requires p_s >= p_d");
    return 0.5 + p_diff / (2.0 * std::sqrt(2.0 * p_diff * p_diff + 2.0 * p_same * p_diff));
}

}  // namespace netcent
