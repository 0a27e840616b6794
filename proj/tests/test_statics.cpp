#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "netcent/errors.hpp"
#include "netcent/statics.hpp"

#include <cmath>

using namespace netcent;

namespace {

Vector make_shares(std::initializer_list<double> values) {
    Vector v(static_cast<int>(values.size()));
    int i = 0;
    for (double x : values) v[i++] = x;
    return v;
}

}  // namespace

TEST_CASE("closed-form centrality ratios match the block solvers") {
    const BlockModel model =
        BlockModel::two_probability(make_shares({0.5, 0.3, 0.2}), 0.5, 0.1);
    const int n = 200;

    const BlockCentrality eig = block_eigenvector_centrality(model, n);
    for (int l = 0; l < 3; ++l)
        for (int lp = 0; lp < 3; ++lp) {
            const double ratio =
                group_centrality_ratio(model, n, l, lp, CentralityKind::Eigenvector);
            CHECK(ratio ==
                  doctest::Approx(eig.group_values[l] / eig.group_values[lp]).epsilon(1e-10));
        }

    const double phi = 0.004;
    const BlockCentrality katz = block_katz_centrality(model, n, phi);
    for (int l = 0; l < 3; ++l)
        for (int lp = 0; lp < 3; ++lp) {
            const double ratio =
                group_centrality_ratio(model, n, l, lp, CentralityKind::Katz, phi);
            CHECK(ratio ==
                  doctest::Approx(katz.group_values[l] / katz.group_values[lp]).epsilon(1e-10));
        }

    BlockModel general = model;
    general.probs(0, 1) = general.probs(1, 0) = 0.2;
    CHECK_THROWS_AS(group_centrality_ratio(general, n, 0, 1, CentralityKind::Katz, phi),
                    std::invalid_argument);
}

TEST_CASE("larger groups are more central under homophily") {
    // Cross-check against the raw 2x2 reduced eigenproblem: for shares
    // (.7, .3), p_s = .5, p_d = .1, n = 100 the reduced matrix [[35, 3], [7, 15]]
    // has lambda1 = 36 and v_0 / v_1 = 3 / (36 - 35) = 3.
    const BlockModel model = BlockModel::two_probability(make_shares({0.7, 0.3}), 0.5, 0.1);
    const double r = group_centrality_ratio(model, 100, 0, 1, CentralityKind::Eigenvector);
    CHECK(r == doctest::Approx(3.0).epsilon(1e-10));
    CHECK(group_centrality_ratio(model, 100, 1, 0, CentralityKind::Eigenvector) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("ratio elasticity matches numerical differentiation of the ratio") {
    const BlockModel model = BlockModel::two_probability(make_shares({0.6, 0.4}), 0.4, 0.15);
    const int n = 150;
    const double phi = 0.005;
    const double h = 1e-7;

    // Katz: the ratio formula is exact, so a central difference in p_s (and
    // p_d) of the ratio itself is an independent oracle.
    for (auto [wrt, sign] : {std::pair{ProbParameter::WithinGroup, +1.0},
                             std::pair{ProbParameter::BetweenGroup, -1.0}}) {
        auto ratio_at = [&](double ps, double pd) {
            const BlockModel shifted =
                BlockModel::two_probability(model.shares, ps, pd);
            return group_centrality_ratio(shifted, n, 0, 1, CentralityKind::Katz, phi);
        };
        const double fd = wrt == ProbParameter::WithinGroup
                              ? (ratio_at(0.4 + h, 0.15) - ratio_at(0.4 - h, 0.15)) / (2 * h)
                              : (ratio_at(0.4, 0.15 + h) - ratio_at(0.4, 0.15 - h)) / (2 * h);
        const double value = ratio_elasticity(model, n, 0, 1, wrt, CentralityKind::Katz, phi);
        CHECK(value == doctest::Approx(fd).epsilon(1e-5));
        CHECK(sign * value >= 0.0);  // majority/minority gap widens in p_s
    }

    // Eigenvector: derivative holds lambda1 fixed; differentiate the defining
    // expression with a frozen eigenvalue as the oracle.
    const auto sizes = group_sizes(model.shares, n);
    const Matrix p = reduced_block_matrix(model, n);
    const double lambda1 = top_eigenpair(LinearOperator::from(p)).value;
    auto frozen_ratio = [&](double x) {
        return (1.0 - sizes[1] * x / lambda1) / (1.0 - sizes[0] * x / lambda1);
    };
    const double x0 = 0.4 - 0.15;
    const double fd_eig = (frozen_ratio(x0 + h) - frozen_ratio(x0 - h)) / (2 * h);
    CHECK(ratio_elasticity(model, n, 0, 1, ProbParameter::WithinGroup,
                           CentralityKind::Eigenvector) ==
          doctest::Approx(fd_eig).epsilon(1e-5));

    // Antisymmetry between the two parameters.
    CHECK(ratio_elasticity(model, n, 0, 1, ProbParameter::WithinGroup, CentralityKind::Katz,
                           phi) ==
          -ratio_elasticity(model, n, 0, 1, ProbParameter::BetweenGroup, CentralityKind::Katz,
                            phi));
}

TEST_CASE("katz derivative: single-group closed form") {
    // m = 1: c = 1 / (1 - phi n p), so dc/dp = phi n / (1 - phi n p)^2.
    const BlockModel model = BlockModel::two_probability(make_shares({1.0}), 0.2, 0.2);
    const int n = 50;
    const double phi = 0.05;  // phi n p = 0.5
    const double expected = phi * n / std::pow(1.0 - phi * n * 0.2, 2.0);
    CHECK(katz_derivative_closed(model, n, 0, 0, 0, phi) ==
          doctest::Approx(expected).epsilon(1e-12));
    CHECK(katz_derivative_walks(model, n, 0, 0, 0, phi) ==
          doctest::Approx(expected).epsilon(1e-9));
    CHECK(finite_difference_derivative(model, n, 0, 0, 0, phi, 1e-5) ==
          doctest::Approx(expected).epsilon(1e-6));
}

TEST_CASE("katz derivative triple agreement on a two-group model") {
    const BlockModel model = BlockModel::two_probability(make_shares({0.6, 0.4}), 0.5, 0.1);
    const int n = 120;
    const Matrix p = reduced_block_matrix(model, n);
    const double lambda1 = top_eigenpair(LinearOperator::from(p)).value;
    const double phi = 0.4 / lambda1;
    for (int l = 0; l < 2; ++l)
        for (int i = 0; i < 2; ++i)
            for (int j = i; j < 2; ++j) {
                const DerivativeReport report = derivative_report(model, n, l, i, j, phi);
                CHECK(report.agreement < 1e-6);
                CHECK(report.closed_form_value > 0.0);
            }
}

TEST_CASE("derivative edge cases") {
    const BlockModel model = BlockModel::two_probability(make_shares({0.6, 0.4}), 0.5, 0.1);
    CHECK(katz_derivative_closed(model, 100, 0, 0, 1, 0.0) == 0.0);
    CHECK_THROWS_AS(katz_derivative_closed(model, 100, 0, 0, 1, 1.0), InfeasiblePhi);
    CHECK_THROWS_AS(katz_derivative_closed(model, 100, 5, 0, 1, 0.001),
                    std::invalid_argument);
    CHECK_THROWS_AS(finite_difference_derivative(model, 100, 0, 0, 1, 0.001, -1.0),
                    std::invalid_argument);
}

TEST_CASE("two-group eigenvector closed form") {
    TwoGroupSpec spec;
    spec.s1 = 0.75;
    spec.p_same = 0.5;
    spec.p_diff = 0.1;
    spec.n = 400;  // s1 n integral, so rounding is exact
    const TwoGroupEigvec out = two_group_eigvec_closed_form(spec);

    const BlockModel model =
        BlockModel::two_probability(make_shares({0.75, 0.25}), 0.5, 0.1);
    const BlockCentrality eig = block_eigenvector_centrality(model, spec.n);
    CHECK(out.minority_ratio ==
          doctest::Approx(eig.group_values[1] / eig.group_values[0]).epsilon(1e-10));
    CHECK(out.minority_ratio < 1.0);  // minority members are less central
    CHECK(out.minority_ratio > 0.0);

    // T(s) equals the entry total with majority entries normalized to one.
    CHECK(out.total == doctest::Approx(spec.n * (spec.s1 + (1.0 - spec.s1) * out.minority_ratio))
                           .epsilon(1e-12));

    spec.s1 = 0.4;
    CHECK_THROWS_AS(two_group_eigvec_closed_form(spec), std::invalid_argument);
}

TEST_CASE("group size threshold") {
    CHECK(group_size_threshold(0.5, 0.1) == doctest::Approx(0.64434).epsilon(1e-4));
    // p_s = p_d collapses to 1/2 + 1/4.
    CHECK(group_size_threshold(0.3, 0.3) == doctest::Approx(0.75).epsilon(1e-12));
    CHECK_THROWS_AS(group_size_threshold(0.5, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(group_size_threshold(0.1, 0.5), std::invalid_argument);

    // The threshold is the unique interior critical point of the eigenvector
    // entry total T(s): T falls below it and rises above it.
    const double sbar = group_size_threshold(0.5, 0.1);
    auto total_at = [](double s) {
        TwoGroupSpec spec;
        spec.s1 = s;
        spec.p_same = 0.5;
        spec.p_diff = 0.1;
        spec.n = 1000;
        return two_group_eigvec_closed_form(spec).total;
    };
    CHECK(total_at(sbar - 0.02) > total_at(sbar - 0.01));
    CHECK(total_at(sbar - 0.01) > total_at(sbar));
    CHECK(total_at(sbar + 0.01) < total_at(sbar + 0.02));
    CHECK(total_at(sbar) < total_at(sbar + 0.01));
}
