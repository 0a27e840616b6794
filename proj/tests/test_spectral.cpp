#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "netcent/errors.hpp"
#include "netcent/netmodel.hpp"
#include "netcent/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <random>

using namespace netcent;

namespace {

Vector make_shares(std::initializer_list<double> values) {
    Vector v(static_cast<int>(values.size()));
    int i = 0;
    for (double x : values) v[i++] = x;
    return v;
}

Matrix random_symmetric_nonnegative(int n, unsigned seed) {
    std::mt19937 gen(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    Matrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) a(i, j) = a(j, i) = unif(gen);
    return a;
}

}  // namespace

TEST_CASE("top eigenpair on closed-form cases") {
    // Two-agent exchange matrix: lambda = 1, uniform eigenvector.
    ExpectedMatrix swap;
    swap.n = 2;
    swap.entries = (Matrix(2, 2) << 0.0, 1.0, 1.0, 0.0).finished();
    const EigenPair pair = top_eigenpair(swap);
    CHECK(pair.value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(pair.vector[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(pair.vector[1] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(pair.residual <= kDefaultTol);

    // Expected ER matrix is rank one: lambda1 = n p exactly, uniform vector.
    const BlockModel er = BlockModel::two_probability(make_shares({1.0}), 0.2, 0.2);
    const ExpectedMatrix expected = build_expected_sbm(er, 50);
    const EigenPair top = top_eigenpair(expected);
    CHECK(top.value == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(std::abs(top.vector.norm() - 1.0) <= 1e-12);
    for (int i = 0; i < 50; ++i)
        CHECK(top.vector[i] == doctest::Approx(1.0 / std::sqrt(50.0)).epsilon(1e-10));
}

TEST_CASE("top eigenpair matches a dense eigensolver on random matrices") {
    for (unsigned seed : {1u, 2u, 3u, 4u}) {
        const Matrix a = random_symmetric_nonnegative(30, seed);
        const EigenPair pair = top_eigenpair(LinearOperator::from(a));
        Eigen::SelfAdjointEigenSolver<Matrix> solver(a);
        const double lambda_ref = solver.eigenvalues().maxCoeff();
        Vector v_ref = solver.eigenvectors().col(29);
        if (v_ref.sum() < 0.0) v_ref = -v_ref;
        CHECK(pair.value == doctest::Approx(lambda_ref).epsilon(1e-9));
        CHECK((pair.vector - v_ref).norm() < 1e-7);
        CHECK(pair.residual <= kDefaultTol);
        CHECK(pair.vector.minCoeff() > -1e-9);  // Perron vector is nonnegative
    }
}

TEST_CASE("zero matrix is rejected") {
    ExpectedMatrix zero;
    zero.n = 3;
    zero.entries = Matrix::Zero(3, 3);
    CHECK_THROWS_AS(top_eigenpair(zero), std::invalid_argument);
}

TEST_CASE("second eigenvalue by deflation") {
    Matrix a = (Matrix(2, 2) << 2.0, 1.0, 1.0, 2.0).finished();  // spectrum {3, 1}
    const LinearOperator op = LinearOperator::from(a);
    CHECK(second_eigenvalue(op) == doctest::Approx(1.0).epsilon(1e-9));

    // Deflation reports |lambda2| even when lambda2 is negative.
    Matrix b = (Matrix(2, 2) << 0.0, 2.0, 2.0, 0.0).finished();  // spectrum {2, -2}
    // Power iteration cannot separate a tie in |.|; use a slightly asymmetric case.
    Matrix c = (Matrix(3, 3) << 0.0, 2.0, 0.1, 2.0, 0.0, 0.1, 0.1, 0.1, 0.0).finished();
    Eigen::SelfAdjointEigenSolver<Matrix> solver(c);
    const Vector ev = solver.eigenvalues();
    double second = 0.0;
    double top = ev.maxCoeff();
    for (int i = 0; i < 3; ++i)
        if (ev[i] != top) second = std::max(second, std::abs(ev[i]));
    const LinearOperator opc = LinearOperator::from(c);
    CHECK(second_eigenvalue(opc) == doctest::Approx(second).epsilon(1e-8));
    (void)b;
}

TEST_CASE("katz bonacich closed-form and solver oracle") {
    ExpectedMatrix swap;
    swap.n = 2;
    swap.entries = (Matrix(2, 2) << 0.0, 1.0, 1.0, 0.0).finished();
    // c = (I - phi A)^-1 1 with phi = 1/2 gives c = (2, 2).
    const KatzResult katz = katz_bonacich(swap, 0.5);
    CHECK(katz.scores[0] == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(katz.scores[1] == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(katz.residual <= kDefaultTol);

    CHECK(katz_bonacich(swap, 0.0).scores.isApprox(Vector::Ones(2), 0.0));

    // Dense LU oracle on a sampled network.
    const BlockModel er = BlockModel::two_probability(make_shares({1.0}), 0.1, 0.1);
    const ExpectedMatrix expected = build_expected_sbm(er, 200);
    const RealizedNetwork net = sample_bernoulli(expected, 17);
    const double lambda1 = top_eigenpair(net).value;
    const double phi = 0.5 / lambda1;
    const Vector scores = katz_bonacich(net, phi).scores;
    const Matrix dense = net.dense();
    const Vector oracle = (Matrix::Identity(200, 200) - phi * dense)
                              .partialPivLu()
                              .solve(Vector::Ones(200));
    CHECK((scores - oracle).norm() < 1e-9);
}

TEST_CASE("infeasible phi raises with the computed lambda1") {
    const BlockModel er = BlockModel::two_probability(make_shares({1.0}), 0.2, 0.2);
    const ExpectedMatrix expected = build_expected_sbm(er, 50);  // lambda1 = 10
    CHECK_THROWS_AS(katz_bonacich(expected, 0.11), InfeasiblePhi);
    try {
        katz_bonacich(expected, 0.11);
    } catch (const InfeasiblePhi& e) {
        CHECK(std::string(e.what()).find("phi infeasible") != std::string::npos);
        CHECK(e.lambda1 == doctest::Approx(10.0).epsilon(1e-9));
    }
    CHECK_THROWS_AS(katz_bonacich(expected, -0.1), std::invalid_argument);
}

TEST_CASE("reduced block matrix") {
    const BlockModel model = BlockModel::two_probability(make_shares({0.6, 0.4}), 0.5, 0.1);
    const Matrix p = reduced_block_matrix(model, 10);  // sizes 6, 4
    CHECK(p(0, 0) == 6 * 0.5);
    CHECK(p(0, 1) == 4 * 0.1);
    CHECK(p(1, 0) == 6 * 0.1);
    CHECK(p(1, 1) == 4 * 0.5);
}

TEST_CASE("block-reduced centralities agree with the dense n x n computation") {
    const BlockModel model = BlockModel::two_probability(make_shares({0.5, 0.3, 0.2}), 0.5, 0.1);
    const int n = 100;
    const ExpectedMatrix expected = build_expected_sbm(model, n);

    const Vector dense_eig = top_eigenpair(expected).vector;
    const Vector block_eig = block_eigenvector_centrality(model, n).expand();
    CHECK((dense_eig - block_eig).norm() <= 1e-10);

    const double lambda1 = top_eigenpair(expected).value;
    const double phi = 0.5 / lambda1;
    const Vector dense_katz = katz_bonacich(expected, phi).scores;
    const Vector block_katz = block_katz_centrality(model, n, phi).expand();
    CHECK((dense_katz - block_katz).norm() <= 1e-10);

    CHECK_THROWS_AS(block_katz_centrality(model, n, 1.0), InfeasiblePhi);
}

TEST_CASE("diagnostics on the expected ER matrix") {
    const BlockModel er = BlockModel::two_probability(make_shares({1.0}), 0.25, 0.25);
    const ExpectedMatrix expected = build_expected_sbm(er, 100);
    const SpectralDiagnostics d = diagnostics(expected);
    CHECK(d.lambda1 == doctest::Approx(25.0).epsilon(1e-12));
    CHECK(d.lambda2 < 1e-8);  // rank-one matrix
    CHECK(d.gap_ratio == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(d.max_expected_degree == doctest::Approx(25.0).epsilon(1e-12));
    CHECK(d.large_eig_ratio ==
          doctest::Approx(25.0 / std::sqrt(25.0 * std::log(100.0))).epsilon(1e-12));
    // lambda1^2 = (min entry) * (sum of entries) holds with equality here.
    CHECK(d.leveq_lhs == doctest::Approx(d.leveq_rhs).epsilon(1e-12));
    CHECK(d.leveq_lhs >= d.leveq_rhs * (1.0 - 1e-12));
}
