#include "netcent/spectral.hpp"

#include "netcent/errors.hpp"
#include "netcent/rng.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>

namespace netcent {

namespace {

void orient(Vector& v) {
    const double sum = v.sum();
    if (sum < 0.0) {
        v = -v;
    } else if (sum == 0.0) {
        for (int i = 0; i < v.size(); ++i) {
            if (v[i] != 0.0) {
                if (v[i] < 0.0) v = -v;
                break;
            }
        }
    }
}

// Deterministic pseudo-random unit vector for deflation restarts.
Vector restart_vector(int n, int attempt) {
    Vector v(n);
    for (int i = 0; i < n; ++i)
        v[i] = rng::to_unit(rng::combine(rng::combine(rng::kRestartStream, attempt), i)) - 0.5;
    v.normalize();
    return v;
}

// Power iteration core; returns false when the iterate stalls out of budget.
bool power_iterate(const LinearOperator& op, Vector& x, double tol, int max_iter,
                   double* value, double* residual, int* iterations) {
    Vector ax(op.n);
    for (int it = 1; it <= max_iter; ++it) {
        op.apply(x, ax);
        const double norm = ax.norm();
        if (norm == 0.0) {
            // x is in the kernel; the dominant eigenvalue along this start is 0.
            *value = 0.0;
            *residual = 0.0;
            *iterations = it;
            return true;
        }
        const double lambda = x.dot(ax);
        const double res = (ax - lambda * x).norm();
        x = ax / norm;
        if (res <= tol) {
            *value = lambda;
            *residual = res;
            *iterations = it;
            return true;
        }
        if (it == max_iter) {
            *value = lambda;
            *residual = res;
            *iterations = it;
        }
    }
    return false;
}

}  // namespace

LinearOperator LinearOperator::from(const ExpectedMatrix& m) {
    return {m.n, [&m](const Vector& x, Vector& y) { y.noalias() = m.entries * x; }};
}

LinearOperator LinearOperator::from(const RealizedNetwork& a) {
    return {a.n, [&a](const Vector& x, Vector& y) { a.multiply(x, y); }};
}

LinearOperator LinearOperator::from(const Matrix& m) {
    return {static_cast<int>(m.rows()),
            [&m](const Vector& x, Vector& y) { y.noalias() = m * x; }};
}

EigenPair top_eigenpair(const LinearOperator& op, double tol, int max_iter) {
    if (op.n < 1) throw std::invalid_argument("top_eigenpair: empty operator");
    Vector x = Vector::Constant(op.n, 1.0 / std::sqrt(static_cast<double>(op.n)));
    Vector probe(op.n);
    op.apply(x, probe);
    if (probe.norm() == 0.0)
        throw std::invalid_argument("top_eigenpair: zero matrix");
    EigenPair out;
    if (!power_iterate(op, x, tol, max_iter, &out.value, &out.residual, &out.iterations))
        throw NonConvergence(max_iter, out.residual);
    orient(x);
    out.vector = std::move(x);
    return out;
}

EigenPair top_eigenpair(const ExpectedMatrix& m, double tol, int max_iter) {
    return top_eigenpair(LinearOperator::from(m), tol, max_iter);
}

EigenPair top_eigenpair(const RealizedNetwork& a, double tol, int max_iter) {
    return top_eigenpair(LinearOperator::from(a), tol, max_iter);
}

double second_eigenvalue(const LinearOperator& op, const EigenPair& top, double tol,
                         int max_iter) {
    const Vector& v1 = top.vector;
    const double lambda1 = top.value;
    LinearOperator deflated{op.n, [&op, &v1, lambda1](const Vector& x, Vector& y) {
                                op.apply(x, y);
                                y -= lambda1 * v1.dot(x) * v1;
                            }};
    double value = 0.0, residual = 0.0;
    int iterations = 0;
    for (int attempt = 0; attempt < 3; ++attempt) {
        Vector x = restart_vector(op.n, attempt);
        x -= v1.dot(x) * v1;  // start orthogonal to the top eigenvector
        if (x.norm() == 0.0) continue;
        x.normalize();
        if (power_iterate(deflated, x, tol, max_iter, &value, &residual, &iterations))
            return std::abs(value);
    }
    throw NonConvergence(max_iter, residual);
}

double second_eigenvalue(const LinearOperator& op, double tol, int max_iter) {
    return second_eigenvalue(op, top_eigenpair(op, tol, max_iter), tol, max_iter);
}

Vector eigenvector_centrality(const LinearOperator& op, double tol, int max_iter) {
    return top_eigenpair(op, tol, max_iter).vector;
}

KatzResult katz_bonacich(const LinearOperator& op, double phi, double tol, int max_terms,
                         double margin) {
    if (phi < 0.0) throw std::invalid_argument("katz_bonacich: phi must be nonnegative");
    KatzResult out;
    out.phi = phi;
    if (phi == 0.0) {
        out.scores = Vector::Ones(op.n);
        out.residual = 0.0;
        return out;
    }
    const double lambda1 = top_eigenpair(op).value;
    const double r = phi * lambda1;
    if (r > 1.0 - margin) throw InfeasiblePhi(phi, lambda1);

    // Smallest K with r^{K+1} / (1 - r) * sqrt(n) < tol.
    const double sqrt_n = std::sqrt(static_cast<double>(op.n));
    int terms = 1;
    if (r > 0.0) {
        const double need = std::log(tol * (1.0 - r) / sqrt_n) / std::log(r);
        terms = static_cast<int>(std::ceil(need));
        if (terms < 1) terms = 1;
        if (terms > max_terms) terms = max_terms;
    }

    Vector c = Vector::Ones(op.n);
    Vector t = Vector::Ones(op.n);
    Vector at(op.n);
    for (int k = 1; k <= terms; ++k) {
        op.apply(t, at);
        t = phi * at;
        c += t;
    }
    op.apply(c, at);
    out.residual = (c - phi * at - Vector::Ones(op.n)).norm();
    out.scores = std::move(c);
    return out;
}

KatzResult katz_bonacich(const ExpectedMatrix& m, double phi, double tol, int max_terms,
                         double margin) {
    return katz_bonacich(LinearOperator::from(m), phi, tol, max_terms, margin);
}

KatzResult katz_bonacich(const RealizedNetwork& a, double phi, double tol, int max_terms,
                         double margin) {
    return katz_bonacich(LinearOperator::from(a), phi, tol, max_terms, margin);
}

Matrix reduced_block_matrix(const BlockModel& model, int n) {
    model.validate();
    const std::vector<int> sizes = group_sizes(model.shares, n);
    Matrix p(model.m, model.m);
    for (int i = 0; i < model.m; ++i)
        for (int j = 0; j < model.m; ++j) p(i, j) = sizes[j] * model.probs(i, j);
    return p;
}

Vector BlockCentrality::expand() const {
    int n = 0;
    for (int s : sizes) n += s;
    Vector out(n);
    int at = 0;
    for (std::size_t g = 0; g < sizes.size(); ++g) {
        out.segment(at, sizes[g]).setConstant(group_values[static_cast<int>(g)]);
        at += sizes[g];
    }
    return out;
}

BlockCentrality block_eigenvector_centrality(const BlockModel& model, int n) {
    model.validate();
    const std::vector<int> sizes = group_sizes(model.shares, n);
    // P = probs * diag(sizes) is similar to the symmetric matrix
    // S = D^{1/2} probs D^{1/2} with D = diag(sizes); solve S and map back.
    Matrix s(model.m, model.m);
    for (int i = 0; i < model.m; ++i)
        for (int j = 0; j < model.m; ++j)
            s(i, j) = std::sqrt(static_cast<double>(sizes[i]) * sizes[j]) * model.probs(i, j);
    Eigen::SelfAdjointEigenSolver<Matrix> solver(s);
    Vector u = solver.eigenvectors().col(model.m - 1);
    Vector w(model.m);
    for (int g = 0; g < model.m; ++g) w[g] = u[g] / std::sqrt(static_cast<double>(sizes[g]));
    // Normalize over the full population: sum_g sizes[g] * w_g^2 = 1.
    double norm_sq = 0.0;
    for (int g = 0; g < model.m; ++g) norm_sq += sizes[g] * w[g] * w[g];
    w /= std::sqrt(norm_sq);
    double total = 0.0;
    for (int g = 0; g < model.m; ++g) total += sizes[g] * w[g];
    if (total < 0.0) w = -w;
    return {std::move(w), sizes};
}

BlockCentrality block_katz_centrality(const BlockModel& model, int n, double phi,
                                      double margin) {
    model.validate();
    if (phi < 0.0) throw std::invalid_argument("block_katz_centrality: phi must be nonnegative");
    const std::vector<int> sizes = group_sizes(model.shares, n);
    const Matrix p = reduced_block_matrix(model, n);
    if (phi > 0.0) {
        // lambda1 of P equals lambda1 of the symmetrized matrix.
        Matrix s(model.m, model.m);
        for (int i = 0; i < model.m; ++i)
            for (int j = 0; j < model.m; ++j)
                s(i, j) = std::sqrt(static_cast<double>(sizes[i]) * sizes[j]) * model.probs(i, j);
        Eigen::SelfAdjointEigenSolver<Matrix> solver(s);
        const double lambda1 = solver.eigenvalues().maxCoeff();
        if (phi * lambda1 > 1.0 - margin) throw InfeasiblePhi(phi, lambda1);
    }
    const Matrix system = Matrix::Identity(model.m, model.m) - phi * p;
    Vector c = system.partialPivLu().solve(Vector::Ones(model.m));
    return {std::move(c), sizes};
}

SpectralDiagnostics diagnostics(const ExpectedMatrix& m, double tol, int max_iter) {
    if (m.n < 2) throw std::invalid_argument("diagnostics requires n >= 2");
    const LinearOperator op = LinearOperator::from(m);
    const EigenPair top = top_eigenpair(op, tol, max_iter);
    SpectralDiagnostics d;
    d.lambda1 = top.value;
    d.lambda2 = second_eigenvalue(op, top, tol, max_iter);
    d.gap_ratio = 1.0 - d.lambda2 / d.lambda1;
    d.max_expected_degree = m.entries.rowwise().sum().maxCoeff();
    d.large_eig_ratio =
        d.lambda1 / std::sqrt(d.max_expected_degree * std::log(static_cast<double>(m.n)));
    d.leveq_lhs = d.lambda1 * d.lambda1;
    d.leveq_rhs = m.entries.minCoeff() * m.entries.sum();
    return d;
}

}  // namespace netcent
