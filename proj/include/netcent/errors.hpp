#pragma once

#include <stdexcept>
#include <string>

namespace netcent {

// Power iteration ran out of iterations, typically because the top two
// eigenvalues are nearly tied (disconnected realized networks).
struct NonConvergence : std::runtime_error {
    NonConvergence(int iterations_, double residual_)
        : std::runtime_error("power iteration did not converge after " +
                             std::to_string(iterations_) +
                             " iterations (residual " + std::to_string(residual_) + ")"),
          iterations(iterations_),
          residual(residual_) {}
    int iterations;
    double residual;
};

// phi * lambda1 too close to (or above) 1: the Neumann series diverges.
struct InfeasiblePhi : std::runtime_error {
    InfeasiblePhi(double phi_, double lambda1_)
        : std::runtime_error("phi infeasible: phi = " + std::to_string(phi_) +
                             ", lambda1 = " + std::to_string(lambda1_)),
          phi(phi_),
          lambda1(lambda1_) {}
    double phi;
    double lambda1;
};

struct ZeroProbability : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AllZero : std::runtime_error {
    AllZero() : std::runtime_error("distribution sums to zero") {}
};

struct LengthMismatch : std::runtime_error {
    LengthMismatch(std::size_t a, std::size_t b)
        : std::runtime_error("distributions have different lengths: " +
                             std::to_string(a) + " vs " + std::to_string(b)) {}
};

}  // namespace netcent
