#pragma once

#include "netcent/netmodel.hpp"

namespace netcent {

// Cumulative shares L(k) of the poorest k agents, k = 1..n, for the
// ascending-sorted distribution.
struct LorenzCurve {
    std::vector<double> points;
};

enum class Dominance { XDominates, YDominates, Equal, Incomparable };

inline constexpr double kLorenzTol = 1e-12;

LorenzCurve lorenz_curve(const Vector& x);

// Pointwise comparison of the two Lorenz curves with absolute tolerance on
// shares; Incomparable when the curves strictly cross.
Dominance lorenz_compare(const Vector& x, const Vector& y, double tol = kLorenzTol);
Dominance compare_curves(const LorenzCurve& x, const LorenzCurve& y, double tol = kLorenzTol);

// Discrete trapezoid convention: 1 - (2/n) sum_k L(k) + 1/n.
double gini(const Vector& x);

const char* dominance_name(Dominance d);

}  // namespace netcent
