#include "netcent/inequality.hpp"

#include "netcent/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace netcent {

LorenzCurve lorenz_curve(const Vector& x) {
    const int n = static_cast<int>(x.size());
    if (n == 0) throw std::invalid_argument("lorenz_curve: empty distribution");
    if ((x.array() < 0.0).any())
        throw std::invalid_argument("lorenz_curve: entries must be nonnegative");
    std::vector<double> sorted(x.data(), x.data() + n);
    std::stable_sort(sorted.begin(), sorted.end());
    const double total = std::accumulate(sorted.begin(), sorted.end(), 0.0);
    if (total == 0.0) throw AllZero();
    LorenzCurve curve;
    curve.points.resize(n);
    double running = 0.0;
    for (int k = 0; k < n; ++k) {
        running += sorted[k];
        curve.points[k] = running / total;
    }
    curve.points[n - 1] = 1.0;  // clamp accumulated rounding
    return curve;
}

Dominance compare_curves(const LorenzCurve& x, const LorenzCurve& y, double tol) {
    if (x.points.size() != y.points.size())
        throw LengthMismatch(x.points.size(), y.points.size());
    bool x_above = false;
    bool y_above = false;
    for (std::size_t k = 0; k < x.points.size(); ++k) {
        const double diff = x.points[k] - y.points[k];
        if (diff > tol) x_above = true;
        if (diff < -tol) y_above = true;
    }
    if (x_above && y_above) return Dominance::Incomparable;
    if (x_above) return Dominance::XDominates;
    if (y_above) return Dominance::YDominates;
    return Dominance::Equal;
}

Dominance lorenz_compare(const Vector& x, const Vector& y, double tol) {
    if (x.size() != y.size()) throw LengthMismatch(x.size(), y.size());
    return compare_curves(lorenz_curve(x), lorenz_curve(y), tol);
}

double gini(const Vector& x) {
    const LorenzCurve curve = lorenz_curve(x);
    const double n = static_cast<double>(curve.points.size());
    const double total = std::accumulate(curve.points.begin(), curve.points.end(), 0.0);
    return 1.0 - 2.0 / n * total + 1.0 / n;
}

const char* dominance_name(Dominance d) {
    switch (d) {
        case Dominance::XDominates: return "DOMINATES";
        case Dominance::YDominates: return "DOMINATED";
        case Dominance::Equal: return "EQUAL";
        case Dominance::Incomparable: return "INCOMPARABLE";
    }
    return "UNKNOWN";
}

}  // namespace netcent
