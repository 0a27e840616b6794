#pragma once

#include "netcent/netmodel.hpp"
#include "netcent/spectral.hpp"

namespace netcent {

enum class CentralityKind { Eigenvector, Katz };
enum class ProbParameter { WithinGroup, BetweenGroup };  // p_s or p_d

// Two-group homophilous block model with a strict majority.
struct TwoGroupSpec {
    double s1 = 0.0;   // majority share in (1/2, 1)
    double p_same = 0.0;
    double p_diff = 0.0;
    int n = 0;

    void validate() const;
};

struct TwoGroupEigvec {
    double minority_ratio = 0.0;  // minority entry / majority entry
    double total = 0.0;           // T(s): entry total with majority entries at 1
};

// Cross-checked triple of Katz derivatives; agreement is the max pairwise
// relative error.
struct DerivativeReport {
    int target_group = 0;
    int wrt_i = 0;
    int wrt_j = 0;
    double phi = 0.0;
    double walk_sum_value = 0.0;
    double closed_form_value = 0.0;
    double finite_diff_value = 0.0;
    double agreement = 0.0;
};

// Closed-form centrality ratio between a member of group l and of group l'
// for two-probability SBMs. Eigenvector kind uses the mean-field top
// eigenvalue; Katz kind needs a feasible phi.
double group_centrality_ratio(const BlockModel& model, int n, int group_l, int group_lp,
                              CentralityKind kind, double phi = 0.0);

// Derivative of the ratio with respect to p_s or p_d, holding the top
// eigenvalue fixed at its current value in the eigenvector case (the
// convention under which the closed form is exact).
double ratio_elasticity(const BlockModel& model, int n, int group_l, int group_lp,
                        ProbParameter wrt, CentralityKind kind, double phi = 0.0);

// d c_l / d p_{ii'} as a discounted f-weighted walk count, evaluated by
// dynamic programming over group states.
double katz_derivative_walks(const BlockModel& model, int n, int group_l, int wrt_i,
                             int wrt_j, double phi, double tol = kDefaultTol);

// Same derivative through the reduced-matrix inverse formula.
double katz_derivative_closed(const BlockModel& model, int n, int group_l, int wrt_i,
                              int wrt_j, double phi);

// Central finite difference of block Katz centrality in p_{ij}; the
// independent oracle for the other two routes.
double finite_difference_derivative(const BlockModel& model, int n, int group_l, int wrt_i,
                                    int wrt_j, double phi, double step);

DerivativeReport derivative_report(const BlockModel& model, int n, int group_l, int wrt_i,
                                   int wrt_j, double phi, double step = 1e-6);

TwoGroupEigvec two_group_eigvec_closed_form(const TwoGroupSpec& spec);

// Majority-share threshold s-bar at which dT/ds changes sign.
double group_size_threshold(double p_same, double p_diff);

}  // namespace netcent
