#pragma once

#include "netcent/inequality.hpp"
#include "netcent/netmodel.hpp"
#include "netcent/spectral.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace netcent {

// Shared knobs for the seeded studies. Empty vectors / negative phi mean
// "use the study's default", which reproduces the published settings.
struct StudyConfig {
    std::uint64_t master_seed = 20240601;
    int replications = 0;
    std::vector<int> n_values;
    double phi = -1.0;  // fixed phi; studies otherwise apply their phi rule
    int threads = 1;
};

struct StudyCheck {
    std::string name;
    bool passed = false;
    double value = 0.0;
};

// One per-replication observation, matching the CSV row schema
// study,n,rep,quantity,value.
struct StudyRow {
    std::string study;
    int n = 0;
    int rep = 0;
    std::string quantity;
    double value = 0.0;
};

struct StudyResult {
    std::string study;
    std::vector<StudyCheck> checks;
    std::vector<StudyRow> rows;
    std::map<std::string, double> summary;
    int nonconvergence_count = 0;
    double wall_seconds = 0.0;

    bool passed() const;
};

// Theorem 1/2 verification on Erdos-Renyi p = 1/4 with phi = 1/(2 lambda1):
// average realized-vs-mean-field centrality distances against the published
// bands (n = 500, 1000; R = 100).
StudyResult run_convergence_study(const StudyConfig& config = {});

// Realized eigenvector distance against the bound 8 f(n) / delta.
StudyResult run_rate_study(const StudyConfig& config = {});

// The two divergence examples: the vanishing-gap split matrix (eigenvector
// support collapses to one block) and the hub matrix (Katz distance stays of
// order sqrt(n)).
StudyResult run_counterexample_studies(const StudyConfig& config = {});

struct SpatialStudyOptions {
    int k = 20;
    std::vector<double> rho_values = {1e-4, 0.5, 0.95};
    double phi_factor = 0.1;  // phi = phi_factor / lambda1
    std::vector<int> k_values_for_ratio = {5, 10, 20, 40};
    std::vector<double> rho_values_for_ratio = {0.5, 1.0};
};

// Katz ranking of positions (0, k/2) vs (3, 3) across rho, plus the
// large-eigenvalue ratio trend over k for rho <= 1.
StudyResult run_spatial_ranking_study(const SpatialStudyOptions& options = {});

// Kronecker mean-field identity plus sampled distance trend over layer sizes.
StudyResult run_kronecker_study(const StudyConfig& config = {});

// Lorenz dominance sweep over (p_s, p_d) pairs and over majority shares below
// the threshold, including the published figure pairs.
StudyResult run_dominance_sweep(const StudyConfig& config = {});

// Derivative orderings across the phi grid (small phi favors small groups,
// large phi favors large groups) and the three-group crossing example.
StudyResult run_statics_regime_study(const StudyConfig& config = {});

StudyResult run_study(const std::string& id, const StudyConfig& config = {});
std::vector<std::string> study_ids();

}  // namespace netcent
