#pragma once

#include "netcent/experiments.hpp"
#include "netcent/inequality.hpp"
#include "netcent/netmodel.hpp"
#include "netcent/spectral.hpp"
#include "netcent/statics.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace netcent::io {

// Configuration / input problems the CLI maps to exit code 2. The message
// names the offending field.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// 17 significant digits, shortest form ("%.17g") so runs are diffable.
std::string format_double(double value);

void write_edge_csv(const std::filesystem::path& path, const RealizedNetwork& net);
RealizedNetwork read_edge_csv(const std::filesystem::path& path);

struct ScoreTable {
    Vector scores;
    std::vector<int> groups;
};

void write_centrality_csv(const std::filesystem::path& path, const Vector& scores,
                          const std::vector<int>* group_of = nullptr);
ScoreTable read_centrality_csv(const std::filesystem::path& path);

void write_lorenz_csv(const std::filesystem::path& path, const LorenzCurve& curve);

void write_diagnostics_json(const std::filesystem::path& path, const SpectralDiagnostics& d);
void write_derivative_json(const std::filesystem::path& path, const DerivativeReport& r);

// <study>.json (summary + checks) and <study>.csv (per-replication rows).
void write_study_files(const std::filesystem::path& out_dir, const StudyResult& result);

// One parsed model description. `model` selects the family:
// sbm | spatial | kronecker | interval | clustered | split | star.
struct ModelConfig {
    std::string kind;
    int n = 0;
    std::uint64_t seed = 0;
    std::optional<double> phi;
    BlockModel block;                                // sbm, clustered base
    SpatialGridModel spatial;                        // spatial
    WeightedIntervalModel interval;                  // interval
    ClusteredModel clustered;                        // clustered
    std::vector<ModelConfig> layers;                 // kronecker (block layers)
};

ModelConfig parse_model_config(const std::filesystem::path& path);
ModelConfig parse_model_config_text(const std::string& text);

// Expected matrix of the configured model (population n).
ExpectedMatrix expected_from(const ModelConfig& config);

// Sample one realized network. Spatial grids are deterministic and their
// expected weights are emitted as-is.
RealizedNetwork realize_from(const ModelConfig& config);

// JSON echo of the resolved model written next to generated edge lists.
void write_model_sidecar(const std::filesystem::path& path, const ModelConfig& config);

}  // namespace netcent::io
