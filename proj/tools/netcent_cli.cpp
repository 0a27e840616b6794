#include "CLI11.hpp"

#include "netcent/errors.hpp"
#include "netcent/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

namespace fs = std::filesystem;
using namespace netcent;

struct Options {
    std::string config_path;
    std::string out_dir = ".";
    std::optional<std::uint64_t> seed;
    std::optional<int> n;
    std::optional<double> phi;
    std::optional<int> reps;
    bool quiet = false;
};

int default_threads() {
    if (const char* env = std::getenv("NETCENT_THREADS")) {
        const int value = std::atoi(env);
        if (value > 0) return value;
    }
    return 1;
}

io::ModelConfig load_model(const Options& opt) {
    if (opt.config_path.empty()) throw io::ConfigError("--config is required");
    io::ModelConfig config = io::parse_model_config(opt.config_path);
    if (opt.seed) config.seed = *opt.seed;
    if (opt.n) config.n = *opt.n;
    if (opt.phi) config.phi = *opt.phi;
    return config;
}

std::optional<std::vector<int>> groups_of(const io::ModelConfig& config) {
    if (config.kind == "sbm") return group_assignment(config.block.shares, config.n);
    if (config.kind == "interval") return group_assignment(config.interval.shares, config.n);
    if (config.kind == "clustered")
        return group_assignment(config.clustered.base.shares, config.n);
    return std::nullopt;
}

int cmd_generate(const Options& opt) {
    const io::ModelConfig config = load_model(opt);
    fs::create_directories(opt.out_dir);
    const RealizedNetwork net = io::realize_from(config);
    const fs::path edges = fs::path(opt.out_dir) / "edges.csv";
    io::write_edge_csv(edges, net);
    io::write_model_sidecar(fs::path(opt.out_dir) / "model.json", config);
    if (!opt.quiet)
        std::cout << "wrote " << net.edges.size() << " edges to " << edges.string() << "\n";
    return 0;
}

int cmd_centrality(const Options& opt, const std::string& edges_path,
                   const std::string& kind) {
    fs::create_directories(opt.out_dir);
    Vector scores;
    std::optional<std::vector<int>> groups;
    SpectralDiagnostics diag;
    double phi = opt.phi.value_or(-1.0);

    if (!edges_path.empty()) {
        const RealizedNetwork net = io::read_edge_csv(edges_path);
        ExpectedMatrix wrapped;
        wrapped.n = net.n;
        wrapped.entries = net.dense();
        diag = diagnostics(wrapped);
        if (kind == "katz") {
            if (phi < 0.0) phi = 0.5 / diag.lambda1;
            scores = katz_bonacich(net, phi).scores;
        } else {
            scores = top_eigenpair(net).vector;
        }
    } else {
        const io::ModelConfig config = load_model(opt);
        const ExpectedMatrix expected = io::expected_from(config);
        diag = diagnostics(expected);
        if (kind == "katz") {
            if (phi < 0.0) phi = config.phi.value_or(0.5 / diag.lambda1);
            scores = katz_bonacich(expected, phi).scores;
        } else {
            scores = top_eigenpair(expected).vector;
        }
        groups = groups_of(config);
        if (!groups && expected.group_of) groups = expected.group_of;
    }
    io::write_centrality_csv(fs::path(opt.out_dir) / "centrality.csv", scores,
                             groups ? &*groups : nullptr);
    io::write_diagnostics_json(fs::path(opt.out_dir) / "diagnostics.json", diag);
    if (!opt.quiet)
        std::cout << "lambda1 = " << io::format_double(diag.lambda1) << ", wrote "
                  << scores.size() << " scores\n";
    return 0;
}

int cmd_compare(const Options& opt, const std::string& file_a, const std::string& file_b) {
    const io::ScoreTable a = io::read_centrality_csv(file_a);
    const io::ScoreTable b = io::read_centrality_csv(file_b);
    const Dominance verdict = lorenz_compare(a.scores, b.scores);
    fs::create_directories(opt.out_dir);
    io::write_lorenz_csv(fs::path(opt.out_dir) / "lorenz_a.csv", lorenz_curve(a.scores));
    io::write_lorenz_csv(fs::path(opt.out_dir) / "lorenz_b.csv", lorenz_curve(b.scores));
    std::cout << dominance_name(verdict) << "\n";
    return 0;
}

int cmd_derivative(const Options& opt, int group, int wrt_i, int wrt_j, double step,
                   int scan_points) {
    const io::ModelConfig config = load_model(opt);
    if (config.kind != "sbm")
        throw io::ConfigError("derivative requires an sbm model config");
    const double lambda1 =
        top_eigenpair(LinearOperator::from(reduced_block_matrix(config.block, config.n)))
            .value;
    const double phi = opt.phi.value_or(config.phi.value_or(0.5 / lambda1));
    const DerivativeReport report =
        derivative_report(config.block, config.n, group, wrt_i, wrt_j, phi, step);
    fs::create_directories(opt.out_dir);
    io::write_derivative_json(fs::path(opt.out_dir) / "derivative.json", report);
    if (scan_points > 1) {
        std::ofstream scan(fs::path(opt.out_dir) / "phi_scan.csv");
        scan << "phi,group,derivative\n";
        const double lo = 1e-3, hi = 1.0 - 1e-3;
        for (int t = 0; t < scan_points; ++t) {
            const double frac =
                lo * std::pow(hi / lo, static_cast<double>(t) / (scan_points - 1));
            const double scan_phi = frac / lambda1;
            for (int g = 0; g < config.block.m; ++g)
                scan << io::format_double(scan_phi) << ',' << g << ','
                     << io::format_double(katz_derivative_closed(config.block, config.n, g,
                                                                 wrt_i, wrt_j, scan_phi))
                     << '\n';
        }
    }
    if (!opt.quiet)
        std::cout << "closed form = " << io::format_double(report.closed_form_value)
                  << ", relative spread = " << io::format_double(report.agreement) << "\n";
    return 0;
}

int cmd_study(const Options& opt, const std::string& id, int threads, int spatial_k) {
    const auto ids = study_ids();
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
        std::string valid;
        for (const std::string& s : ids) valid += (valid.empty() ? "" : ", ") + s;
        throw io::ConfigError("unknown study id '" + id + "' (valid: " + valid + ")");
    }
    StudyConfig config;
    if (opt.seed) config.master_seed = *opt.seed;
    if (opt.reps) config.replications = *opt.reps;
    if (opt.n) config.n_values = {*opt.n};
    if (opt.phi) config.phi = *opt.phi;
    config.threads = threads;

    StudyResult result;
    if (id == "spatial") {
        SpatialStudyOptions options;
        if (spatial_k > 0) options.k = spatial_k;
        result = run_spatial_ranking_study(options);
    } else {
        result = run_study(id, config);
    }
    io::write_study_files(opt.out_dir, result);
    if (!opt.quiet) {
        for (const StudyCheck& check : result.checks)
            std::cout << (check.passed ? "PASS" : "FAIL") << "  " << check.name << " ("
                      << io::format_double(check.value) << ")\n";
        std::cout << result.study << ": " << (result.passed() ? "all checks passed" : "FAILED")
                  << " in " << io::format_double(result.wall_seconds) << " s\n";
    }
    return result.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Random-network centrality toolkit"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--quiet", opt.quiet, "suppress progress output");

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", opt.config_path, "model config file (JSON)");
        sub->add_option("--out", opt.out_dir, "output directory");
        sub->add_option("--seed", opt.seed, "seed override");
        sub->add_option("--n", opt.n, "population size override");
        sub->add_option("--phi", opt.phi, "Katz decay override");
        sub->add_option("--reps", opt.reps, "replication count override");
        sub->add_flag("--quiet", opt.quiet, "suppress progress output");
    };

    CLI::App* generate = app.add_subcommand("generate", "sample a network, write edge CSV");
    add_common(generate);

    std::string edges_path, kind = "eig";
    CLI::App* centrality =
        app.add_subcommand("centrality", "compute centrality scores and diagnostics");
    add_common(centrality);
    centrality->add_option("--edges", edges_path, "edge-list CSV input (instead of --config)");
    centrality->add_option("--kind", kind, "eig | katz")
        ->check(CLI::IsMember({"eig", "katz"}));

    std::string file_a, file_b;
    CLI::App* compare = app.add_subcommand("compare", "Lorenz-compare two score files");
    add_common(compare);
    compare->add_option("scores_a", file_a, "first centrality CSV")->required();
    compare->add_option("scores_b", file_b, "second centrality CSV")->required();

    int group = 0, wrt_i = 0, wrt_j = 1, scan_points = 0;
    double step = 1e-4;
    CLI::App* derivative =
        app.add_subcommand("derivative", "Katz derivative via walks, closed form, and FD");
    add_common(derivative);
    derivative->add_option("--group", group, "target group index");
    derivative->add_option("--i", wrt_i, "first group of the perturbed probability");
    derivative->add_option("--j", wrt_j, "second group of the perturbed probability");
    derivative->add_option("--step", step, "relative finite-difference step");
    derivative->add_option("--scan", scan_points, "write a phi scan CSV with this many points");

    std::string study_id;
    int threads = default_threads(), spatial_k = 0;
    CLI::App* study = app.add_subcommand("study", "run a seeded study and write JSON + CSV");
    add_common(study);
    study->add_option("id", study_id, "study id")->required();
    study->add_option("--threads", threads, "worker thread count");
    study->add_option("--k", spatial_k, "grid size for the spatial study");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (generate->parsed()) return cmd_generate(opt);
        if (centrality->parsed()) return cmd_centrality(opt, edges_path, kind);
        if (compare->parsed()) return cmd_compare(opt, file_a, file_b);
        if (derivative->parsed())
            return cmd_derivative(opt, group, wrt_i, wrt_j, step, scan_points);
        if (study->parsed()) return cmd_study(opt, study_id, threads, spatial_k);
    } catch (const InfeasiblePhi& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const io::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const LengthMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
