#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "netcent/io.hpp"

#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace netcent;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / "netcent_io_test") {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

TEST_CASE("doubles round-trip at 17 significant digits") {
    const double value = 0.1234567890123456789;
    CHECK(std::stod(io::format_double(value)) == value);
    CHECK(io::format_double(1.0) == "1");
    CHECK(io::format_double(0.5) == "0.5");
}

TEST_CASE("edge CSV round trip") {
    TempDir tmp;
    RealizedNetwork net;
    net.n = 4;
    net.edges = {{0, 1, 1.0}, {0, 3, 0.25}, {2, 3, 2.5}};
    const fs::path file = tmp.path / "edges.csv";
    io::write_edge_csv(file, net);

    const std::string text = slurp(file);
    CHECK(text == "i,j,weight\n0,1,1\n0,3,0.25\n2,3,2.5\n");

    const RealizedNetwork back = io::read_edge_csv(file);
    CHECK(back.n == 4);
    REQUIRE(back.edges.size() == 3);
    CHECK(back.edges[1].i == 0);
    CHECK(back.edges[1].j == 3);
    CHECK(back.edges[1].weight == 0.25);

    std::ofstream(tmp.path / "bad.csv") << "a,b\n";
    CHECK_THROWS_AS(io::read_edge_csv(tmp.path / "bad.csv"), io::ConfigError);
    std::ofstream(tmp.path / "bad2.csv") << "i,j,weight\n3,1,1\n";
    CHECK_THROWS_AS(io::read_edge_csv(tmp.path / "bad2.csv"), io::ConfigError);
}

TEST_CASE("centrality CSV round trip") {
    TempDir tmp;
    Vector scores(3);
    scores << 0.25, 1.5, 0.75;
    std::vector<int> groups = {0, 0, 1};
    const fs::path file = tmp.path / "scores.csv";
    io::write_centrality_csv(file, scores, &groups);
    CHECK(slurp(file) == "agent,group,score\n0,0,0.25\n1,0,1.5\n2,1,0.75\n");

    const io::ScoreTable table = io::read_centrality_csv(file);
    CHECK((table.scores - scores).norm() == 0.0);
    CHECK(table.groups == groups);
}

TEST_CASE("lorenz CSV") {
    TempDir tmp;
    LorenzCurve curve;
    curve.points = {0.25, 1.0};
    io::write_lorenz_csv(tmp.path / "lorenz.csv", curve);
    CHECK(slurp(tmp.path / "lorenz.csv") == "k,share\n1,0.25\n2,1\n");
}

TEST_CASE("diagnostics JSON carries the full key set") {
    TempDir tmp;
    SpectralDiagnostics d;
    d.lambda1 = 10.0;
    d.lambda2 = 1.0;
    d.gap_ratio = 0.9;
    d.max_expected_degree = 12.0;
    d.large_eig_ratio = 2.0;
    d.leveq_lhs = 100.0;
    d.leveq_rhs = 90.0;
    io::write_diagnostics_json(tmp.path / "diag.json", d);
    const auto node = nlohmann::json::parse(slurp(tmp.path / "diag.json"));
    for (const char* key : {"lambda1", "lambda2", "gap_ratio", "max_expected_degree",
                            "large_eig_ratio", "leveq_lhs", "leveq_rhs"})
        CHECK(node.contains(key));
    CHECK(node["lambda1"].get<double>() == 10.0);
}

TEST_CASE("model config parsing") {
    const io::ModelConfig sbm = io::parse_model_config_text(R"({
        "model": "sbm", "n": 10, "seed": 3,
        "shares": [0.6, 0.4], "p_same": 0.5, "p_diff": 0.1
    })");
    CHECK(sbm.kind == "sbm");
    CHECK(sbm.n == 10);
    CHECK(sbm.seed == 3);
    CHECK(sbm.block.probs(0, 0) == 0.5);
    CHECK(sbm.block.probs(0, 1) == 0.1);

    const io::ModelConfig explicit_probs = io::parse_model_config_text(R"({
        "model": "sbm", "n": 6, "shares": [0.5, 0.5],
        "probs": [[0.9, 0.2], [0.2, 0.8]]
    })");
    CHECK(explicit_probs.block.probs(1, 1) == 0.8);

    const io::ModelConfig spatial =
        io::parse_model_config_text(R"({"model": "spatial", "k": 4, "rho": 0.5})");
    CHECK(spatial.n == 25);

    const io::ModelConfig kron = io::parse_model_config_text(R"({
        "model": "kronecker",
        "layers": [
          {"model": "sbm", "n": 3, "shares": [1.0], "p_same": 0.5, "p_diff": 0.5},
          {"model": "sbm", "n": 4, "shares": [1.0], "p_same": 0.9, "p_diff": 0.9}
        ]
    })");
    CHECK(kron.n == 12);

    const io::ModelConfig split = io::parse_model_config_text(R"({"model": "split", "n": 8})");
    CHECK(io::expected_from(split).entries(0, 0) == 0.5);

    // Errors name the offending field.
    try {
        io::parse_model_config_text(R"({"model": "sbm", "n": 5})");
        CHECK(false);
    } catch (const io::ConfigError& e) {
        CHECK(std::string(e.what()).find("shares") != std::string::npos);
    }
    try {
        io::parse_model_config_text(
            R"({"model": "sbm", "n": 5, "shares": [0.6, 0.3], "p_same": 0.5, "p_diff": 0.1})");
        CHECK(false);
    } catch (const io::ConfigError& e) {
        CHECK(std::string(e.what()).find("shares") != std::string::npos);
    }
    CHECK_THROWS_AS(io::parse_model_config_text("{nope"), io::ConfigError);
    CHECK_THROWS_AS(io::parse_model_config_text(R"({"model": "mystery", "n": 3})"),
                    io::ConfigError);
}

TEST_CASE("expected and realized networks from configs") {
    const io::ModelConfig complete = io::parse_model_config_text(R"({
        "model": "sbm", "n": 4, "shares": [1.0], "p_same": 1.0, "p_diff": 1.0
    })");
    const ExpectedMatrix expected = io::expected_from(complete);
    CHECK(expected.entries.isApprox(Matrix::Ones(4, 4), 0.0));
    CHECK(io::realize_from(complete).edges.size() == 6);

    const io::ModelConfig spatial =
        io::parse_model_config_text(R"({"model": "spatial", "k": 2, "rho": 1.0})");
    const RealizedNetwork grid = io::realize_from(spatial);
    CHECK(grid.n == 9);
    CHECK(grid.edges.size() == 36);  // all off-diagonal pairs, deterministic
}

TEST_CASE("study files") {
    TempDir tmp;
    StudyResult result;
    result.study = "demo";
    result.checks = {{"alpha", true, 1.0}, {"beta", false, 0.25}};
    result.rows = {{"demo", 10, 0, "distance", 0.5}};
    result.summary["mean"] = 0.5;
    io::write_study_files(tmp.path, result);

    const auto node = nlohmann::json::parse(slurp(tmp.path / "demo.json"));
    CHECK(node["study"] == "demo");
    CHECK(node["passed"] == false);
    CHECK(node["checks"].size() == 2);
    CHECK(node["summary"]["mean"].get<double>() == 0.5);
    CHECK(slurp(tmp.path / "demo.csv") == "study,n,rep,quantity,value\ndemo,10,0,distance,0.5\n");
}

TEST_CASE("model sidecar echoes the resolved model") {
    TempDir tmp;
    const io::ModelConfig sbm = io::parse_model_config_text(R"({
        "model": "sbm", "n": 10, "seed": 3,
        "shares": [0.6, 0.4], "p_same": 0.5, "p_diff": 0.1
    })");
    io::write_model_sidecar(tmp.path / "model.json", sbm);
    const auto node = nlohmann::json::parse(slurp(tmp.path / "model.json"));
    CHECK(node["model"] == "sbm");
    CHECK(node["n"] == 10);
    CHECK(node["seed"] == 3);
    CHECK(node["probs"][0][1].get<double>() == 0.1);
}
