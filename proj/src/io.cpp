#include "netcent/io.hpp"

#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace netcent::io {

namespace {

using nlohmann::json;

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot open output file: " + path.string());
    return out;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream stream(line);
    std::string field;
    while (std::getline(stream, field, ',')) fields.push_back(field);
    return fields;
}

double parse_number(const std::string& text, const std::string& where) {
    try {
        std::size_t used = 0;
        const double value = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return value;
    } catch (const std::exception&) {
        throw ConfigError("malformed number '" + text + "' in " + where);
    }
}

int parse_index(const std::string& text, const std::string& where) {
    const double value = parse_number(text, where);
    const int index = static_cast<int>(value);
    if (index < 0 || static_cast<double>(index) != value)
        throw ConfigError("index must be a nonnegative integer in " + where);
    return index;
}

Vector vector_field(const json& node, const std::string& field) {
    if (!node.contains(field)) throw ConfigError("missing field: " + field);
    const json& arr = node.at(field);
    if (!arr.is_array() || arr.empty())
        throw ConfigError("field '" + field + "' must be a nonempty array");
    Vector v(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (!arr[i].is_number())
            throw ConfigError("field '" + field + "' must contain numbers");
        v[static_cast<int>(i)] = arr[i].get<double>();
    }
    return v;
}

Matrix matrix_field(const json& node, const std::string& field) {
    if (!node.contains(field)) throw ConfigError("missing field: " + field);
    const json& rows = node.at(field);
    if (!rows.is_array() || rows.empty())
        throw ConfigError("field '" + field + "' must be a nonempty 2-d array");
    const std::size_t cols = rows[0].is_array() ? rows[0].size() : 0;
    if (cols == 0) throw ConfigError("field '" + field + "' must be a nonempty 2-d array");
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (!rows[r].is_array() || rows[r].size() != cols)
            throw ConfigError("field '" + field + "' has ragged rows");
        for (std::size_t c = 0; c < cols; ++c) {
            if (!rows[r][c].is_number())
                throw ConfigError("field '" + field + "' must contain numbers");
            m(static_cast<int>(r), static_cast<int>(c)) = rows[r][c].get<double>();
        }
    }
    return m;
}

BlockModel block_from_json(const json& node) {
    BlockModel model;
    model.shares = vector_field(node, "shares");
    model.m = static_cast<int>(model.shares.size());
    try {
        if (node.contains("probs")) {
            model.probs = matrix_field(node, "probs");
        } else if (node.contains("p_same") && node.contains("p_diff")) {
            model = BlockModel::two_probability(model.shares, node.at("p_same").get<double>(),
                                                node.at("p_diff").get<double>());
        } else {
            throw ConfigError("missing field: probs (or p_same / p_diff)");
        }
        model.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return model;
}

ModelConfig config_from_json(const json& node);

json model_to_json(const ModelConfig& config) {
    json node;
    node["model"] = config.kind;
    node["n"] = config.n;
    node["seed"] = config.seed;
    if (config.phi) node["phi"] = *config.phi;
    auto block_json = [](const BlockModel& model) {
        json b;
        b["shares"] = std::vector<double>(model.shares.data(),
                                          model.shares.data() + model.shares.size());
        std::vector<std::vector<double>> probs(model.m, std::vector<double>(model.m));
        for (int i = 0; i < model.m; ++i)
            for (int j = 0; j < model.m; ++j) probs[i][j] = model.probs(i, j);
        b["probs"] = probs;
        return b;
    };
    if (config.kind == "sbm") {
        node.update(block_json(config.block));
    } else if (config.kind == "spatial") {
        node["k"] = config.spatial.k;
        node["rho"] = config.spatial.rho;
    } else if (config.kind == "kronecker") {
        node["layers"] = json::array();
        for (const ModelConfig& layer : config.layers)
            node["layers"].push_back(model_to_json(layer));
    } else if (config.kind == "interval") {
        node["shares"] = std::vector<double>(
            config.interval.shares.data(),
            config.interval.shares.data() + config.interval.shares.size());
        std::vector<std::vector<double>> lower(config.interval.m),
            upper(config.interval.m);
        for (int i = 0; i < config.interval.m; ++i) {
            lower[i].resize(config.interval.m);
            upper[i].resize(config.interval.m);
            for (int j = 0; j < config.interval.m; ++j) {
                lower[i][j] = config.interval.lower(i, j);
                upper[i][j] = config.interval.upper(i, j);
            }
        }
        node["lower"] = lower;
        node["upper"] = upper;
    } else if (config.kind == "clustered") {
        node.update(block_json(config.clustered.base));
        node["triangle_probs"] = config.clustered.triangle_probs;
    }
    return node;
}

}  // namespace

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

void write_edge_csv(const std::filesystem::path& path, const RealizedNetwork& net) {
    std::ofstream out = open_out(path);
    out << "i,j,weight\n";
    for (const Edge& e : net.edges)
        out << e.i << ',' << e.j << ',' << format_double(e.weight) << '\n';
}

RealizedNetwork read_edge_csv(const std::filesystem::path& path) {
    std::istringstream in(slurp(path));
    std::string line;
    if (!std::getline(in, line) || line != "i,j,weight")
        throw ConfigError(path.string() + ": expected header 'i,j,weight'");
    RealizedNetwork net;
    int line_number = 1;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.empty()) continue;
        const std::string where = path.string() + ":" + std::to_string(line_number);
        const auto fields = split_csv_line(line);
        if (fields.size() != 3) throw ConfigError(where + ": expected 3 fields");
        Edge e;
        e.i = parse_index(fields[0], where);
        e.j = parse_index(fields[1], where);
        e.weight = parse_number(fields[2], where);
        if (e.i >= e.j) throw ConfigError(where + ": edges must satisfy i < j");
        net.edges.push_back(e);
        net.n = std::max(net.n, e.j + 1);
    }
    return net;
}

void write_centrality_csv(const std::filesystem::path& path, const Vector& scores,
                          const std::vector<int>* group_of) {
    if (group_of && static_cast<int>(group_of->size()) != scores.size())
        throw ConfigError("group assignment length does not match the score vector");
    std::ofstream out = open_out(path);
    out << "agent,group,score\n";
    for (int i = 0; i < scores.size(); ++i)
        out << i << ',' << (group_of ? (*group_of)[i] : 0) << ','
            << format_double(scores[i]) << '\n';
}

ScoreTable read_centrality_csv(const std::filesystem::path& path) {
    std::istringstream in(slurp(path));
    std::string line;
    if (!std::getline(in, line) || line != "agent,group,score")
        throw ConfigError(path.string() + ": expected header 'agent,group,score'");
    std::vector<double> scores;
    ScoreTable table;
    int line_number = 1;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.empty()) continue;
        const std::string where = path.string() + ":" + std::to_string(line_number);
        const auto fields = split_csv_line(line);
        if (fields.size() != 3) throw ConfigError(where + ": expected 3 fields");
        const int agent = parse_index(fields[0], where);
        if (agent != static_cast<int>(scores.size()))
            throw ConfigError(where + ": agents must be consecutive from 0");
        table.groups.push_back(parse_index(fields[1], where));
        scores.push_back(parse_number(fields[2], where));
    }
    table.scores = Eigen::Map<Vector>(scores.data(), static_cast<int>(scores.size()));
    return table;
}

void write_lorenz_csv(const std::filesystem::path& path, const LorenzCurve& curve) {
    std::ofstream out = open_out(path);
    out << "k,share\n";
    for (std::size_t k = 0; k < curve.points.size(); ++k)
        out << k + 1 << ',' << format_double(curve.points[k]) << '\n';
}

void write_diagnostics_json(const std::filesystem::path& path, const SpectralDiagnostics& d) {
    json node;
    node["lambda1"] = d.lambda1;
    node["lambda2"] = d.lambda2;
    node["gap_ratio"] = d.gap_ratio;
    node["max_expected_degree"] = d.max_expected_degree;
    node["large_eig_ratio"] = d.large_eig_ratio;
    node["leveq_lhs"] = d.leveq_lhs;
    node["leveq_rhs"] = d.leveq_rhs;
    open_out(path) << node.dump(2) << '\n';
}

void write_derivative_json(const std::filesystem::path& path, const DerivativeReport& r) {
    json node;
    node["target_group"] = r.target_group;
    node["wrt_i"] = r.wrt_i;
    node["wrt_j"] = r.wrt_j;
    node["phi"] = r.phi;
    node["walk_sum_value"] = r.walk_sum_value;
    node["closed_form_value"] = r.closed_form_value;
    node["finite_diff_value"] = r.finite_diff_value;
    node["agreement"] = r.agreement;
    open_out(path) << node.dump(2) << '\n';
}

void write_study_files(const std::filesystem::path& out_dir, const StudyResult& result) {
    std::filesystem::create_directories(out_dir);
    json node;
    node["study"] = result.study;
    node["passed"] = result.passed();
    node["nonconvergence_count"] = result.nonconvergence_count;
    node["wall_seconds"] = result.wall_seconds;
    node["summary"] = result.summary;
    node["checks"] = json::array();
    for (const StudyCheck& check : result.checks)
        node["checks"].push_back(
            {{"name", check.name}, {"passed", check.passed}, {"value", check.value}});
    open_out(out_dir / (result.study + ".json")) << node.dump(2) << '\n';

    std::ofstream csv = open_out(out_dir / (result.study + ".csv"));
    csv << "study,n,rep,quantity,value\n";
    for (const StudyRow& row : result.rows)
        csv << row.study << ',' << row.n << ',' << row.rep << ',' << row.quantity << ','
            << format_double(row.value) << '\n';
}

namespace {

ModelConfig config_from_json(const json& node) {
    if (!node.is_object()) throw ConfigError("model config must be an object");
    ModelConfig config;
    config.kind = node.value("model", std::string("sbm"));
    config.seed = node.value("seed", std::uint64_t{0});
    if (node.contains("phi")) config.phi = node.at("phi").get<double>();

    auto require_n = [&] {
        if (!node.contains("n")) throw ConfigError("missing field: n");
        config.n = node.at("n").get<int>();
        if (config.n < 1) throw ConfigError("field 'n' must be positive");
    };

    if (config.kind == "sbm") {
        require_n();
        config.block = block_from_json(node);
    } else if (config.kind == "spatial") {
        if (!node.contains("k")) throw ConfigError("missing field: k");
        config.spatial.k = node.at("k").get<int>();
        config.spatial.rho = node.value("rho", 1.0);
        if (config.spatial.k < 1) throw ConfigError("field 'k' must be positive");
        config.n = (config.spatial.k + 1) * (config.spatial.k + 1);
    } else if (config.kind == "kronecker") {
        if (!node.contains("layers") || !node.at("layers").is_array() ||
            node.at("layers").size() != 2)
            throw ConfigError("field 'layers' must list exactly two layer models");
        for (const json& layer : node.at("layers"))
            config.layers.push_back(config_from_json(layer));
        config.n = config.layers[0].n * config.layers[1].n;
    } else if (config.kind == "interval") {
        require_n();
        config.interval.shares = vector_field(node, "shares");
        config.interval.m = static_cast<int>(config.interval.shares.size());
        config.interval.lower = matrix_field(node, "lower");
        config.interval.upper = matrix_field(node, "upper");
        try {
            config.interval.validate();
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
    } else if (config.kind == "clustered") {
        require_n();
        config.clustered.base = block_from_json(node);
        if (!node.contains("triangle_probs"))
            throw ConfigError("missing field: triangle_probs");
        config.clustered.triangle_probs =
            node.at("triangle_probs").get<std::vector<std::vector<std::vector<double>>>>();
        try {
            config.clustered.validate();
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
    } else if (config.kind == "split" || config.kind == "star") {
        require_n();
    } else {
        throw ConfigError("unknown model kind: " + config.kind);
    }
    return config;
}

}  // namespace

ModelConfig parse_model_config_text(const std::string& text) {
    json node;
    try {
        node = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    return config_from_json(node);
}

ModelConfig parse_model_config(const std::filesystem::path& path) {
    return parse_model_config_text(slurp(path));
}

ExpectedMatrix expected_from(const ModelConfig& config) {
    if (config.kind == "sbm") return build_expected_sbm(config.block, config.n);
    if (config.kind == "spatial") return build_spatial_grid(config.spatial);
    if (config.kind == "kronecker")
        return build_kronecker({expected_from(config.layers[0]),
                                expected_from(config.layers[1])});
    if (config.kind == "interval") {
        ExpectedMatrix expected;
        expected.n = config.n;
        expected.entries = Matrix::Zero(config.n, config.n);
        const auto groups = group_assignment(config.interval.shares, config.n);
        for (int i = 0; i < config.n; ++i)
            for (int j = 0; j < config.n; ++j)
                expected.entries(i, j) = 0.5 * (config.interval.lower(groups[i], groups[j]) +
                                                config.interval.upper(groups[i], groups[j]));
        expected.group_of = groups;
        return expected;
    }
    if (config.kind == "clustered") return clustered_expected(config.clustered, config.n);
    if (config.kind == "split") return build_counterexample_split(config.n);
    if (config.kind == "star") return build_counterexample_star(config.n);
    throw ConfigError("unknown model kind: " + config.kind);
}

RealizedNetwork realize_from(const ModelConfig& config) {
    if (config.kind == "interval")
        return sample_weighted_uniform(config.interval, config.n, config.seed);
    if (config.kind == "clustered")
        return sample_clustered(config.clustered, config.n, config.seed);
    if (config.kind == "spatial") {
        // Deterministic model: emit the off-diagonal expected weights directly.
        const ExpectedMatrix expected = expected_from(config);
        RealizedNetwork net;
        net.n = expected.n;
        net.seed = config.seed;
        for (int i = 0; i < net.n; ++i)
            for (int j = i + 1; j < net.n; ++j)
                if (expected.entries(i, j) > 0.0)
                    net.edges.push_back({i, j, expected.entries(i, j)});
        return net;
    }
    return sample_bernoulli(expected_from(config), config.seed);
}

void write_model_sidecar(const std::filesystem::path& path, const ModelConfig& config) {
    open_out(path) << model_to_json(config).dump(2) << '\n';
}

}  // namespace netcent::io
