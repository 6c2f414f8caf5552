#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "permlab/experiment.hpp"
#include "permlab/moments.hpp"
#include "permlab/oracles.hpp"

#include <json.hpp>

namespace {

int cmd_run(const std::string& experiment, const std::string& config_path, bool seed_set,
            std::uint64_t seed, const std::string& out_path, const std::string& format,
            int threads) {
    permlab::ExperimentConfig cfg;
    if (!config_path.empty()) cfg = permlab::ExperimentConfig::load_file(config_path);
    if (!experiment.empty()) cfg.experiment_id = experiment;
    if (seed_set) cfg.seed = seed;
    if (!out_path.empty()) cfg.output_path = out_path;
    if (!format.empty()) {
        if (format == "csv")
            cfg.format = permlab::OutputFormat::csv;
        else if (format == "json")
            cfg.format = permlab::OutputFormat::json;
        else
            throw CLI::ValidationError("--format must be csv or json");
    }
    if (threads > 0) cfg.threads = threads;
    if (cfg.sizes.empty()) cfg.sizes = {100, 400};

    const permlab::ResultTable table = permlab::run_experiment(cfg);
    table.write_to_sink();
    if (!table.config.output_path.empty())
        std::cerr << "wrote " << table.rows.size() << " rows to " << table.config.output_path << "\n";
    return 0;
}

int cmd_oracle(const std::string& name) {
    std::vector<permlab::OracleResult> results;
    if (name == "all" || name.empty())
        results = permlab::run_all_oracles();
    else
        results.push_back(permlab::run_oracle(name));
    int failures = 0;
    for (const auto& r : results) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
        if (!r.pass) std::cout << " : " << r.detail;
        std::cout << "\n";
        if (!r.pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}

int cmd_moments(const std::string& stat, int n, int q) {
    const auto params = permlab::exact_moments(n, stat, q);
    nlohmann::json j;
    j["statistic_id"] = params.statistic_id;
    j["n"] = params.n;
    if (params.q > 0) j["q"] = params.q;
    j["mean"] = params.mean;
    j["std_dev"] = params.std_dev;
    j["method"] = params.method == permlab::MomentMethod::exact ? "exact" : "monte_carlo";
    j["mean_std_err"] = params.mean_std_err;
    j["sd_std_err"] = params.sd_std_err;
    std::cout << j.dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"permlab: permutation-statistics simulation lab"};
    app.require_subcommand(1);

    std::string experiment, config_path, out_path, format, oracle_name = "all", stat = "rho_q";
    std::uint64_t seed = 0;
    int threads = 0, n = 100, q = 1;

    auto* run = app.add_subcommand("run", "run an experiment");
    run->add_option("--experiment", experiment, "experiment id (E1..E8 or its name)");
    run->add_option("--config", config_path, "JSON config file");
    auto* seed_opt = run->add_option("--seed", seed, "override the config seed");
    run->add_option("--out", out_path, "output path (default: config, else stdout)");
    run->add_option("--format", format, "csv or json");
    run->add_option("--threads", threads, "worker count");

    auto* oracle = app.add_subcommand("oracle", "run the exhaustive small-n oracles");
    oracle->add_option("name", oracle_name, "oracle name, or 'all'");

    auto* moments = app.add_subcommand("moments", "print exact normalization parameters");
    moments->add_option("--stat", stat, "rho_q | kendall_tau | cycle_count")->required();
    moments->add_option("--n", n, "permutation size")->required();
    moments->add_option("--q", q, "exponent for rho_q");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed())
            return cmd_run(experiment, config_path, !seed_opt->empty(), seed, out_path, format,
                           threads);
        if (oracle->parsed()) return cmd_oracle(oracle_name);
        if (moments->parsed()) return cmd_moments(stat, n, q);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
