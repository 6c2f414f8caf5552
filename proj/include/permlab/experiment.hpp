#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "permlab/partition.hpp"

namespace permlab {

enum class OutputFormat { csv, json };

// Cycle-type conditioning for conditional-law experiments: an explicit
// partition, a single n-cycle, or a balanced type with at most n^epsilon
// parts (epsilon < 1/6).
struct Conditioning {
    enum class Kind { none, explicit_lambda, single_cycle, max_parts_power } kind = Kind::none;
    std::vector<int> lambda;
    double epsilon = 0.0;

    Partition resolve(int n) const;
};

// One statistic reference: a stable id plus its parameters.
struct StatSpec {
    std::string id; // rho_q, rho_inf, kendall_tau, hamming, cayley, cycle_count,
                    // oscillation, rho_q_square, rho2_2, lis, greene_I, greene_D
    int q = 1;
    int j = 1;    // greene row/column index
    int skip = 1; // oscillation skip
};

struct ExperimentConfig {
    std::string experiment_id; // E1..E8
    std::vector<double> sizes; // n (or nu for Poissonized runs)
    long samples_per_size = 1000;
    std::vector<int> q_values = {1, 2};
    std::vector<StatSpec> pair;     // E4: exactly two entries
    Conditioning conditioning;      // E3
    std::uint64_t seed = 1;
    std::string output_path;        // empty: stdout
    OutputFormat format = OutputFormat::csv;
    int threads = 1;
    double ulam_centering = 2.0;    // c in I_1 - c sqrt(n); sqrt(2n) selectable via 1.4142...
    std::vector<double> thresholds; // E6/E8 m-values; empty: pilot quantiles
    std::string mode;               // experiment-specific switch (e.g. E3 sampler)

    void validate() const;
    std::string to_json_string() const;
    static ExperimentConfig from_json_string(const std::string& text);
    static ExperimentConfig load_file(const std::string& path);
};

struct ResultRow {
    std::string statistic;
    double n_or_nu = 0;
    long samples = 0;
    double value = 0;
    double std_err = 0;
    std::optional<double> rate_log_sqrt;  // log n / sqrt(n) overlay
    std::optional<double> rate_log_sixth; // log n / n^{1/6} overlay
};

struct ResultTable {
    ExperimentConfig config;
    std::vector<ResultRow> rows;

    void write_csv(std::ostream& os) const;
    void write_json(std::ostream& os) const;
    void write(std::ostream& os) const;
    // Writes to config.output_path (or stdout when empty).
    void write_to_sink() const;
};

ResultTable run_experiment(const ExperimentConfig& config);

} // namespace permlab
