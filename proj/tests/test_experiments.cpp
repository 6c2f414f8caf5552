#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <sstream>

#include "permlab/experiment.hpp"

using namespace permlab;

namespace {

std::string render(const ResultTable& t) {
    std::ostringstream os;
    t.write(os);
    return os.str();
}

const ResultRow& row_named(const ResultTable& t, const std::string& name, double n) {
    for (const auto& r : t.rows)
        if (r.statistic == name && r.n_or_nu == n) return r;
    REQUIRE_MESSAGE(false, ("missing row " + name));
    static ResultRow dummy;
    return dummy;
}

} // namespace

TEST_CASE("config json round trip") {
    ExperimentConfig c;
    c.experiment_id = "E4";
    c.sizes = {100, 1000};
    c.samples_per_size = 5000;
    c.q_values = {2};
    c.pair = {StatSpec{"rho_inf", 1, 1, 1}, StatSpec{"rho_q", 2, 1, 1}};
    c.conditioning.kind = Conditioning::Kind::max_parts_power;
    c.conditioning.epsilon = 0.1;
    c.seed = 99;
    c.output_path = "out.csv";
    c.format = OutputFormat::json;
    c.threads = 4;
    c.thresholds = {3.5};
    c.mode = "fixed";

    const auto back = ExperimentConfig::from_json_string(c.to_json_string());
    CHECK(back.experiment_id == c.experiment_id);
    CHECK(back.sizes == c.sizes);
    CHECK(back.samples_per_size == c.samples_per_size);
    CHECK(back.q_values == c.q_values);
    REQUIRE(back.pair.size() == 2);
    CHECK(back.pair[0].id == "rho_inf");
    CHECK(back.pair[1].q == 2);
    CHECK(back.conditioning.kind == Conditioning::Kind::max_parts_power);
    CHECK(back.conditioning.epsilon == 0.1);
    CHECK(back.seed == 99);
    CHECK(back.output_path == "out.csv");
    CHECK(back.format == OutputFormat::json);
    CHECK(back.threads == 4);
    CHECK(back.thresholds == c.thresholds);
    CHECK(back.mode == "fixed");

    // strings are accepted as bare statistic ids
    const auto c2 = ExperimentConfig::from_json_string(
        R"({"experiment_id":"E4","sizes":[10],"pair":["cycle_count","kendall_tau"]})");
    CHECK(c2.pair[0].id == "cycle_count");
}

TEST_CASE("config validation") {
    ExperimentConfig c;
    c.experiment_id = "E1";
    c.sizes = {};
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c.sizes = {100, 50};
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c.sizes = {50, 100};
    c.samples_per_size = 0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c.samples_per_size = 10;
    c.conditioning.kind = Conditioning::Kind::max_parts_power;
    c.conditioning.epsilon = 0.2; // >= 1/6
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c.conditioning.epsilon = 0.1;
    CHECK_NOTHROW(c.validate());
}

TEST_CASE("conditioning resolution") {
    Conditioning c;
    c.kind = Conditioning::Kind::single_cycle;
    CHECK(c.resolve(7) == Partition::single_cycle(7));
    c.kind = Conditioning::Kind::explicit_lambda;
    c.lambda = {4, 3};
    CHECK(c.resolve(7) == Partition({4, 3}));
    CHECK_THROWS_AS(c.resolve(8), std::invalid_argument);
    c.kind = Conditioning::Kind::max_parts_power;
    c.epsilon = 0.1;
    // 2000^0.1 ~ 2.14 -> two near-equal parts
    CHECK(c.resolve(2000) == Partition({1000, 1000}));
}

TEST_CASE("unknown experiment is rejected") {
    ExperimentConfig c;
    c.experiment_id = "E99";
    c.sizes = {10};
    CHECK_THROWS_AS(run_experiment(c), std::invalid_argument);
}

TEST_CASE("determinism: reruns and worker counts produce identical bytes") {
    ExperimentConfig c;
    c.experiment_id = "E2";
    c.sizes = {50, 120};
    c.samples_per_size = 3000;
    c.seed = 7;
    c.threads = 1;
    const auto once = render(run_experiment(c));
    const auto again = render(run_experiment(c));
    CHECK(once == again);
    c.threads = 8;
    const auto threaded = render(run_experiment(c));
    // the echoed config records the thread count, which is not a result
    auto strip_header = [](const std::string& s) { return s.substr(s.find('\n') + 1); };
    CHECK(strip_header(once) == strip_header(threaded));
}

TEST_CASE("E1 smoke run") {
    ExperimentConfig c;
    c.experiment_id = "clt_rho";
    c.sizes = {200};
    c.samples_per_size = 4000;
    c.q_values = {1};
    c.seed = 11;
    const auto t = run_experiment(c);
    CHECK(row_named(t, "ks_normal_rho1", 200).value < 0.05);
    CHECK(row_named(t, "ks_normal_kendall_tau", 200).value < 0.05);
}

TEST_CASE("E3 smoke run with sampler agreement") {
    ExperimentConfig c;
    c.experiment_id = "E3";
    c.sizes = {300};
    c.samples_per_size = 4000;
    c.q_values = {2};
    c.conditioning.kind = Conditioning::Kind::single_cycle;
    c.seed = 12;
    const auto t = run_experiment(c);
    CHECK(row_named(t, "ks_cond_vs_uncond_rho2", 300).value < 0.08);
    CHECK(row_named(t, "ks_sampler_agreement_rho2", 300).value < 0.08);
}

TEST_CASE("E4 emits rate overlays") {
    ExperimentConfig c;
    c.experiment_id = "E4";
    c.sizes = {64};
    c.samples_per_size = 4000;
    c.pair = {StatSpec{"cycle_count", 1, 1, 1}, StatSpec{"kendall_tau", 1, 1, 1}};
    c.seed = 13;
    const auto t = run_experiment(c);
    const auto& r = t.rows.at(0);
    CHECK(r.statistic == "gap_cycle_count_vs_kendall_tau");
    CHECK(r.value >= 0);
    CHECK(r.value <= 0.2);
    REQUIRE(r.rate_log_sqrt.has_value());
    CHECK(*r.rate_log_sqrt == doctest::Approx(std::log(64.0) / 8.0));
    REQUIRE(r.rate_log_sixth.has_value());
}

TEST_CASE("E6 reports zero coupling violations") {
    ExperimentConfig c;
    c.experiment_id = "E6";
    c.sizes = {10, 20, 40};
    c.samples_per_size = 150;
    c.q_values = {1, 2};
    c.seed = 14;
    auto t = run_experiment(c);
    CHECK(row_named(t, "crp_rho_monotonicity_violations", 40).value == 0.0);
    CHECK(row_named(t, "addpoint_greene_violations", 40).value == 0.0);
    // pilot thresholds are pinned back into the echoed config
    CHECK(t.config.thresholds.size() == 2);
    // the decreasing event curve
    const double p10 = row_named(t, "prob_all_rho_below", 10).value;
    const double p40 = row_named(t, "prob_all_rho_below", 40).value;
    CHECK(p10 >= p40);
}

TEST_CASE("E7 square factorization holds on every draw") {
    ExperimentConfig c;
    c.experiment_id = "E7";
    c.sizes = {120};
    c.samples_per_size = 1500;
    c.q_values = {1};
    c.seed = 15;
    const auto t = run_experiment(c);
    CHECK(row_named(t, "square_factorization_violations1", 120).value == 0.0);
    CHECK(row_named(t, "ks_normal_rho_q_square1", 120).value < 0.08);
}

TEST_CASE("E8 bridges fixed-n and poissonized laws") {
    ExperimentConfig c;
    c.experiment_id = "E8";
    c.sizes = {60};
    c.samples_per_size = 1500;
    c.seed = 16;
    const auto t = run_experiment(c);
    const double phi_high = row_named(t, "phi_at_n_plus", 60).value;
    const double direct = row_named(t, "poissonized_direct_at_n_plus", 60).value;
    CHECK(std::abs(phi_high - direct) < 0.05);
    CHECK(t.config.thresholds.size() == 1);
    const double a_n = row_named(t, "a_n", 60).value;
    CHECK(a_n >= 0.0);
    CHECK(a_n <= 1.0);
}

TEST_CASE("csv output carries the config header and stable columns") {
    ExperimentConfig c;
    c.experiment_id = "E2";
    c.sizes = {30};
    c.samples_per_size = 500;
    c.seed = 17;
    const auto t = run_experiment(c);
    const auto text = render(t);
    CHECK(text.rfind("# config: {", 0) == 0);
    CHECK(text.find("experiment,n_or_nu,samples,statistic,value,std_err,seed") != std::string::npos);
    CHECK(text.find("ks_sqrt_exp_half_H") != std::string::npos);

    ExperimentConfig cj = c;
    cj.format = OutputFormat::json;
    const auto tj = run_experiment(cj);
    std::ostringstream os;
    tj.write(os);
    CHECK(os.str().find("\"rows\"") != std::string::npos);
}
