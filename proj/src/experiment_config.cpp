#include "permlab/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace permlab {

using nlohmann::json;

Partition Conditioning::resolve(int n) const {
    switch (kind) {
        case Kind::none:
            throw std::invalid_argument("Conditioning: not configured");
        case Kind::explicit_lambda: {
            Partition p{std::vector<int>(lambda)};
            if (p.n() != n) throw std::invalid_argument("Conditioning: lambda does not partition n");
            return p;
        }
        case Kind::single_cycle:
            return Partition::single_cycle(n);
        case Kind::max_parts_power: {
            const int t = std::max(1, static_cast<int>(std::floor(std::pow(n, epsilon))));
            return Partition::balanced(n, t);
        }
    }
    throw std::logic_error("Conditioning: unreachable");
}

void ExperimentConfig::validate() const {
    if (experiment_id.empty()) throw std::invalid_argument("config: experiment_id required");
    if (sizes.empty()) throw std::invalid_argument("config: sizes must be nonempty");
    for (std::size_t k = 0; k + 1 < sizes.size(); ++k)
        if (!(sizes[k] < sizes[k + 1]))
            throw std::invalid_argument("config: sizes must be strictly ascending");
    for (double s : sizes)
        if (!(s > 0)) throw std::invalid_argument("config: sizes must be positive");
    if (samples_per_size < 1) throw std::invalid_argument("config: samples_per_size must be >= 1");
    if (conditioning.kind == Conditioning::Kind::max_parts_power &&
        !(conditioning.epsilon < 1.0 / 6.0))
        throw std::invalid_argument("config: conditioning epsilon must be < 1/6");
    for (int q : q_values)
        if (q < 1) throw std::invalid_argument("config: q values must be >= 1");
}

namespace {

json stat_to_json(const StatSpec& s) {
    return json{{"id", s.id}, {"q", s.q}, {"j", s.j}, {"skip", s.skip}};
}

StatSpec stat_from_json(const json& j) {
    StatSpec s;
    if (j.is_string()) {
        s.id = j.get<std::string>();
        return s;
    }
    s.id = j.at("id").get<std::string>();
    s.q = j.value("q", 1);
    s.j = j.value("j", 1);
    s.skip = j.value("skip", 1);
    return s;
}

json conditioning_to_json(const Conditioning& c) {
    switch (c.kind) {
        case Conditioning::Kind::none:
            return nullptr;
        case Conditioning::Kind::explicit_lambda:
            return json{{"lambda", c.lambda}};
        case Conditioning::Kind::single_cycle:
            return json("single-cycle");
        case Conditioning::Kind::max_parts_power:
            return json{{"max_parts_epsilon", c.epsilon}};
    }
    return nullptr;
}

Conditioning conditioning_from_json(const json& j) {
    Conditioning c;
    if (j.is_null()) return c;
    if (j.is_string()) {
        if (j.get<std::string>() != "single-cycle")
            throw std::invalid_argument("config: unknown conditioning string");
        c.kind = Conditioning::Kind::single_cycle;
        return c;
    }
    if (j.contains("lambda")) {
        c.kind = Conditioning::Kind::explicit_lambda;
        c.lambda = j.at("lambda").get<std::vector<int>>();
        return c;
    }
    if (j.contains("max_parts_epsilon")) {
        c.kind = Conditioning::Kind::max_parts_power;
        c.epsilon = j.at("max_parts_epsilon").get<double>();
        return c;
    }
    throw std::invalid_argument("config: unrecognized conditioning object");
}

json config_to_json(const ExperimentConfig& c) {
    json j;
    j["experiment_id"] = c.experiment_id;
    j["sizes"] = c.sizes;
    j["samples_per_size"] = c.samples_per_size;
    j["q_values"] = c.q_values;
    json pair = json::array();
    for (const auto& s : c.pair) pair.push_back(stat_to_json(s));
    j["pair"] = pair;
    j["conditioning"] = conditioning_to_json(c.conditioning);
    j["seed"] = c.seed;
    j["output"] = json{{"path", c.output_path},
                       {"format", c.format == OutputFormat::csv ? "csv" : "json"}};
    j["threads"] = c.threads;
    j["ulam_centering"] = c.ulam_centering;
    j["thresholds"] = c.thresholds;
    j["mode"] = c.mode;
    return j;
}

} // namespace

std::string ExperimentConfig::to_json_string() const { return config_to_json(*this).dump(); }

ExperimentConfig ExperimentConfig::from_json_string(const std::string& text) {
    const json j = json::parse(text);
    ExperimentConfig c;
    c.experiment_id = j.value("experiment_id", std::string{});
    if (j.contains("sizes")) c.sizes = j.at("sizes").get<std::vector<double>>();
    c.samples_per_size = j.value("samples_per_size", 1000L);
    if (j.contains("q_values")) c.q_values = j.at("q_values").get<std::vector<int>>();
    if (j.contains("pair"))
        for (const auto& s : j.at("pair")) c.pair.push_back(stat_from_json(s));
    if (j.contains("conditioning")) c.conditioning = conditioning_from_json(j.at("conditioning"));
    c.seed = j.value("seed", std::uint64_t{1});
    if (j.contains("output")) {
        const auto& o = j.at("output");
        c.output_path = o.value("path", std::string{});
        const auto fmt = o.value("format", std::string{"csv"});
        if (fmt == "csv")
            c.format = OutputFormat::csv;
        else if (fmt == "json")
            c.format = OutputFormat::json;
        else
            throw std::invalid_argument("config: format must be csv or json");
    }
    c.threads = j.value("threads", 1);
    c.ulam_centering = j.value("ulam_centering", 2.0);
    if (j.contains("thresholds")) c.thresholds = j.at("thresholds").get<std::vector<double>>();
    c.mode = j.value("mode", std::string{});
    return c;
}

ExperimentConfig ExperimentConfig::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json_string(buf.str());
}

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

void ResultTable::write_csv(std::ostream& os) const {
    os << "# config: " << config.to_json_string() << '\n';
    os << "experiment,n_or_nu,samples,statistic,value,std_err,seed,rate_log_sqrt,rate_log_sixth\n";
    for (const auto& r : rows) {
        os << config.experiment_id << ',' << fmt_double(r.n_or_nu) << ',' << r.samples << ','
           << r.statistic << ',' << fmt_double(r.value) << ',' << fmt_double(r.std_err) << ','
           << config.seed << ',' << (r.rate_log_sqrt ? fmt_double(*r.rate_log_sqrt) : std::string{})
           << ',' << (r.rate_log_sixth ? fmt_double(*r.rate_log_sixth) : std::string{}) << '\n';
    }
}

void ResultTable::write_json(std::ostream& os) const {
    json j;
    j["config"] = json::parse(config.to_json_string());
    json rws = json::array();
    for (const auto& r : rows) {
        json row;
        row["statistic"] = r.statistic;
        row["n_or_nu"] = r.n_or_nu;
        row["samples"] = r.samples;
        row["value"] = r.value;
        row["std_err"] = r.std_err;
        if (r.rate_log_sqrt) row["rate_log_sqrt"] = *r.rate_log_sqrt;
        if (r.rate_log_sixth) row["rate_log_sixth"] = *r.rate_log_sixth;
        rws.push_back(row);
    }
    j["rows"] = rws;
    os << j.dump(2) << '\n';
}

void ResultTable::write(std::ostream& os) const {
    if (config.format == OutputFormat::csv)
        write_csv(os);
    else
        write_json(os);
}

void ResultTable::write_to_sink() const {
    if (config.output_path.empty()) {
        write(std::cout);
        return;
    }
    std::ofstream out(config.output_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output path " + config.output_path);
    write(out);
}

} // namespace permlab
