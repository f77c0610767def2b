#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "dara/error.hpp"
#include "dara/experiment.hpp"

namespace dara {

namespace {

using nlohmann::json;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

[[noreturn]] void config_error(const std::string& what) { throw Error(ErrorCode::ConfigError, what); }

template <typename T>
T get(const json& doc, const char* key) {
    try {
        return doc.at(key).get<T>();
    } catch (const json::exception& e) {
        config_error(std::string("key '") + key + "': " + e.what());
    }
}

ProfileSpec::Entry parse_entry(const json& e, const std::filesystem::path& base_dir) {
    ProfileSpec::Entry out;
    if (!e.is_object()) config_error("profile entries must be objects");
    if (e.contains("delta")) {
        out.delta = get<double>(e, "delta");
    } else if (e.contains("histogram")) {
        std::filesystem::path p = get<std::string>(e, "histogram");
        out.histogram = p.is_relative() ? base_dir / p : p;
    } else {
        config_error("profile entry needs 'delta' or 'histogram'");
    }
    return out;
}

ProfileSpec parse_profiles(const json& p, const std::filesystem::path& base_dir) {
    ProfileSpec spec;
    if (p.is_array()) {
        spec.kind = ProfileSpec::Kind::Explicit;
        for (const auto& e : p) spec.entries.push_back(parse_entry(e, base_dir));
    } else if (p.is_object() && p.contains("delta")) {
        spec.kind = ProfileSpec::Kind::Identical;
        spec.delta = get<double>(p, "delta");
    } else if (p.is_object() && p.contains("delta_range")) {
        const auto range = get<std::vector<double>>(p, "delta_range");
        if (range.size() != 2) config_error("delta_range needs [low, high]");
        spec.kind = ProfileSpec::Kind::Range;
        spec.delta_lo = range[0];
        spec.delta_hi = range[1];
    } else {
        config_error("profiles must be a list, {\"delta\": x} or {\"delta_range\": [lo, hi]}");
    }
    return spec;
}

HDistribution parse_h(const json& h) {
    HDistribution out;
    if (h.is_number()) {
        out.mean = h.get<double>();
    } else if (h.is_object() && h.contains("Constant")) {
        out.mean = get<double>(h, "Constant");
    } else if (h.is_object() && h.contains("Normal")) {
        const json& n = h.at("Normal");
        out.kind = HDistribution::Kind::Normal;
        out.mean = get<double>(n, "mean");
        out.stddev = get<double>(n, "stddev");
    } else {
        config_error("h must be {\"Constant\": v} or {\"Normal\": {\"mean\": m, \"stddev\": s}}");
    }
    return out;
}

}  // namespace

ExperimentConfig parse_experiment_config(std::string_view json_text, const std::filesystem::path& base_dir) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        config_error(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) config_error("config must be a JSON object");

    static const char* const known[] = {"scenario", "N",     "T",    "profiles", "objective", "dara",
                                        "h",        "qbar",  "alpha", "seed",    "policies",  "budget"};
    for (const auto& [key, _] : doc.items()) {
        if (std::find(std::begin(known), std::end(known), key) == std::end(known)) {
            config_error("unknown key '" + key + "'");
        }
    }
    if (!doc.contains("seed")) config_error("'seed' is required");

    ExperimentConfig c;
    if (doc.contains("scenario")) c.scenario = get<std::string>(doc, "scenario");
    c.N = get<int>(doc, "N");
    c.T = get<int>(doc, "T");
    c.seed = get<std::uint64_t>(doc, "seed");
    if (doc.contains("profiles")) c.profiles = parse_profiles(doc.at("profiles"), base_dir);
    if (doc.contains("objective")) c.objective = objective_from_string(get<std::string>(doc, "objective"));
    if (doc.contains("dara")) {
        const json& d = doc.at("dara");
        if (d.contains("mu")) c.dara.mu = get<double>(d, "mu");
        if (d.contains("nu")) c.dara.nu = get<double>(d, "nu");
        if (d.contains("gamma")) c.dara.gamma = get<double>(d, "gamma");
        if (d.contains("tail_floor")) c.dara.tail_floor = get<double>(d, "tail_floor");
    }
    if (doc.contains("h")) c.h = parse_h(doc.at("h"));
    if (doc.contains("qbar")) c.qbar = get<double>(doc, "qbar");
    if (doc.contains("alpha")) {
        const json& a = doc.at("alpha");
        if (a.is_string()) {
            if (a.get<std::string>() != "Uniform") config_error("alpha must be \"Uniform\" or a list");
        } else {
            c.alpha = get<std::vector<double>>(doc, "alpha");
        }
    }
    if (doc.contains("policies")) {
        c.policies.clear();
        for (const auto& name : get<std::vector<std::string>>(doc, "policies")) {
            c.policies.push_back(policy_from_string(name));
        }
    }
    if (doc.contains("budget") && !doc.at("budget").is_null()) c.budget = get<double>(doc, "budget");
    validate_experiment(c);
    return c;
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) config_error("cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_experiment_config(buf.str(), path.parent_path());
}

void write_csv(std::ostream& out, const std::vector<ResultRow>& rows) {
    out << "scenario,policy,N,T,delta,seed,sensor,r_target,r_achieved,Q,W,gap,gap_bound\n";
    for (const auto& row : rows) {
        for (std::size_t n = 0; n < row.r_achieved.size(); ++n) {
            out << row.scenario << ',' << to_string(row.policy) << ',' << row.N << ',' << row.T << ',';
            if (n < row.deltas.size() && row.deltas[n]) out << num(*row.deltas[n]);
            out << ',' << row.seed << ',' << (n + 1) << ',' << num(row.r_target[n]) << ','
                << num(row.r_achieved[n]) << ',' << num(row.Q[n]) << ',' << num(row.W) << ',';
            if (n < row.gap.size()) out << num(row.gap[n]);
            out << ',';
            if (row.gap_bound) out << num(*row.gap_bound);
            out << '\n';
        }
    }
}

void write_aggregate_csv(std::ostream& out, const std::vector<AggregateRow>& rows) {
    out << "scenario,policy,repetitions,W_mean,W_min,W_mean_normalized\n";
    for (const auto& a : rows) {
        out << a.scenario << ',' << to_string(a.policy) << ',' << a.repetitions << ',' << num(a.W_mean) << ','
            << num(a.W_min) << ',' << num(a.W_mean_normalized) << '\n';
    }
}

}  // namespace dara
