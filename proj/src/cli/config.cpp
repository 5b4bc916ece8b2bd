#include "config.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>

#include "qet/errors.hpp"

namespace qet::cli {

namespace {

template <typename E>
E lookup(const std::map<std::string, E> &table, const std::string &name, const char *what) {
    auto it = table.find(name);
    if (it == table.end()) {
        std::string choices;
        for (const auto &[key, _] : table) {
            choices += (choices.empty() ? "" : ", ") + key;
        }
        throw ConfigurationError(std::string("unknown ") + what + " '" + name + "' (expected one of " + choices + ")");
    }
    return it->second;
}

const std::map<std::string, Experiment> kExperiments{
    {"qip", Experiment::Qip},
    {"qsd", Experiment::Qsd},
    {"qmip", Experiment::Qmip},
    {"soundness", Experiment::Soundness},
    {"delta-sweep", Experiment::DeltaSweep},
    {"table1", Experiment::Table1},
    {"level-set", Experiment::LevelSet},
};

const std::map<std::string, LevelKind> kLevelKinds{
    {"theta", LevelKind::Theta},
    {"observable", LevelKind::Observable},
    {"field", LevelKind::Field},
    {"interaction", LevelKind::Interaction},
};

template <typename T>
T get_as(const nlohmann::json &value, const std::string &key) {
    try {
        if constexpr (std::is_same_v<T, std::int64_t> || std::is_same_v<T, int>) {
            if (!value.is_number_integer()) {
                throw ConfigurationError("");
            }
        } else if constexpr (std::is_same_v<T, std::uint64_t>) {
            if (!value.is_number_unsigned()) {
                throw ConfigurationError("");
            }
        } else if constexpr (std::is_same_v<T, double>) {
            if (!value.is_number()) {
                throw ConfigurationError("");
            }
        }
        return value.get<T>();
    } catch (const std::exception &) {
        throw ConfigurationError("config field '" + key + "' has the wrong type");
    }
}

}  // namespace

const char *to_string(Experiment e) {
    for (const auto &[name, value] : kExperiments) {
        if (value == e) {
            return name.c_str();
        }
    }
    return "?";
}

Experiment parse_experiment(const std::string &name) { return lookup(kExperiments, name, "experiment"); }

const char *to_string(LevelKind k) {
    for (const auto &[name, value] : kLevelKinds) {
        if (value == k) {
            return name.c_str();
        }
    }
    return "?";
}

LevelKind parse_level_kind(const std::string &name) { return lookup(kLevelKinds, name, "level-set kind"); }

AcceptRule parse_rule(const std::string &name) {
    return lookup<AcceptRule>({{"strict", AcceptRule::Strict}, {"ztest", AcceptRule::ZTest}}, name, "rule");
}

Engine parse_engine(const std::string &name) {
    return lookup<Engine>({{"branch-sampling", Engine::BranchSampling}, {"full-circuit", Engine::FullCircuit}}, name,
                          "engine");
}

VerifierChoice parse_choice(const std::string &name) {
    return lookup<VerifierChoice>({{"Q1", VerifierChoice::Q1}, {"Q2", VerifierChoice::Q2}}, name, "verifier choice");
}

ExperimentConfig merge_config(ExperimentConfig c, const nlohmann::json &j) {
    if (!j.is_object()) {
        throw ConfigurationError("config must be a JSON object");
    }
    using Setter = std::function<void(const nlohmann::json &, const std::string &)>;
    const std::map<std::string, Setter> setters{
        {"experiment", [&](auto &v, auto &key) { c.experiment = parse_experiment(get_as<std::string>(v, key)); }},
        {"h", [&](auto &v, auto &key) { c.h = get_as<double>(v, key); }},
        {"k", [&](auto &v, auto &key) { c.k = get_as<double>(v, key); }},
        {"chain_z", [&](auto &v, auto &key) { c.chain_z = get_as<std::vector<double>>(v, key); }},
        {"chain_xx", [&](auto &v, auto &key) { c.chain_xx = get_as<std::vector<double>>(v, key); }},
        {"site_a", [&](auto &v, auto &key) { c.site_a = get_as<int>(v, key); }},
        {"site_b", [&](auto &v, auto &key) { c.site_b = get_as<int>(v, key); }},
        {"theta",
         [&](auto &v, auto &key) {
             if (v.is_null()) {
                 c.theta.reset();
             } else {
                 c.theta = get_as<double>(v, key);
             }
         }},
        {"n_shot", [&](auto &v, auto &key) { c.n_shot = get_as<std::int64_t>(v, key); }},
        {"n_unitaries", [&](auto &v, auto &key) { c.n_unitaries = get_as<int>(v, key); }},
        {"n_thetas", [&](auto &v, auto &key) { c.n_thetas = get_as<int>(v, key); }},
        {"seed", [&](auto &v, auto &key) { c.seed = get_as<std::uint64_t>(v, key); }},
        {"out", [&](auto &v, auto &key) { c.out = get_as<std::string>(v, key); }},
        {"rule", [&](auto &v, auto &key) { c.rule = parse_rule(get_as<std::string>(v, key)); }},
        {"engine", [&](auto &v, auto &key) { c.engine = parse_engine(get_as<std::string>(v, key)); }},
        {"faithful", [&](auto &v, auto &key) { c.faithful = get_as<bool>(v, key); }},
        {"choice", [&](auto &v, auto &key) { c.choice = parse_choice(get_as<std::string>(v, key)); }},
        {"n_provers", [&](auto &v, auto &key) { c.n_provers = get_as<int>(v, key); }},
        {"delta_span", [&](auto &v, auto &key) { c.delta_span = get_as<double>(v, key); }},
        {"delta_step", [&](auto &v, auto &key) { c.delta_step = get_as<double>(v, key); }},
        {"level_kind", [&](auto &v, auto &key) { c.level_kind = parse_level_kind(get_as<std::string>(v, key)); }},
        {"n_samples", [&](auto &v, auto &key) { c.n_samples = get_as<int>(v, key); }},
        {"record_rounds", [&](auto &v, auto &key) { c.record_rounds = get_as<bool>(v, key); }},
    };
    for (const auto &[key, value] : j.items()) {
        auto it = setters.find(key);
        if (it == setters.end()) {
            throw ConfigurationError("unknown config field '" + key + "'");
        }
        it->second(value, key);
    }
    return c;
}

ExperimentConfig load_config(const std::string &path, ExperimentConfig base) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigurationError("cannot open config file " + path);
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error &e) {
        throw ConfigurationError("config file " + path + " is not valid JSON: " + e.what());
    }
    return merge_config(std::move(base), j);
}

nlohmann::ordered_json to_json(const ExperimentConfig &c) {
    nlohmann::ordered_json j;
    j["experiment"] = to_string(c.experiment);
    j["h"] = c.h;
    j["k"] = c.k;
    if (c.uses_chain()) {
        j["chain_z"] = c.chain_z;
        j["chain_xx"] = c.chain_xx;
        j["site_a"] = c.site_a;
        j["site_b"] = c.site_b;
    }
    j["theta"] = c.theta ? nlohmann::ordered_json(*c.theta) : nlohmann::ordered_json(nullptr);
    j["n_shot"] = c.n_shot;
    j["n_unitaries"] = c.n_unitaries;
    j["n_thetas"] = c.n_thetas;
    j["seed"] = c.seed;
    j["out"] = c.out;
    j["rule"] = c.rule == AcceptRule::Strict ? "strict" : "ztest";
    j["engine"] = to_string(c.engine);
    j["faithful"] = c.faithful;
    j["choice"] = to_string(c.choice);
    j["n_provers"] = c.n_provers;
    j["delta_span"] = c.delta_span;
    j["delta_step"] = c.delta_step;
    j["level_kind"] = to_string(c.level_kind);
    j["n_samples"] = c.n_samples;
    j["record_rounds"] = c.record_rounds;
    return j;
}

void validate(const ExperimentConfig &c) {
    auto positive = [](double x, const char *name) {
        if (!(std::isfinite(x) && x > 0.0)) {
            throw ConfigurationError(std::string(name) + " must be positive");
        }
    };
    if (!c.uses_chain()) {
        positive(c.h, "h");
        positive(c.k, "k");
    }
    positive(static_cast<double>(c.n_shot), "n_shot");
    positive(c.n_unitaries, "n_unitaries");
    positive(c.n_thetas, "n_thetas");
    positive(c.n_samples, "n_samples");
    positive(c.delta_span, "delta_span");
    positive(c.delta_step, "delta_step");
    if (c.n_provers < 2) {
        throw ConfigurationError("n_provers must be at least 2");
    }
    if (c.theta && !std::isfinite(*c.theta)) {
        throw ConfigurationError("theta must be finite");
    }
    if (c.out.empty()) {
        throw ConfigurationError("out must name a directory");
    }
    if (c.uses_chain() && c.experiment != Experiment::Qip) {
        throw ConfigurationError("chain models are only supported by qip");
    }
}

}  // namespace qet::cli
