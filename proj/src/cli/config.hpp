#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qet/protocol/qsd.hpp"
#include "qet/protocol/transcript.hpp"

namespace qet::cli {

enum class Experiment { Qip, Qsd, Qmip, Soundness, DeltaSweep, Table1, LevelSet };

const char *to_string(Experiment e);
Experiment parse_experiment(const std::string &name);

enum class LevelKind { Theta, Observable, Field, Interaction };

const char *to_string(LevelKind k);

/// Effective settings of one run. Defaults follow the reference experiments:
/// (h, k) = (1, 1), 1000 shots, 500 x 600 attack sweep.
struct ExperimentConfig {
    Experiment experiment = Experiment::Qip;
    double h = 1.0;
    double k = 1.0;
    /// Optional chain model for qip; when set, h and k are ignored.
    std::vector<double> chain_z;
    std::vector<double> chain_xx;
    int site_a = 0;
    int site_b = 1;
    std::optional<double> theta;
    std::int64_t n_shot = 1000;
    int n_unitaries = 500;
    int n_thetas = 600;
    std::uint64_t seed = 0;
    std::string out = "qet-out";
    AcceptRule rule = AcceptRule::Strict;
    Engine engine = Engine::BranchSampling;
    bool faithful = true;
    VerifierChoice choice = VerifierChoice::Q1;
    int n_provers = 3;
    double delta_span = 0.5;
    double delta_step = 1e-3;
    LevelKind level_kind = LevelKind::Theta;
    int n_samples = 10;
    bool record_rounds = true;

    bool uses_chain() const { return !chain_z.empty() || !chain_xx.empty(); }
};

/// Overlays the keys of `j` onto `base`. Unknown keys and ill-typed values
/// throw ConfigurationError.
ExperimentConfig merge_config(ExperimentConfig base, const nlohmann::json &j);
ExperimentConfig load_config(const std::string &path, ExperimentConfig base = {});

nlohmann::ordered_json to_json(const ExperimentConfig &config);

/// Range checks; throws ConfigurationError.
void validate(const ExperimentConfig &config);

AcceptRule parse_rule(const std::string &name);
Engine parse_engine(const std::string &name);
VerifierChoice parse_choice(const std::string &name);
LevelKind parse_level_kind(const std::string &name);

}  // namespace qet::cli
