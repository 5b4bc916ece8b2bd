#include "app.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "qet/errors.hpp"

namespace qet::cli {

namespace {

/// Flag storage that remembers whether the user set it.
template <typename T>
struct Flag {
    T value{};
    CLI::Option *opt = nullptr;

    explicit operator bool() const { return opt != nullptr && opt->count() > 0; }
    const T &operator*() const { return value; }
};

template <typename T>
CLI::Option *add(CLI::App &app, const std::string &name, Flag<T> &flag, const std::string &help) {
    flag.opt = app.add_option(name, flag.value, help);
    return flag.opt;
}

template <typename T>
void override_with(const Flag<T> &flag, T &field) {
    if (flag) {
        field = *flag;
    }
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Quantum energy teleportation proof simulator"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(0, 1);

    Flag<std::string> config_path, out_dir, rule, engine, choice, level_kind;
    Flag<double> h, k, theta, delta_span, delta_step;
    Flag<std::int64_t> n_shot;
    Flag<int> n_unitaries, n_thetas, n_provers, n_samples, site_a, site_b;
    Flag<std::uint64_t> seed;
    Flag<std::vector<double>> chain_z, chain_xx;
    bool dishonest = false;
    bool no_rounds = false;

    add(app, "--config", config_path, "JSON config file; flags override its fields");
    add(app, "--h", h, "Field strength h");
    add(app, "--k", k, "Coupling k");
    add(app, "--theta", theta, "Rotation angle (default: optimal)");
    add(app, "--n-shot", n_shot, "Shots per measurement basis");
    add(app, "--n-unitaries", n_unitaries, "Haar states in the soundness sweep");
    add(app, "--n-thetas", n_thetas, "Angles per Haar state");
    add(app, "--seed", seed, "64-bit seed");
    add(app, "--out", out_dir, "Output directory");
    add(app, "--rule", rule, "Accept rule")->check(CLI::IsMember({"strict", "ztest"}));
    add(app, "--engine", engine, "Round engine")->check(CLI::IsMember({"branch-sampling", "full-circuit"}));
    add(app, "--choice", choice, "Verifier choice in qsd")->check(CLI::IsMember({"Q1", "Q2"}));
    add(app, "--n-provers", n_provers, "Provers in qmip");
    add(app, "--delta-span", delta_span, "Half-width of the delta grid");
    add(app, "--delta-step", delta_step, "Delta grid spacing");
    add(app, "--level-kind", level_kind, "Level set to trace")
        ->check(CLI::IsMember({"theta", "observable", "field", "interaction"}));
    add(app, "--n-samples", n_samples, "Level-set samples");
    add(app, "--chain-z", chain_z, "Chain Z coefficients (qip)");
    add(app, "--chain-xx", chain_xx, "Chain XX coefficients (qip)");
    add(app, "--site-a", site_a, "Chain supplier site");
    add(app, "--site-b", site_b, "Chain receiver site");
    app.add_flag("--dishonest", dishonest, "Prover rotates with -mu");
    app.add_flag("--no-rounds", no_rounds, "Skip per-round JSONL output");

    const char *names[] = {"qip", "qsd", "qmip", "soundness", "delta-sweep", "table1", "level-set"};
    const char *help[] = {
        "Single-prover interactive proof",
        "State-distinguishability game",
        "Multi-prover interactive proof",
        "Haar attack sweep",
        "Energy around the optimal angle",
        "Analytic conditional energies",
        "Models indistinguishable to the verifier",
    };
    for (std::size_t i = 0; i < std::size(names); ++i) {
        app.add_subcommand(names[i], help[i])->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        ExperimentConfig cfg;
        if (config_path) {
            cfg = load_config(*config_path, cfg);
        } else if (app.get_subcommands().empty()) {
            err << app.help();
            return kExitUsage;
        }
        if (!app.get_subcommands().empty()) {
            cfg.experiment = parse_experiment(app.get_subcommands().front()->get_name());
        }
        override_with(h, cfg.h);
        override_with(k, cfg.k);
        if (theta) {
            cfg.theta = *theta;
        }
        override_with(n_shot, cfg.n_shot);
        override_with(n_unitaries, cfg.n_unitaries);
        override_with(n_thetas, cfg.n_thetas);
        override_with(seed, cfg.seed);
        override_with(out_dir, cfg.out);
        override_with(n_provers, cfg.n_provers);
        override_with(delta_span, cfg.delta_span);
        override_with(delta_step, cfg.delta_step);
        override_with(n_samples, cfg.n_samples);
        override_with(chain_z, cfg.chain_z);
        override_with(chain_xx, cfg.chain_xx);
        override_with(site_a, cfg.site_a);
        override_with(site_b, cfg.site_b);
        if (rule) {
            cfg.rule = parse_rule(*rule);
        }
        if (engine) {
            cfg.engine = parse_engine(*engine);
        }
        if (choice) {
            cfg.choice = parse_choice(*choice);
        }
        if (level_kind) {
            cfg.level_kind = parse_level_kind(*level_kind);
        }
        if (dishonest) {
            cfg.faithful = false;
        }
        if (no_rounds) {
            cfg.record_rounds = false;
        }
        run_experiment(cfg, out);
        return kExitOk;
    } catch (const std::exception &e) {
        const int code = exit_code_for(e);
        err << "qetproof: " << (code == kExitUsage ? "" : code == kExitCapacity ? "capacity: " : "internal: ")
            << e.what() << '\n';
        return code;
    }
}

}  // namespace qet::cli
