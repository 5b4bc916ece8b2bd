#include "commands.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>

#include "qet/analysis.hpp"
#include "qet/errors.hpp"
#include "qet/protocol/qip.hpp"
#include "qet/protocol/qmip.hpp"
#include "qet/protocol/qsd.hpp"

namespace fs = std::filesystem;

namespace qet::cli {

namespace {

using Json = nlohmann::ordered_json;

class Outputs {
  public:
    explicit Outputs(fs::path dir) : dir_(std::move(dir)) { fs::create_directories(dir_); }

    std::ofstream open(const std::string &name) {
        names_.push_back(name);
        std::ofstream f(dir_ / name, std::ios::binary | std::ios::trunc);
        if (!f) {
            throw std::runtime_error("cannot write " + (dir_ / name).string());
        }
        return f;
    }

    Json listing() const {
        Json arr = Json::array();
        for (const auto &n : names_) {
            const auto p = dir_ / n;
            arr.push_back(Json{{"path", n}, {"bytes", fs::file_size(p)}, {"sha256", sha256_file(p.string())}});
        }
        return arr;
    }

    const fs::path &dir() const { return dir_; }

  private:
    fs::path dir_;
    std::vector<std::string> names_;
};

Json estimate_json(const ProtocolTranscript &tr) {
    return Json{
        {"mean_energy", tr.estimate.mean_energy()},
        {"standard_error", tr.estimate.standard_error()},
        {"field_mean", tr.estimate.field.mean()},
        {"interaction_mean", tr.estimate.interaction.mean()},
        {"decision", to_string(tr.decision)},
        {"rounds", tr.rounds_run},
        {"verifier_messages", tr.verifier_messages},
        {"verifier_bits", tr.verifier_bits},
    };
}

void write_rounds(Outputs &out, const std::string &name, const ProtocolTranscript &tr, bool record) {
    if (record) {
        auto f = out.open(name);
        write_jsonl(f, tr.rounds);
    }
}

Json run_qip_cmd(const ExperimentConfig &c, Outputs &out) {
    QipConfig qc{c.uses_chain() ? chain_setup(GeneralChainModel(c.chain_z, c.chain_xx), c.site_a, c.site_b)
                                : minimal_setup(MinimalModel(c.h, c.k), std::nullopt, c.theta)};
    if (c.uses_chain() && c.theta) {
        qc.setup.theta = *c.theta;
    }
    qc.faithful = c.faithful;
    qc.n_shot = c.n_shot;
    qc.rule = c.rule;
    qc.engine = c.engine;
    qc.record_rounds = c.record_rounds;
    const auto tr = run_qip(qc, Rng(c.seed));
    write_rounds(out, "rounds.jsonl", tr, c.record_rounds);
    Json s = estimate_json(tr);
    s["theta"] = qc.setup.theta;
    return s;
}

Json run_qsd_cmd(const ExperimentConfig &c, Outputs &out) {
    QsdConfig qc{MinimalModel(c.h, c.k)};
    qc.choice = c.choice;
    qc.theta = c.theta;
    qc.n_shot = c.n_shot;
    qc.engine = c.engine;
    qc.record_rounds = c.record_rounds;
    const auto res = run_qsd(qc, Rng(c.seed));
    write_rounds(out, "rounds.jsonl", res.transcript, c.record_rounds);
    return Json{
        {"choice", to_string(c.choice)},
        {"guess", to_string(res.guess)},
        {"field_guess", to_string(res.field_guess)},
        {"interaction_estimate", res.interaction_estimate},
        {"field_estimate", res.field_estimate},
        {"verifier_accepts", res.verifier_accepts},
    };
}

Json run_qmip_cmd(const ExperimentConfig &c, Outputs &out) {
    QmipConfig qc;
    for (int p = 0; p < c.n_provers; ++p) {
        qc.provers.push_back(QmipProver{MinimalModel(c.h, c.k), {2 * p, 2 * p + 1}, std::nullopt, c.theta, c.faithful});
    }
    qc.n_shot = c.n_shot;
    qc.rule = c.rule;
    qc.engine = c.engine;
    qc.record_rounds = c.record_rounds;
    const auto res = run_qmip(qc, Rng(c.seed));

    auto f = out.open("provers.csv");
    f << "prover,mean_energy,standard_error,decision\n" << std::setprecision(17);
    Json provers = Json::array();
    for (std::size_t p = 0; p < res.transcripts.size(); ++p) {
        const auto &tr = res.transcripts[p];
        f << p << ',' << tr.estimate.mean_energy() << ',' << tr.estimate.standard_error() << ','
          << to_string(tr.decision) << '\n';
        write_rounds(out, "rounds_prover" + std::to_string(p) + ".jsonl", tr, c.record_rounds);
        provers.push_back(estimate_json(tr));
    }
    return Json{{"broadcasts", res.broadcasts}, {"provers", provers}};
}

Json run_soundness_cmd(const ExperimentConfig &c, Outputs &out) {
    const auto res = soundness_sweep(MinimalModel(c.h, c.k), c.n_unitaries, c.n_thetas, Rng(c.seed));
    {
        auto f = out.open("attacks.csv");
        write_attack_csv(f, res.samples);
    }
    std::vector<double> fid;
    std::vector<double> energy;
    for (const auto &s : res.samples) {
        fid.push_back(s.fidelity);
        energy.push_back(s.energy);
    }
    for (const auto &[name, values] : {std::pair{"fidelity_histogram.csv", &fid}, {"energy_histogram.csv", &energy}}) {
        const auto hist = histogram(*values, 100);
        auto f = out.open(name);
        f << "bin_lo,bin_hi,count\n" << std::setprecision(17);
        const double w = (hist.hi - hist.lo) / 100.0;
        for (std::size_t b = 0; b < hist.counts.size(); ++b) {
            f << hist.lo + w * b << ',' << hist.lo + w * (b + 1) << ',' << hist.counts[b] << '\n';
        }
    }
    return Json{
        {"samples", res.samples.size()},
        {"negative_fraction", res.negative_fraction},
        {"control_energy", res.control.energy},
        {"control_fidelity", res.control.fidelity},
        {"control_theta", res.control.theta},
    };
}

Json run_delta_cmd(const ExperimentConfig &c, Outputs &out) {
    const MinimalModel model(c.h, c.k);
    const int half = static_cast<int>(std::floor(c.delta_span / c.delta_step + 1e-9));
    if (2 * half + 1 > 10'000'000) {
        throw CapacityError("delta grid larger than 1e7 points");
    }
    std::vector<double> grid;
    for (int i = -half; i <= half; ++i) {
        grid.push_back(i * c.delta_step);
    }
    const auto reports = delta_sensitivity(model, grid);
    {
        auto f = out.open("delta_sweep.csv");
        write_energy_csv(f, model, reports);
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < reports.size(); ++i) {
        if (reports[i].eb < reports[best].eb) {
            best = i;
        }
    }
    return Json{{"points", reports.size()},
                {"argmin_delta", reports[best].delta},
                {"min_energy", reports[best].eb},
                {"theta_star", minimal_theta(model).theta}};
}

Json run_table1_cmd(Outputs &out) {
    const std::vector<std::pair<double, double>> models{{1.0, 0.2}, {1.0, 0.5}, {1.0, 1.0}, {1.5, 1.0}};
    std::vector<ConditionalTable> rows;
    for (auto [h, k] : models) {
        rows.push_back(conditional_table(MinimalModel(h, k)));
    }
    auto f = out.open("table1.csv");
    f << "quantity";
    for (auto [h, k] : models) {
        f << ",h=" << h << " k=" << k;
    }
    f << '\n' << std::fixed << std::setprecision(4);
    const std::vector<std::pair<const char *, double ConditionalTable::*>> quantities{
        {"H1_C", &ConditionalTable::h1_c},
        {"H1_I", &ConditionalTable::h1_i},
        {"V_C", &ConditionalTable::v_c},
        {"V_I", &ConditionalTable::v_i},
    };
    Json summary = Json::object();
    for (const auto &[name, field] : quantities) {
        f << name;
        Json vals = Json::array();
        for (const auto &r : rows) {
            f << ',' << r.*field;
            vals.push_back(r.*field);
        }
        f << '\n';
        summary[name] = vals;
    }
    return summary;
}

Json run_level_cmd(const ExperimentConfig &c, Outputs &out) {
    const MinimalModel model(c.h, c.k);
    const double theta = c.theta ? *c.theta : minimal_theta(model).theta;
    std::vector<ModelPair> pairs;
    Json target;
    switch (c.level_kind) {
    case LevelKind::Theta:
        pairs = theta_level_set(theta, c.n_samples);
        target = Json{{"theta", theta}, {"sin2theta", std::sin(2.0 * theta)}};
        break;
    case LevelKind::Observable: {
        const auto e = pauli_expectations(model, theta);
        pairs = observable_level_set(e.xx, e.z, theta, c.n_samples);
        target = Json{{"xx", e.xx}, {"z", e.z}, {"theta", theta}};
        break;
    }
    case LevelKind::Field:
    case LevelKind::Interaction: {
        const auto term = c.level_kind == LevelKind::Field ? EnergyTerm::Field : EnergyTerm::Interaction;
        const double t = term_energy(term, model, theta);
        pairs = energy_level_set(term, t, theta, c.n_samples);
        target = Json{{"energy", t}, {"theta", theta}};
        break;
    }
    }
    const auto first = minimal_ground_state(MinimalModel(pairs.front().second, pairs.front().first));
    auto f = out.open("level_set.csv");
    f << "k,h,theta_star,xx,z,h1,v,fidelity_to_first\n" << std::setprecision(17);
    for (const auto &[k, h] : pairs) {
        const MinimalModel m(h, k);
        const auto e = pauli_expectations(m, theta);
        const auto rep = analytic_h1_v(m, theta);
        f << k << ',' << h << ',' << minimal_theta(m).theta << ',' << e.xx << ',' << e.z << ',' << rep.h1 << ','
          << rep.v << ',' << state_fidelity(first, minimal_ground_state(m)) << '\n';
    }
    return Json{{"kind", to_string(c.level_kind)}, {"target", target}, {"pairs", pairs.size()}};
}

}  // namespace

std::string sha256_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read " + path);
    }
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("sha256 init failed");
    }
    std::vector<char> buf(1 << 16);
    while (in) {
        in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
        if (in.gcount() > 0) {
            EVP_DigestUpdate(ctx.get(), buf.data(), static_cast<std::size_t>(in.gcount()));
        }
    }
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx.get(), md, &len);
    std::ostringstream hex;
    for (unsigned int i = 0; i < len; ++i) {
        hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    }
    return hex.str();
}

Json run_experiment(const ExperimentConfig &config, std::ostream &log) {
    validate(config);
    const auto start = std::chrono::steady_clock::now();
    Outputs out{fs::path(config.out)};

    Json summary;
    switch (config.experiment) {
    case Experiment::Qip:
        summary = run_qip_cmd(config, out);
        break;
    case Experiment::Qsd:
        summary = run_qsd_cmd(config, out);
        break;
    case Experiment::Qmip:
        summary = run_qmip_cmd(config, out);
        break;
    case Experiment::Soundness:
        summary = run_soundness_cmd(config, out);
        break;
    case Experiment::DeltaSweep:
        summary = run_delta_cmd(config, out);
        break;
    case Experiment::Table1:
        summary = run_table1_cmd(out);
        break;
    case Experiment::LevelSet:
        summary = run_level_cmd(config, out);
        break;
    }
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    Json manifest;
    manifest["tool"] = "qetproof";
    manifest["experiment"] = to_string(config.experiment);
    manifest["seed"] = config.seed;
    manifest["config"] = to_json(config);
    manifest["wall_time_s"] = wall;
    manifest["summary"] = summary;
    manifest["outputs"] = out.listing();
    {
        std::ofstream f(out.dir() / "manifest.json", std::ios::trunc);
        f << manifest.dump(2) << '\n';
    }
    log << to_string(config.experiment) << ": " << summary.dump() << " (" << std::fixed << std::setprecision(3)
        << wall << " s, " << (out.dir() / "manifest.json").string() << ")\n";
    return manifest;
}

int exit_code_for(const std::exception &e) {
    if (dynamic_cast<const CapacityError *>(&e)) {
        return kExitCapacity;
    }
    // Bad arguments, bad configs, unreachable level sets, degenerate models.
    if (dynamic_cast<const std::invalid_argument *>(&e) || dynamic_cast<const std::domain_error *>(&e)) {
        return kExitUsage;
    }
    return kExitInternal;
}

}  // namespace qet::cli
