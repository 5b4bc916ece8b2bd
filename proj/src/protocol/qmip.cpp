#include "qet/protocol/qmip.hpp"

#include <memory>
#include <set>

#include "qet/errors.hpp"

namespace qet {

namespace {

void validate(const QmipConfig &config) {
    if (config.provers.size() < 2) {
        throw ConfigurationError("qmip needs at least two provers");
    }
    if (config.n_shot <= 0) {
        throw ArgumentError("n_shot must be positive");
    }
    std::set<int> used;
    for (const auto &p : config.provers) {
        if (p.sites[0] == p.sites[1]) {
            throw ConfigurationError("prover sites must be distinct");
        }
        for (int s : p.sites) {
            if (s < 0) {
                throw ConfigurationError("site labels must be non-negative");
            }
            if (!used.insert(s).second) {
                throw ConfigurationError("local Hamiltonians overlap on site " + std::to_string(s));
            }
        }
    }
}

}  // namespace

QmipResult run_qmip(const QmipConfig &config, const Rng &root) {
    validate(config);
    const std::size_t n = config.provers.size();

    std::vector<std::unique_ptr<QetBackend>> backends;
    std::vector<ClassicalChannel> uplinks;
    std::vector<ClassicalChannel> downlinks;
    std::vector<Rng> streams;
    for (std::size_t p = 0; p < n; ++p) {
        const auto &cfg = config.provers[p];
        const PartyId id = prover_id(static_cast<int>(p));
        backends.push_back(make_backend(config.engine, minimal_setup(cfg.model, cfg.state, cfg.theta), id));
        uplinks.emplace_back(id, kVerifier);
        downlinks.emplace_back(kVerifier, id);
        streams.push_back(root.child(p));
    }

    QmipResult res;
    res.transcripts.resize(n);
    const std::int64_t rounds = 2 * config.n_shot;
    std::vector<Rng> rngs(n, root);
    std::vector<int> mus(n);
    for (std::int64_t r = 0; r < rounds; ++r) {
        const Basis basis = (r % 2 == 0) ? Basis::Z : Basis::X;
        for (std::size_t p = 0; p < n; ++p) {
            rngs[p] = streams[p].child(static_cast<std::uint64_t>(r));
            mus[p] = backends[p]->deliver_witness(uplinks[p], rngs[p]);
        }
        for (std::size_t p = 0; p < n; ++p) {
            downlinks[p].send(kVerifier, OutcomeBroadcast{mus});
        }
        ++res.broadcasts;
        for (std::size_t p = 0; p < n; ++p) {
            const PartyId id = prover_id(static_cast<int>(p));
            const auto seen = downlinks[p].receive_as<OutcomeBroadcast>(id).mus;
            const int nu = config.provers[p].faithful ? seen[p] : -seen[p];
            backends[p]->respond(nu, uplinks[p], rngs[p]);
            const double sample = backends[p]->measure(basis, rngs[p]);

            ShotRecord rec{r, basis, mus[p], nu, std::nullopt, std::nullopt};
            if (basis == Basis::Z) {
                rec.h1_sample = sample;
            } else {
                rec.v_sample = sample;
            }
            auto &tr = res.transcripts[p];
            tr.estimate.add(rec);
            if (config.record_rounds) {
                tr.rounds.push_back(rec);
            }
        }
    }
    for (std::size_t p = 0; p < n; ++p) {
        auto &tr = res.transcripts[p];
        tr.rounds_run = rounds;
        tr.verifier_messages = downlinks[p].messages_sent();
        tr.verifier_bits = downlinks[p].bits_sent();
        tr.decision = decide(tr.estimate, config.rule);
        res.decisions.push_back(tr.decision);
    }
    return res;
}

}  // namespace qet
