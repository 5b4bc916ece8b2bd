#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "qet/protocol/backend.hpp"
#include "qet/protocol/transcript.hpp"

namespace qet {

/// One prover's local instance. `sites` are the global labels of its
/// (supplier, receiver) pair; instances must not share sites.
struct QmipProver {
    MinimalModel model;
    std::array<int, 2> sites;
    std::optional<Statevector> state;
    std::optional<double> theta;
    bool faithful = true;
};

struct QmipConfig {
    std::vector<QmipProver> provers;
    std::int64_t n_shot = 1000;  ///< shots per basis and prover
    AcceptRule rule = AcceptRule::Strict;
    Engine engine = Engine::BranchSampling;
    bool record_rounds = true;
};

struct QmipResult {
    std::vector<ProtocolTranscript> transcripts;  ///< one per prover
    std::vector<Decision> decisions;
    std::int64_t broadcasts = 0;
};

/// N-prover proof run in lockstep: every round each prover delivers its
/// witness, the verifier broadcasts all outcomes, each prover rotates and
/// returns its receiver, and the verifier samples each local energy.
/// Prover p in round r draws from root.child(p).child(r).
/// Throws ConfigurationError for fewer than two provers or shared sites.
QmipResult run_qmip(const QmipConfig &config, const Rng &root);

}  // namespace qet
