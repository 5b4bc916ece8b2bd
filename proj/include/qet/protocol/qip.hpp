#pragma once

#include <cstdint>

#include "qet/protocol/backend.hpp"
#include "qet/protocol/transcript.hpp"

namespace qet {

struct QipConfig {
    QetSetup setup;
    /// An honest prover rotates with nu = mu; a dishonest one with -mu.
    bool faithful = true;
    /// Shots per measurement basis; the run has 2 * n_shot rounds.
    std::int64_t n_shot = 1000;
    AcceptRule rule = AcceptRule::Strict;
    Engine engine = Engine::BranchSampling;
    bool record_rounds = true;
};

/// Single-prover interactive proof.
///
/// Round r uses stream root.child(r) and measures in Z when r is even, X when
/// odd. Per round: the witness is teleported to the verifier, who measures
/// sigma_A and sends the one-bit outcome mu; the prover rotates its receiver
/// qubit, teleports it back and announces the basis; the verifier records an
/// energy sample. The verifier accepts on the sign of the mean energy.
ProtocolTranscript run_qip(const QipConfig &config, const Rng &root);

}  // namespace qet
