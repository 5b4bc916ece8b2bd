#pragma once

#include <cstdint>
#include <optional>

#include "qet/protocol/backend.hpp"
#include "qet/protocol/transcript.hpp"

namespace qet {

/// Q1 applies U(+mu) (faithful), Q2 applies U(-mu).
enum class VerifierChoice { Q1, Q2 };

const char *to_string(VerifierChoice c);

struct QsdConfig {
    MinimalModel model;
    /// Fixed once for the whole game.
    VerifierChoice choice = VerifierChoice::Q1;
    std::optional<double> theta;  ///< defaults to the optimal angle
    std::int64_t n_shot = 1000;   ///< shots per measurement basis
    Engine engine = Engine::BranchSampling;
    bool record_rounds = true;
};

struct QsdResult {
    /// Guess from the sign of the interaction energy (negative means Q1).
    VerifierChoice guess;
    /// Cross-check from the receiver field energy (positive means Q1).
    VerifierChoice field_guess;
    double interaction_estimate;
    double field_estimate;
    /// The verifier accepts iff the prover named its choice.
    bool verifier_accepts;
    ProtocolTranscript transcript;
};

/// State-distinguishability game. Per round the prover measures X on its
/// first qubit, sends mu, ships the second qubit to the verifier, who applies
/// U(+mu) or U(-mu) and ships it back; the prover then measures Z on the
/// second qubit (even rounds) or X on both (odd rounds).
/// With Engine::FullCircuit every round is evolved on a two-qubit register
/// with ownership transfers; the sampling engine draws from exact branches.
QsdResult run_qsd(const QsdConfig &config, const Rng &root);

}  // namespace qet
