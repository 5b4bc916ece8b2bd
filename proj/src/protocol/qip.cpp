#include "qet/protocol/qip.hpp"

#include <stdexcept>

#include "qet/errors.hpp"

namespace qet {

ProtocolTranscript run_qip(const QipConfig &config, const Rng &root) {
    if (config.n_shot <= 0) {
        throw ArgumentError("n_shot must be positive");
    }
    const PartyId prover = prover_id(0);
    auto backend = make_backend(config.engine, config.setup, prover);
    ClassicalChannel to_verifier(prover, kVerifier);
    ClassicalChannel to_prover(kVerifier, prover);

    ProtocolTranscript tr;
    const std::int64_t rounds = 2 * config.n_shot;
    if (config.record_rounds) {
        tr.rounds.reserve(static_cast<std::size_t>(rounds));
    }
    for (std::int64_t r = 0; r < rounds; ++r) {
        Rng rng = root.child(static_cast<std::uint64_t>(r));
        const Basis basis = (r % 2 == 0) ? Basis::Z : Basis::X;
        const auto bits_before = to_prover.bits_sent();
        const auto msgs_before = to_prover.messages_sent();

        const int mu = backend->deliver_witness(to_verifier, rng);
        to_prover.send(kVerifier, OutcomeBit{mu});

        const int mu_seen = to_prover.receive_as<OutcomeBit>(prover).mu;
        const int nu = config.faithful ? mu_seen : -mu_seen;
        backend->respond(nu, to_verifier, rng);
        to_verifier.send(prover, BasisAnnouncement{basis});

        const Basis announced = to_verifier.receive_as<BasisAnnouncement>(kVerifier).basis;
        const double sample = backend->measure(announced, rng);

        if (to_prover.bits_sent() - bits_before != 1 || to_prover.messages_sent() - msgs_before != 1) {
            throw std::logic_error("verifier exceeded its one-bit message budget");
        }
        ShotRecord rec{r, announced, mu, nu, std::nullopt, std::nullopt};
        if (announced == Basis::Z) {
            rec.h1_sample = sample;
        } else {
            rec.v_sample = sample;
        }
        tr.estimate.add(rec);
        if (config.record_rounds) {
            tr.rounds.push_back(rec);
        }
    }
    tr.rounds_run = rounds;
    tr.verifier_messages = to_prover.messages_sent();
    tr.verifier_bits = to_prover.bits_sent();
    tr.decision = decide(tr.estimate, config.rule);
    return tr;
}

}  // namespace qet
