#include "qet/protocol/qsd.hpp"

#include "qet/errors.hpp"
#include "qet/protocol/register.hpp"

namespace qet {

const char *to_string(VerifierChoice c) { return c == VerifierChoice::Q1 ? "Q1" : "Q2"; }

namespace {

struct RoundOutcome {
    int mu;
    int nu;
    double sample;
};

RoundOutcome register_round(const QetSetup &setup, VerifierChoice choice, Basis basis, ClassicalChannel &to_verifier,
                            Rng &rng) {
    const PartyId prover = prover_id(0);
    SharedRegister reg(setup.state, {prover, prover});
    const int mu = reg.measure(prover, 0, Pauli::X, rng);
    to_verifier.send(prover, OutcomeBit{mu});
    reg.transfer(prover, 1, kVerifier);

    const int mu_seen = to_verifier.receive_as<OutcomeBit>(kVerifier).mu;
    const int nu = choice == VerifierChoice::Q1 ? mu_seen : -mu_seen;
    ConditionalRotation rot(setup.theta, nu, PauliString::single(2, 1, Pauli::Y));
    reg.apply(kVerifier, rot.matrix(), {1}, nu > 0 ? "U(+1)" : "U(-1)");
    reg.transfer(kVerifier, 1, prover);

    const auto &obs = basis == Basis::Z ? setup.energy.field : setup.energy.interaction;
    const Pauli p = basis == Basis::Z ? Pauli::Z : Pauli::X;
    std::size_t index = 0;
    for (int site : obs.support()) {
        if (reg.measure(prover, site, p, rng) < 0) {
            index |= std::size_t{1} << (1 - site);
        }
    }
    return {mu, nu, diagonal_value(obs, index)};
}

}  // namespace

QsdResult run_qsd(const QsdConfig &config, const Rng &root) {
    if (config.n_shot <= 0) {
        throw ArgumentError("n_shot must be positive");
    }
    const QetSetup setup = minimal_setup(config.model, std::nullopt, config.theta);
    std::optional<BranchSampler> sampler;
    if (config.engine == Engine::BranchSampling) {
        sampler.emplace(setup);
    }
    ClassicalChannel to_verifier(prover_id(0), kVerifier);

    QsdResult res{};
    auto &tr = res.transcript;
    const std::int64_t rounds = 2 * config.n_shot;
    for (std::int64_t r = 0; r < rounds; ++r) {
        Rng rng = root.child(static_cast<std::uint64_t>(r));
        const Basis basis = (r % 2 == 0) ? Basis::Z : Basis::X;
        RoundOutcome out{};
        if (sampler) {
            out.mu = sampler->sample_mu(rng);
            to_verifier.send(prover_id(0), OutcomeBit{out.mu});
            const int mu_seen = to_verifier.receive_as<OutcomeBit>(kVerifier).mu;
            out.nu = config.choice == VerifierChoice::Q1 ? mu_seen : -mu_seen;
            out.sample = sampler->sample_energy(out.mu, out.nu, basis, rng);
        } else {
            out = register_round(setup, config.choice, basis, to_verifier, rng);
        }
        ShotRecord rec{r, basis, out.mu, out.nu, std::nullopt, std::nullopt};
        if (basis == Basis::Z) {
            rec.h1_sample = out.sample;
        } else {
            rec.v_sample = out.sample;
        }
        tr.estimate.add(rec);
        if (config.record_rounds) {
            tr.rounds.push_back(rec);
        }
    }
    tr.rounds_run = rounds;
    res.interaction_estimate = tr.estimate.interaction.mean();
    res.field_estimate = tr.estimate.field.mean();
    res.guess = res.interaction_estimate < 0.0 ? VerifierChoice::Q1 : VerifierChoice::Q2;
    res.field_guess = res.field_estimate > 0.0 ? VerifierChoice::Q1 : VerifierChoice::Q2;
    res.verifier_accepts = res.guess == config.choice;
    tr.decision = res.verifier_accepts ? Decision::Accept : Decision::Reject;
    return res;
}

}  // namespace qet
