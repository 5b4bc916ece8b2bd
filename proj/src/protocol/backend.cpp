#include "qet/protocol/backend.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "qet/errors.hpp"
#include "qet/measurement.hpp"
#include "qet/protocol/teleport.hpp"

namespace qet {

const char *to_string(Engine e) { return e == Engine::BranchSampling ? "branch-sampling" : "full-circuit"; }

double diagonal_value(const PauliObservable &obs, std::size_t index) {
    double v = obs.constant();
    for (const auto &t : obs.terms()) {
        const std::size_t mask = t.pauli.x_mask() | t.pauli.z_mask();
        v += (std::popcount(index & mask) & 1) ? -t.coefficient : t.coefficient;
    }
    return v;
}

namespace {

std::vector<double> cdf_of(const Statevector &s) {
    std::vector<double> cdf(s.dim());
    double acc = 0.0;
    for (std::size_t i = 0; i < s.dim(); ++i) {
        acc += std::norm(s[i]);
        cdf[i] = acc;
    }
    return cdf;
}

std::size_t sample_index(const std::vector<double> &cdf, Rng &rng) {
    const double u = rng.uniform() * cdf.back();
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) {
        --it;
    }
    return static_cast<std::size_t>(it - cdf.begin());
}

Statevector to_hadamard_basis(Statevector s, const std::vector<int> &sites) {
    for (int q : sites) {
        s = apply_unitary(s, gates::hadamard(), {q});
    }
    return s;
}

}  // namespace

BranchSampler::BranchSampler(const QetSetup &setup) : energy_(setup.energy) {
    const int n = setup.state.n_qubits();
    if (energy_.field.n_qubits() != n) {
        throw ArgumentError("receiver energy width does not match prover state");
    }
    const auto branches = branch_measure(setup.state, setup.sigma_a());
    const auto x_sites = energy_.interaction.support();
    for (const auto &b : branches) {
        p_[b.outcome > 0 ? 0 : 1] = b.probability;
        for (int nu : {1, -1}) {
            ConditionalRotation rot(setup.theta, nu, setup.sigma_b());
            const Statevector post = rot.apply(b.post_state);
            cdf_[slot(b.outcome, nu, Basis::Z)] = cdf_of(post);
            cdf_[slot(b.outcome, nu, Basis::X)] = cdf_of(to_hadamard_basis(post, x_sites));
        }
    }
}

int BranchSampler::sample_mu(Rng &rng) const { return rng.uniform() < p_[0] ? +1 : -1; }

double BranchSampler::sample_energy(int mu, int nu, Basis basis, Rng &rng) const {
    const std::size_t idx = sample_index(cdf_[slot(mu, nu, basis)], rng);
    return diagonal_value(basis == Basis::Z ? energy_.field : energy_.interaction, idx);
}

std::pair<double, double> BranchSampler::sample_moments(int mu, int nu, Basis basis) const {
    const auto &cdf = cdf_[slot(mu, nu, basis)];
    const auto &obs = basis == Basis::Z ? energy_.field : energy_.interaction;
    double m1 = 0.0;
    double m2 = 0.0;
    double prev = 0.0;
    for (std::size_t i = 0; i < cdf.size(); ++i) {
        const double p = cdf[i] - prev;
        prev = cdf[i];
        const double v = diagonal_value(obs, i);
        m1 += p * v;
        m2 += p * v * v;
    }
    return {m1, std::max(0.0, m2 - m1 * m1)};
}

namespace {

class SamplingBackend final : public QetBackend {
  public:
    explicit SamplingBackend(const QetSetup &setup) : sampler_(setup) {}

    int deliver_witness(ClassicalChannel &, Rng &rng) override {
        mu_ = sampler_.sample_mu(rng);
        return mu_;
    }
    void respond(int nu, ClassicalChannel &, Rng &) override { nu_ = nu; }
    double measure(Basis basis, Rng &rng) override { return sampler_.sample_energy(mu_, nu_, basis, rng); }

  private:
    BranchSampler sampler_;
    int mu_ = 1;
    int nu_ = 1;
};

/// Six-site layout: 0,1 the prover's pair; (2,3) and (4,5) Bell pairs whose
/// second halves end up with the verifier. Site 3 receives the witness and
/// site 5 the receiver qubit.
class CircuitBackend final : public QetBackend {
  public:
    static constexpr int kWitness = 0;
    static constexpr int kReceiver = 1;
    static constexpr int kHalf1 = 2;
    static constexpr int kWitnessTarget = 3;
    static constexpr int kHalf2 = 4;
    static constexpr int kReceiverTarget = 5;

    CircuitBackend(const QetSetup &setup, PartyId prover) : setup_(setup), prover_(prover) {
        if (setup.state.n_qubits() != 2 || setup.site_a != 0 || setup.site_b != 1) {
            throw ArgumentError("full-circuit engine supports the two-qubit minimal setup only");
        }
        initial_ = tensor(setup.state, make_basis_state(4));
    }

    int deliver_witness(ClassicalChannel &to_verifier, Rng &rng) override {
        reg_.emplace(initial_, std::vector<PartyId>(6, prover_));
        qst_teleport(*reg_, prover_, kVerifier, kWitness, kHalf1, kWitnessTarget, to_verifier, rng);
        mu_ = reg_->measure(kVerifier, kWitnessTarget, Pauli::X, rng);
        return mu_;
    }

    void respond(int nu, ClassicalChannel &to_verifier, Rng &rng) override {
        ConditionalRotation rot(setup_.theta, nu, PauliString::single(6, kReceiver, Pauli::Y));
        reg_->apply(prover_, rot.matrix(), {kReceiver}, nu > 0 ? "U(+1)" : "U(-1)");
        qst_teleport(*reg_, prover_, kVerifier, kReceiver, kHalf2, kReceiverTarget, to_verifier, rng);
    }

    double measure(Basis basis, Rng &rng) override {
        const Pauli p = basis == Basis::Z ? Pauli::Z : Pauli::X;
        const auto &obs = basis == Basis::Z ? setup_.energy.field : setup_.energy.interaction;
        // Outcomes on logical sites 0 (held at site 3) and 1 (held at site 5).
        std::size_t index = 0;
        for (int logical : obs.support()) {
            const int physical = logical == 0 ? kWitnessTarget : kReceiverTarget;
            if (reg_->measure(kVerifier, physical, p, rng) < 0) {
                index |= std::size_t{1} << (1 - logical);
            }
        }
        return diagonal_value(obs, index);
    }

    const SharedRegister *last_register() const override { return reg_ ? &*reg_ : nullptr; }

  private:
    QetSetup setup_;
    PartyId prover_;
    Statevector initial_ = make_basis_state(1);
    std::optional<SharedRegister> reg_;
    int mu_ = 1;
};

}  // namespace

std::unique_ptr<QetBackend> make_backend(Engine engine, const QetSetup &setup, PartyId prover) {
    if (engine == Engine::FullCircuit) {
        return std::make_unique<CircuitBackend>(setup, prover);
    }
    return std::make_unique<SamplingBackend>(setup);
}

}  // namespace qet
