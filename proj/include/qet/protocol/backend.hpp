#pragma once

#include <array>
#include <memory>
#include <optional>
#include <vector>

#include "qet/protocol/channel.hpp"
#include "qet/protocol/qet.hpp"
#include "qet/protocol/register.hpp"

namespace qet {

/// How a QET round is executed.
enum class Engine {
    /// Exact post-round states are computed once per (mu, nu) and each round
    /// samples its outcomes from them, like a shot-based simulator reading a
    /// final statevector.
    BranchSampling,
    /// Every round evolves the six-qubit register gate by gate, including
    /// both state-teleportation legs (minimal model only).
    FullCircuit,
};

const char *to_string(Engine e);

/// Exact outcome distributions of one QET setup, cached per (mu, nu, basis).
class BranchSampler {
  public:
    explicit BranchSampler(const QetSetup &setup);

    double probability(int mu) const { return p_[mu > 0 ? 0 : 1]; }
    int sample_mu(Rng &rng) const;
    /// Energy sample of the receiver measured in `basis` after outcome mu and
    /// rotation sign nu: the field group for Z, the interaction group for X.
    double sample_energy(int mu, int nu, Basis basis, Rng &rng) const;
    /// Exact single-shot mean and variance of that sample.
    std::pair<double, double> sample_moments(int mu, int nu, Basis basis) const;

  private:
    static std::size_t slot(int mu, int nu, Basis b) {
        return (mu > 0 ? 0 : 4) + (nu > 0 ? 0 : 2) + (b == Basis::Z ? 0 : 1);
    }

    ReceiverEnergy energy_;
    std::array<double, 2> p_{};
    std::array<std::vector<double>, 8> cdf_;
};

/// Value of an observable whose terms are all diagonal in the sampled basis,
/// given the sampled basis index.
double diagonal_value(const PauliObservable &obs, std::size_t index);

/// Physics of one prover's QET rounds as seen through the verifier.
class QetBackend {
  public:
    virtual ~QetBackend() = default;
    /// Steps 1-2: the witness reaches the verifier, who measures sigma_A and
    /// returns mu.
    virtual int deliver_witness(ClassicalChannel &prover_to_verifier, Rng &rng) = 0;
    /// Step 3: the prover rotates its receiver qubit with sign nu and hands it
    /// to the verifier.
    virtual void respond(int nu, ClassicalChannel &prover_to_verifier, Rng &rng) = 0;
    /// Step 4: the verifier measures the receiver energy in `basis`.
    virtual double measure(Basis basis, Rng &rng) = 0;
    /// Register of the latest round; null for the sampling engine.
    virtual const SharedRegister *last_register() const { return nullptr; }
};

std::unique_ptr<QetBackend> make_backend(Engine engine, const QetSetup &setup, PartyId prover);

}  // namespace qet
