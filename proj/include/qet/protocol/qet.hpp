#pragma once

#include <optional>
#include <utility>

#include "qet/ensemble.hpp"
#include "qet/hamiltonian.hpp"
#include "qet/rng.hpp"

namespace qet {

/// U(nu, theta) = cos(theta) I - i nu sin(theta) sigma on one site.
struct ConditionalRotation {
    double theta;
    int sign;  ///< nu in {-1, +1}
    PauliString axis;

    ConditionalRotation(double theta, int sign, PauliString axis);

    /// 2x2 matrix acting on the axis site.
    ComplexMatrix matrix() const;
    int site() const { return axis.support().front(); }
    Statevector apply(const Statevector &state) const;
};

/// Energy the verifier samples at the receiver, split by measurement basis.
/// `field` holds Z-type terms (sampled in the computational basis) and
/// `interaction` X-type terms (sampled after Hadamards on their support).
struct ReceiverEnergy {
    PauliObservable field;
    PauliObservable interaction;

    ReceiverEnergy(PauliObservable field, PauliObservable interaction);

    static ReceiverEnergy minimal(const MinimalModel &model);
    /// Splits receiver-local terms into Z-type and X-type groups.
    static ReceiverEnergy from_terms(const std::vector<PauliObservable> &terms);

    PauliObservable total() const { return field + interaction; }
};

/// Everything a QET round needs: the prover's state, the supplier and
/// receiver sites, the rotation angle and the receiver energy.
/// sigma_A is X on site_a and sigma_B is Y on site_b.
struct QetSetup {
    Statevector state;
    int site_a;
    int site_b;
    double theta;
    ReceiverEnergy energy;

    PauliString sigma_a() const { return PauliString::single(state.n_qubits(), site_a, Pauli::X); }
    PauliString sigma_b() const { return PauliString::single(state.n_qubits(), site_b, Pauli::Y); }
};

/// Minimal model on sites (0, 1). Defaults: ground state and optimal angle.
QetSetup minimal_setup(const MinimalModel &model, std::optional<Statevector> prover_state = std::nullopt,
                       std::optional<double> theta = std::nullopt);

/// Chain model: exact ground state, zero-mean local terms, exact theta and
/// the terms touching `site_b` as receiver energy.
QetSetup chain_setup(const GeneralChainModel &model, int site_a, int site_b);

struct QetRoundResult {
    int mu;
    int nu;
    Statevector post_state;
};

/// One QET round: measure X at site_a (mu), set nu = mu (faithful) or -mu,
/// apply U(nu, theta) with Y at site_b.
QetRoundResult qet_round(const Statevector &state, double theta, bool faithful, Rng &rng, int site_a = 0,
                         int site_b = 1);

/// Exact post-round mixed state: sum over mu of U(nu)P(mu)|psi>, nu = +-mu.
MixedEnsemble build_qet_ensemble(const Statevector &state, double theta, bool faithful = true, int site_a = 0,
                                 int site_b = 1);

/// (rho_1, rho_2): faithful and unfaithful verifier ensembles on the ground state.
std::pair<MixedEnsemble, MixedEnsemble> build_qsd_ensembles(const MinimalModel &model,
                                                            std::optional<double> theta = std::nullopt);

}  // namespace qet
