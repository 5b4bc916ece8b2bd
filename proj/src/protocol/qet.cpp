#include "qet/protocol/qet.hpp"

#include <cmath>

#include "qet/errors.hpp"
#include "qet/measurement.hpp"

namespace qet {

ConditionalRotation::ConditionalRotation(double theta_, int sign_, PauliString axis_)
    : theta(theta_), sign(sign_), axis(std::move(axis_)) {
    if (sign != 1 && sign != -1) {
        throw ArgumentError("rotation sign must be +1 or -1");
    }
    if (!axis.is_single_site()) {
        throw ArgumentError("rotation axis must be a single-site Pauli");
    }
}

ComplexMatrix ConditionalRotation::matrix() const {
    ComplexMatrix sigma;
    switch (axis[site()]) {
    case Pauli::X:
        sigma = gates::pauli_x();
        break;
    case Pauli::Y:
        sigma = gates::pauli_y();
        break;
    case Pauli::Z:
        sigma = gates::pauli_z();
        break;
    case Pauli::I:
        sigma = gates::identity();
        break;
    }
    return std::cos(theta) * gates::identity() -
           Complex(0.0, static_cast<double>(sign) * std::sin(theta)) * sigma;
}

Statevector ConditionalRotation::apply(const Statevector &state) const {
    if (state.n_qubits() != axis.n_qubits()) {
        throw ArgumentError("rotation width does not match state");
    }
    return apply_unitary(state, matrix(), {site()});
}

namespace {

bool only_labels(const PauliObservable &obs, Pauli allowed) {
    for (const auto &t : obs.terms()) {
        for (Pauli p : t.pauli.labels()) {
            if (p != Pauli::I && p != allowed) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

ReceiverEnergy::ReceiverEnergy(PauliObservable field_, PauliObservable interaction_)
    : field(std::move(field_)), interaction(std::move(interaction_)) {
    if (field.n_qubits() != interaction.n_qubits()) {
        throw ArgumentError("receiver energy groups have different widths");
    }
    if (!only_labels(field, Pauli::Z) || !only_labels(interaction, Pauli::X)) {
        throw ArgumentError("receiver energy must split into Z-type and X-type groups");
    }
}

ReceiverEnergy ReceiverEnergy::minimal(const MinimalModel &model) {
    auto t = minimal_terms(model);
    return ReceiverEnergy(t.field_b, t.interaction);
}

ReceiverEnergy ReceiverEnergy::from_terms(const std::vector<PauliObservable> &terms) {
    if (terms.empty()) {
        throw ArgumentError("receiver has no local terms");
    }
    const int n = terms.front().n_qubits();
    PauliObservable field(n, {});
    PauliObservable interaction(n, {});
    for (const auto &t : terms) {
        if (only_labels(t, Pauli::Z)) {
            field = field + t;
        } else if (only_labels(t, Pauli::X)) {
            interaction = interaction + t;
        } else {
            throw ArgumentError("receiver term is neither Z-type nor X-type");
        }
    }
    return ReceiverEnergy(std::move(field), std::move(interaction));
}

QetSetup minimal_setup(const MinimalModel &model, std::optional<Statevector> prover_state,
                       std::optional<double> theta) {
    Statevector state = prover_state ? *prover_state : minimal_ground_state(model);
    if (state.n_qubits() != 2) {
        throw ArgumentError("minimal-model prover state must have two qubits");
    }
    return QetSetup{std::move(state), 0, 1, theta ? *theta : minimal_theta(model).theta,
                    ReceiverEnergy::minimal(model)};
}

QetSetup chain_setup(const GeneralChainModel &model, int site_a, int site_b) {
    const int n = model.n_sites();
    if (site_a < 0 || site_a >= n || site_b < 0 || site_b >= n || site_a == site_b) {
        throw ArgumentError("invalid supplier/receiver sites for chain");
    }
    auto ground = exact_ground_state(model);
    auto terms = normalize_constants(chain_terms(model), ground.state);
    const auto theta = general_theta(terms, PauliString::single(n, site_a, Pauli::X),
                                     PauliString::single(n, site_b, Pauli::Y), ground.state);
    return QetSetup{ground.state, site_a, site_b, theta.theta,
                    ReceiverEnergy::from_terms(terms_touching(terms, site_b))};
}

QetRoundResult qet_round(const Statevector &state, double theta, bool faithful, Rng &rng, int site_a, int site_b) {
    const int n = state.n_qubits();
    auto rec = projective_measure(state, PauliString::single(n, site_a, Pauli::X), rng);
    const int nu = faithful ? rec.outcome : -rec.outcome;
    ConditionalRotation rot(theta, nu, PauliString::single(n, site_b, Pauli::Y));
    return QetRoundResult{rec.outcome, nu, rot.apply(rec.post_state)};
}

MixedEnsemble build_qet_ensemble(const Statevector &state, double theta, bool faithful, int site_a, int site_b) {
    const int n = state.n_qubits();
    auto branches = branch_measure(state, PauliString::single(n, site_a, Pauli::X));
    std::vector<EnsembleBranch> out;
    for (auto &b : branches) {
        const int nu = faithful ? b.outcome : -b.outcome;
        ConditionalRotation rot(theta, nu, PauliString::single(n, site_b, Pauli::Y));
        out.push_back(EnsembleBranch{b.probability, rot.apply(b.post_state)});
    }
    return MixedEnsemble(std::move(out));
}

std::pair<MixedEnsemble, MixedEnsemble> build_qsd_ensembles(const MinimalModel &model, std::optional<double> theta) {
    const double t = theta ? *theta : minimal_theta(model).theta;
    const auto g = minimal_ground_state(model);
    return {build_qet_ensemble(g, t, true), build_qet_ensemble(g, t, false)};
}

}  // namespace qet
