#pragma once

#include <array>

#include "qet/pauli.hpp"
#include "qet/rng.hpp"

namespace qet {

/// One outcome of a projective Pauli measurement P(mu) = (1 + mu*sigma)/2.
struct MeasurementRecord {
    int outcome;          ///< mu in {-1, +1}
    double probability;   ///< <psi|P(mu)|psi>
    Statevector post_state;
};

/// Samples mu and returns the renormalized post-measurement state.
/// `pauli` must act nontrivially on exactly one site.
MeasurementRecord projective_measure(const Statevector &state, const PauliString &pauli, Rng &rng);

/// Both branches, ordered {+1, -1}. Probabilities sum to 1. A branch with
/// zero probability is kept with weight 0; its post_state is an arbitrary
/// normalized state inside the projector's range.
std::array<MeasurementRecord, 2> branch_measure(const Statevector &state, const PauliString &pauli);

/// Probability of outcome +1 for a single-site Pauli, clamped to [0, 1].
double probability_plus(const Statevector &state, const PauliString &pauli);

}  // namespace qet
