#include "qet/measurement.hpp"

#include <algorithm>
#include <cmath>

#include "qet/errors.hpp"

namespace qet {

namespace {

void check_measurable(const Statevector &state, const PauliString &pauli) {
    if (pauli.n_qubits() != state.n_qubits()) {
        throw ArgumentError("Pauli width does not match state");
    }
    if (!pauli.is_single_site()) {
        throw ArgumentError("projective measurement requires a single-site Pauli, got " + pauli.str());
    }
    if (std::abs(state.norm_squared() - 1.0) > 1e-10) {
        throw StateError("cannot measure an unnormalized state");
    }
}

/// P(mu)|psi>, unnormalized.
Amplitudes project(const Statevector &state, const PauliString &pauli, int mu) {
    const auto &in = state.amplitudes();
    Amplitudes out(in.size());
    for (std::size_t i = 0; i < in.size(); ++i) {
        out[i] = 0.5 * in[i];
    }
    for (std::size_t i = 0; i < in.size(); ++i) {
        out[i ^ pauli.x_mask()] += 0.5 * static_cast<double>(mu) * pauli.phase(i) * in[i];
    }
    return out;
}

double norm2(const Amplitudes &a) {
    double s = 0.0;
    for (const auto &x : a) {
        s += std::norm(x);
    }
    return s;
}

Statevector normalized(Amplitudes a, double n2) {
    const double scale = 1.0 / std::sqrt(n2);
    for (auto &x : a) {
        x *= scale;
    }
    return Statevector(std::move(a));
}

Statevector range_representative(const Statevector &state, const PauliString &pauli, int mu) {
    for (std::size_t i = 0; i < state.dim(); ++i) {
        auto proj = project(make_basis_state(state.n_qubits(), i), pauli, mu);
        const double n2 = norm2(proj);
        if (n2 > 0.25) {
            return normalized(std::move(proj), n2);
        }
    }
    throw StateError("projector has empty range");
}

MeasurementRecord make_branch(const Statevector &state, const PauliString &pauli, int mu, double p) {
    auto proj = project(state, pauli, mu);
    const double n2 = norm2(proj);
    if (n2 <= 1e-28) {
        return {mu, 0.0, range_representative(state, pauli, mu)};
    }
    return {mu, p, normalized(std::move(proj), n2)};
}

}  // namespace

double probability_plus(const Statevector &state, const PauliString &pauli) {
    return std::clamp(0.5 * (1.0 + expectation(state, pauli)), 0.0, 1.0);
}

MeasurementRecord projective_measure(const Statevector &state, const PauliString &pauli, Rng &rng) {
    check_measurable(state, pauli);
    const double p_plus = probability_plus(state, pauli);
    const double p_minus = 1.0 - p_plus;
    if (p_plus <= 0.0 && p_minus <= 0.0) {
        throw StateError("both outcome probabilities vanish");
    }
    const int mu = rng.uniform() < p_plus ? +1 : -1;
    return make_branch(state, pauli, mu, mu > 0 ? p_plus : p_minus);
}

std::array<MeasurementRecord, 2> branch_measure(const Statevector &state, const PauliString &pauli) {
    check_measurable(state, pauli);
    const double p_plus = probability_plus(state, pauli);
    return {make_branch(state, pauli, +1, p_plus), make_branch(state, pauli, -1, 1.0 - p_plus)};
}

}  // namespace qet
