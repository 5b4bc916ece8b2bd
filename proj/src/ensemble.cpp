#include "qet/ensemble.hpp"

#include <cmath>

#include "qet/errors.hpp"

namespace qet {

MixedEnsemble::MixedEnsemble(std::vector<EnsembleBranch> branches) : branches_(std::move(branches)) {
    if (branches_.empty()) {
        throw ArgumentError("ensemble needs at least one branch");
    }
    const int n = branches_.front().state.n_qubits();
    double total = 0.0;
    for (const auto &b : branches_) {
        if (b.state.n_qubits() != n) {
            throw ArgumentError("ensemble branches have different widths");
        }
        if (!(b.weight >= 0.0)) {
            throw ArgumentError("negative ensemble weight");
        }
        total += b.weight;
    }
    if (std::abs(total - 1.0) > kExactTol) {
        throw ArgumentError("ensemble weights do not sum to 1");
    }
}

MixedEnsemble MixedEnsemble::pure(Statevector state) {
    return MixedEnsemble({EnsembleBranch{1.0, std::move(state)}});
}

double MixedEnsemble::total_weight() const {
    double total = 0.0;
    for (const auto &b : branches_) {
        total += b.weight;
    }
    return total;
}

double ensemble_expectation(const MixedEnsemble &ens, const PauliObservable &obs) {
    if (ens.n_qubits() != obs.n_qubits()) {
        throw ArgumentError("observable width does not match ensemble");
    }
    double acc = 0.0;
    for (const auto &b : ens.branches()) {
        if (b.weight == 0.0) {
            continue;
        }
        acc += b.weight * expectation(b.state, obs);
    }
    return acc;
}

}  // namespace qet
