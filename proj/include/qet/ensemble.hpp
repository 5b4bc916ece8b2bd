#pragma once

#include <vector>

#include "qet/pauli.hpp"

namespace qet {

struct EnsembleBranch {
    double weight;
    Statevector state;
};

/// Mixed state as a probability-weighted list of pure branches.
class MixedEnsemble {
  public:
    /// Weights must be non-negative and sum to 1 within 1e-12; all branches
    /// must share one width.
    explicit MixedEnsemble(std::vector<EnsembleBranch> branches);

    static MixedEnsemble pure(Statevector state);

    const std::vector<EnsembleBranch> &branches() const { return branches_; }
    int n_qubits() const { return branches_.front().state.n_qubits(); }
    double total_weight() const;

  private:
    std::vector<EnsembleBranch> branches_;
};

/// sum_b w_b <psi_b|O|psi_b>.
double ensemble_expectation(const MixedEnsemble &ens, const PauliObservable &obs);

}  // namespace qet
