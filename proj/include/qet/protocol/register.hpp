#pragma once

#include <string>
#include <vector>

#include "qet/pauli.hpp"
#include "qet/protocol/channel.hpp"
#include "qet/rng.hpp"

namespace qet {

/// One logged operation on the shared register.
struct OperationEvent {
    PartyId actor;
    std::string label;
    std::vector<int> sites;
    /// Owners of `sites` at the time of the operation.
    std::vector<PartyId> owners;
};

/// Joint quantum state of all parties with per-site ownership.
///
/// Every gate and measurement names its actor and is rejected with
/// LoccViolation unless the actor owns all touched sites. Ownership moves
/// only through transfer(), which models shipping a physical qubit.
class SharedRegister {
  public:
    SharedRegister(Statevector initial, std::vector<PartyId> owners);

    const Statevector &state() const { return state_; }
    int n_qubits() const { return state_.n_qubits(); }
    PartyId owner(int site) const;
    std::vector<int> sites_of(PartyId party) const;

    void apply(PartyId actor, const ComplexMatrix &unitary, std::initializer_list<int> sites, std::string label);
    /// Projective measurement of `basis` on one site; returns +1 or -1.
    int measure(PartyId actor, int site, Pauli basis, Rng &rng);
    void transfer(PartyId from, int site, PartyId to);

    const std::vector<OperationEvent> &log() const { return log_; }

  private:
    void check_owned(PartyId actor, std::initializer_list<int> sites, const std::string &label) const;
    void record(PartyId actor, std::string label, std::initializer_list<int> sites);

    Statevector state_;
    std::vector<PartyId> owners_;
    std::vector<OperationEvent> log_;
};

/// Checks every logged event against the owners recorded with it.
bool locc_respected(const std::vector<OperationEvent> &log);

}  // namespace qet
