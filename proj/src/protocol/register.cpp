#include "qet/protocol/register.hpp"

#include "qet/errors.hpp"
#include "qet/measurement.hpp"

namespace qet {

SharedRegister::SharedRegister(Statevector initial, std::vector<PartyId> owners)
    : state_(std::move(initial)), owners_(std::move(owners)) {
    if (static_cast<int>(owners_.size()) != state_.n_qubits()) {
        throw ArgumentError("one owner per site required");
    }
}

PartyId SharedRegister::owner(int site) const {
    if (site < 0 || site >= n_qubits()) {
        throw ArgumentError("site out of range");
    }
    return owners_[static_cast<std::size_t>(site)];
}

std::vector<int> SharedRegister::sites_of(PartyId party) const {
    std::vector<int> out;
    for (int s = 0; s < n_qubits(); ++s) {
        if (owners_[static_cast<std::size_t>(s)] == party) {
            out.push_back(s);
        }
    }
    return out;
}

void SharedRegister::check_owned(PartyId actor, std::initializer_list<int> sites, const std::string &label) const {
    for (int s : sites) {
        if (!(owner(s) == actor)) {
            throw LoccViolation(actor.str() + " attempted " + label + " on site " + std::to_string(s) +
                                " owned by " + owner(s).str());
        }
    }
}

void SharedRegister::record(PartyId actor, std::string label, std::initializer_list<int> sites) {
    OperationEvent ev{actor, std::move(label), std::vector<int>(sites), {}};
    for (int s : sites) {
        ev.owners.push_back(owner(s));
    }
    log_.push_back(std::move(ev));
}

void SharedRegister::apply(PartyId actor, const ComplexMatrix &unitary, std::initializer_list<int> sites,
                           std::string label) {
    check_owned(actor, sites, label);
    state_ = apply_unitary(state_, unitary, sites);
    record(actor, std::move(label), sites);
}

int SharedRegister::measure(PartyId actor, int site, Pauli basis, Rng &rng) {
    const std::string label = std::string("measure_") + to_char(basis);
    check_owned(actor, {site}, label);
    auto rec = projective_measure(state_, PauliString::single(n_qubits(), site, basis), rng);
    state_ = std::move(rec.post_state);
    record(actor, label, {site});
    return rec.outcome;
}

void SharedRegister::transfer(PartyId from, int site, PartyId to) {
    check_owned(from, {site}, "transfer");
    record(from, "transfer->" + to.str(), {site});
    owners_[static_cast<std::size_t>(site)] = to;
}

bool locc_respected(const std::vector<OperationEvent> &log) {
    for (const auto &ev : log) {
        for (const auto &o : ev.owners) {
            if (!(o == ev.actor)) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace qet
