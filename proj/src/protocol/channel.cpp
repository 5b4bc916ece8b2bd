#include "qet/protocol/channel.hpp"

#include "qet/errors.hpp"

namespace qet {

std::string PartyId::str() const {
    if (role == Role::Verifier) {
        return "verifier";
    }
    return "prover" + std::to_string(index);
}

const char *to_string(Basis b) { return b == Basis::Z ? "Z" : "X"; }

const char *to_string(Decision d) {
    switch (d) {
    case Decision::Accept:
        return "Accept";
    case Decision::Reject:
        return "Reject";
    case Decision::Undecided:
        return "Undecided";
    }
    return "?";
}

int payload_bits(const ClassicalMessage &msg) {
    struct Visitor {
        int operator()(const OutcomeBit &) const { return 1; }
        int operator()(const OutcomeBroadcast &b) const { return static_cast<int>(b.mus.size()); }
        int operator()(const TeleportCorrections &) const { return 2; }
        int operator()(const BasisAnnouncement &) const { return 1; }
        int operator()(const Verdict &) const { return 2; }
    };
    return std::visit(Visitor{}, msg);
}

void ClassicalChannel::send(PartyId sender, ClassicalMessage msg) {
    if (!(sender == from_)) {
        throw LoccViolation(sender.str() + " cannot send on channel " + from_.str() + " -> " + to_.str());
    }
    bits_ += payload_bits(msg);
    ++messages_;
    queue_.push_back(std::move(msg));
}

ClassicalMessage ClassicalChannel::receive(PartyId receiver) {
    if (!(receiver == to_)) {
        throw LoccViolation(receiver.str() + " cannot receive on channel " + from_.str() + " -> " + to_.str());
    }
    if (queue_.empty()) {
        throw StateError("receive on empty channel " + from_.str() + " -> " + to_.str());
    }
    auto msg = std::move(queue_.front());
    queue_.pop_front();
    return msg;
}

void ClassicalChannel::throw_unexpected() { throw StateError("unexpected message type on channel"); }

}  // namespace qet
