#include "qet/protocol/teleport.hpp"

#include "qet/errors.hpp"
#include "qet/measurement.hpp"

namespace qet {

TeleportResult qst_teleport(SharedRegister &reg, PartyId sender, PartyId receiver, int source, int sender_half,
                            int target, ClassicalChannel &channel, Rng &rng) {
    if (source == sender_half || source == target || sender_half == target) {
        throw ArgumentError("teleportation sites must be distinct");
    }
    if (!(channel.from() == sender) || !(channel.to() == receiver)) {
        throw ArgumentError("channel does not connect sender to receiver");
    }
    const int n = reg.n_qubits();
    for (int s : {sender_half, target}) {
        if (probability_plus(reg.state(), PauliString::single(n, s, Pauli::Z)) < 1.0 - 1e-12) {
            throw StateError("Bell pair site " + std::to_string(s) + " is not prepared in |0>");
        }
    }

    reg.apply(sender, gates::hadamard(), {sender_half}, "H");
    reg.apply(sender, gates::cnot(), {sender_half, target}, "CNOT");
    reg.transfer(sender, target, receiver);

    reg.apply(sender, gates::cnot(), {source, sender_half}, "CNOT");
    reg.apply(sender, gates::hadamard(), {source}, "H");
    const int z_bit = reg.measure(sender, source, Pauli::Z, rng) < 0 ? 1 : 0;
    const int x_bit = reg.measure(sender, sender_half, Pauli::Z, rng) < 0 ? 1 : 0;
    channel.send(sender, TeleportCorrections{z_bit, x_bit});

    const auto bits = channel.receive_as<TeleportCorrections>(receiver);
    if (bits.x_bit) {
        reg.apply(receiver, gates::pauli_x(), {target}, "X");
    }
    if (bits.z_bit) {
        reg.apply(receiver, gates::pauli_z(), {target}, "Z");
    }
    return TeleportResult{z_bit, x_bit};
}

}  // namespace qet
