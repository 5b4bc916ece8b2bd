#pragma once

#include "qet/protocol/channel.hpp"
#include "qet/protocol/register.hpp"

namespace qet {

struct TeleportResult {
    int z_bit;  ///< outcome on the source qubit (drives the Z correction)
    int x_bit;  ///< outcome on the sender's Bell half (drives the X correction)
};

/// Quantum state teleportation of `source` onto `target`.
///
/// `sender_half` and `target` must start in |00> and be held by the sender,
/// who entangles them into a Bell pair and ships `target` to the receiver.
/// The sender then performs CNOT(source -> sender_half), H(source), measures
/// both in Z, and sends the two bits over `channel`; the receiver applies
/// X^x_bit then Z^z_bit. Afterwards `target` holds the source qubit's state and
/// `source`, `sender_half` sit in computational basis states.
TeleportResult qst_teleport(SharedRegister &reg, PartyId sender, PartyId receiver, int source, int sender_half,
                            int target, ClassicalChannel &channel, Rng &rng);

}  // namespace qet
