#pragma once

#include <cstdint>
#include <deque>
#include <string>
#include <variant>
#include <vector>

namespace qet {

enum class Role { Prover, Verifier };

struct PartyId {
    Role role;
    int index = 0;

    friend bool operator==(const PartyId &, const PartyId &) = default;
    std::string str() const;
};

inline constexpr PartyId kVerifier{Role::Verifier, 0};
constexpr PartyId prover_id(int index = 0) { return PartyId{Role::Prover, index}; }

enum class Basis { Z, X };
enum class Decision { Accept, Reject, Undecided };

const char *to_string(Basis b);
const char *to_string(Decision d);

/// A single measurement outcome mu.
struct OutcomeBit {
    int mu;
};
/// All outcomes of one lockstep round, one per prover.
struct OutcomeBroadcast {
    std::vector<int> mus;
};
/// The two classical bits that complete a state teleportation.
struct TeleportCorrections {
    int z_bit;
    int x_bit;
};
/// The basis in which the receiver qubit is to be measured.
struct BasisAnnouncement {
    Basis basis;
};
struct Verdict {
    Decision decision;
};

/// Classical payloads only; the type admits no amplitudes.
using ClassicalMessage = std::variant<OutcomeBit, OutcomeBroadcast, TeleportCorrections, BasisAnnouncement, Verdict>;

/// Number of classical bits a payload carries.
int payload_bits(const ClassicalMessage &msg);

/// One-directional in-process queue between two parties.
class ClassicalChannel {
  public:
    ClassicalChannel(PartyId from, PartyId to) : from_(from), to_(to) {}

    PartyId from() const { return from_; }
    PartyId to() const { return to_; }

    /// Throws LoccViolation unless `sender` is the channel's source.
    void send(PartyId sender, ClassicalMessage msg);
    /// Pops the next message; throws LoccViolation for the wrong receiver
    /// and StateError when empty.
    ClassicalMessage receive(PartyId receiver);

    template <typename T>
    T receive_as(PartyId receiver) {
        auto msg = receive(receiver);
        if (auto *p = std::get_if<T>(&msg)) {
            return *p;
        }
        throw_unexpected();
    }

    bool empty() const { return queue_.empty(); }
    std::int64_t messages_sent() const { return messages_; }
    std::int64_t bits_sent() const { return bits_; }

  private:
    [[noreturn]] static void throw_unexpected();

    PartyId from_;
    PartyId to_;
    std::deque<ClassicalMessage> queue_;
    std::int64_t messages_ = 0;
    std::int64_t bits_ = 0;
};

}  // namespace qet
