#pragma once

#include "qet/rng.hpp"
#include "qet/statevector.hpp"

namespace qet {

/// Haar-distributed unitary of size dim x dim: QR of a complex Ginibre matrix
/// with the phases of diag(R) folded into Q.
ComplexMatrix haar_random_unitary(int dim, Rng &rng);

/// U|0...0> for a Haar unitary on `n_qubits` qubits.
Statevector haar_random_state(int n_qubits, Rng &rng);

}  // namespace qet
