#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace qet {

using Complex = std::complex<double>;
using Amplitudes = std::vector<Complex>;
using ComplexMatrix = Eigen::MatrixXcd;

/// Largest register the dense representation accepts.
inline constexpr int kMaxQubits = 20;

/// Tolerance for exact-algebra checks (norms, probabilities, expectations).
inline constexpr double kExactTol = 1e-12;
/// Tolerance for unitarity of supplied or sampled matrices.
inline constexpr double kUnitaryTol = 1e-10;

/// Pure state of `n` qubits as a dense amplitude vector.
///
/// Qubit ordering: site 0 is the leftmost label in ket notation, so in
/// |q0 q1 ... q(n-1)> site 0 is the most significant bit of the basis index.
/// Instances are immutable; every operation returns a new state.
class Statevector {
  public:
    /// Validates length (a power of two) and normalization (within 1e-10),
    /// then renormalizes exactly.
    explicit Statevector(Amplitudes amplitudes);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amps_.size(); }
    const Amplitudes &amplitudes() const { return amps_; }
    Complex operator[](std::size_t i) const { return amps_[i]; }

    double norm_squared() const;

    /// Bit mask of `site` within a basis index.
    std::size_t site_mask(int site) const { return std::size_t{1} << (n_qubits_ - 1 - site); }

  private:
    int n_qubits_;
    Amplitudes amps_;
};

/// |0...0> on `n_qubits` qubits.
Statevector make_basis_state(int n_qubits);
/// Computational basis state |index>.
Statevector make_basis_state(int n_qubits, std::size_t index);

/// Applies `matrix` to the qubits listed in `targets`; targets[0] is the most
/// significant bit of the matrix index.
Statevector apply_unitary(const Statevector &state, const ComplexMatrix &matrix,
                          std::span<const int> targets);
Statevector apply_unitary(const Statevector &state, const ComplexMatrix &matrix,
                          std::initializer_list<int> targets);

/// |<a|b>|^2.
double state_fidelity(const Statevector &a, const Statevector &b);

/// <a|b>.
Complex inner_product(const Statevector &a, const Statevector &b);

/// Tensor product a (x) b; a occupies the leading sites.
Statevector tensor(const Statevector &a, const Statevector &b);

/// Largest entry of |U^dagger U - I|.
double unitarity_residual(const ComplexMatrix &matrix);

namespace gates {
ComplexMatrix identity();
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
ComplexMatrix hadamard();
/// CNOT with the first target as control.
ComplexMatrix cnot();
}  // namespace gates

namespace detail {
void check_qubit_count(int n_qubits);
void check_targets(int n_qubits, std::span<const int> targets);
}  // namespace detail

}  // namespace qet
