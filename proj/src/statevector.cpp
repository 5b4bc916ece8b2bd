#include "qet/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "qet/errors.hpp"

namespace qet {

namespace detail {

void check_qubit_count(int n_qubits) {
    if (n_qubits < 1) {
        throw ArgumentError("n_qubits must be at least 1, got " + std::to_string(n_qubits));
    }
    if (n_qubits > kMaxQubits) {
        throw CapacityError("n_qubits " + std::to_string(n_qubits) + " exceeds dense limit " +
                            std::to_string(kMaxQubits));
    }
}

void check_targets(int n_qubits, std::span<const int> targets) {
    if (targets.empty()) {
        throw ArgumentError("no target qubits");
    }
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (targets[i] < 0 || targets[i] >= n_qubits) {
            throw ArgumentError("target qubit " + std::to_string(targets[i]) + " out of range");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (targets[i] == targets[j]) {
                throw ArgumentError("duplicate target qubit " + std::to_string(targets[i]));
            }
        }
    }
}

}  // namespace detail

Statevector::Statevector(Amplitudes amplitudes) : n_qubits_(0), amps_(std::move(amplitudes)) {
    const std::size_t n = amps_.size();
    if (n < 2 || !std::has_single_bit(n)) {
        throw ArgumentError("amplitude count must be a power of two >= 2, got " + std::to_string(n));
    }
    n_qubits_ = std::countr_zero(n);
    detail::check_qubit_count(n_qubits_);
    const double nrm = norm_squared();
    if (!std::isfinite(nrm) || std::abs(nrm - 1.0) > 1e-10) {
        throw StateError("state is not normalized: |psi|^2 = " + std::to_string(nrm));
    }
    const double scale = 1.0 / std::sqrt(nrm);
    for (auto &a : amps_) {
        a *= scale;
    }
}

double Statevector::norm_squared() const {
    double acc = 0.0;
    for (const auto &a : amps_) {
        acc += std::norm(a);
    }
    return acc;
}

Statevector make_basis_state(int n_qubits) { return make_basis_state(n_qubits, 0); }

Statevector make_basis_state(int n_qubits, std::size_t index) {
    detail::check_qubit_count(n_qubits);
    const std::size_t dim = std::size_t{1} << n_qubits;
    if (index >= dim) {
        throw ArgumentError("basis index out of range");
    }
    Amplitudes amps(dim, Complex{0.0, 0.0});
    amps[index] = 1.0;
    return Statevector(std::move(amps));
}

double unitarity_residual(const ComplexMatrix &matrix) {
    const ComplexMatrix d = matrix.adjoint() * matrix - ComplexMatrix::Identity(matrix.rows(), matrix.cols());
    return d.cwiseAbs().maxCoeff();
}

Statevector apply_unitary(const Statevector &state, const ComplexMatrix &matrix,
                          std::span<const int> targets) {
    const int n = state.n_qubits();
    detail::check_targets(n, targets);
    const std::size_t m = targets.size();
    const std::size_t sub = std::size_t{1} << m;
    if (matrix.rows() != static_cast<Eigen::Index>(sub) || matrix.cols() != static_cast<Eigen::Index>(sub)) {
        throw ArgumentError("matrix dimension does not match 2^|targets|");
    }
    if (unitarity_residual(matrix) > kUnitaryTol) {
        throw ArgumentError("matrix is not unitary within tolerance");
    }

    std::vector<std::size_t> masks(m);
    std::size_t all = 0;
    for (std::size_t t = 0; t < m; ++t) {
        masks[t] = state.site_mask(targets[t]);
        all |= masks[t];
    }
    // Offsets of each sub-index; sub-index bit (m-1-t) belongs to targets[t].
    std::vector<std::size_t> offsets(sub, 0);
    for (std::size_t s = 0; s < sub; ++s) {
        for (std::size_t t = 0; t < m; ++t) {
            if (s & (std::size_t{1} << (m - 1 - t))) {
                offsets[s] |= masks[t];
            }
        }
    }

    const Amplitudes &in = state.amplitudes();
    Amplitudes out(in.size());
    std::vector<Complex> local(sub);
    for (std::size_t base = 0; base < in.size(); ++base) {
        if (base & all) {
            continue;
        }
        for (std::size_t s = 0; s < sub; ++s) {
            local[s] = in[base | offsets[s]];
        }
        for (std::size_t r = 0; r < sub; ++r) {
            Complex acc{0.0, 0.0};
            for (std::size_t c = 0; c < sub; ++c) {
                acc += matrix(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) * local[c];
            }
            out[base | offsets[r]] = acc;
        }
    }
    return Statevector(std::move(out));
}

Statevector apply_unitary(const Statevector &state, const ComplexMatrix &matrix,
                          std::initializer_list<int> targets) {
    return apply_unitary(state, matrix, std::span<const int>(targets.begin(), targets.size()));
}

Complex inner_product(const Statevector &a, const Statevector &b) {
    if (a.dim() != b.dim()) {
        throw ArgumentError("dimension mismatch in inner product");
    }
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

double state_fidelity(const Statevector &a, const Statevector &b) {
    return std::clamp(std::norm(inner_product(a, b)), 0.0, 1.0);
}

Statevector tensor(const Statevector &a, const Statevector &b) {
    detail::check_qubit_count(a.n_qubits() + b.n_qubits());
    Amplitudes out(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < b.dim(); ++j) {
            out[i * b.dim() + j] = a[i] * b[j];
        }
    }
    return Statevector(std::move(out));
}

namespace gates {

ComplexMatrix identity() { return ComplexMatrix::Identity(2, 2); }

ComplexMatrix pauli_x() {
    ComplexMatrix m(2, 2);
    m << 0.0, 1.0, 1.0, 0.0;
    return m;
}

ComplexMatrix pauli_y() {
    ComplexMatrix m(2, 2);
    m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
    return m;
}

ComplexMatrix pauli_z() {
    ComplexMatrix m(2, 2);
    m << 1.0, 0.0, 0.0, -1.0;
    return m;
}

ComplexMatrix hadamard() {
    const double r = 1.0 / std::sqrt(2.0);
    ComplexMatrix m(2, 2);
    m << r, r, r, -r;
    return m;
}

ComplexMatrix cnot() {
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    m(0, 0) = 1.0;
    m(1, 1) = 1.0;
    m(2, 3) = 1.0;
    m(3, 2) = 1.0;
    return m;
}

}  // namespace gates

}  // namespace qet
