#include "qet/haar.hpp"

#include <cmath>
#include <string>

#include "qet/errors.hpp"

namespace qet {

ComplexMatrix haar_random_unitary(int dim, Rng &rng) {
    if (dim < 2) {
        throw ArgumentError("Haar unitary needs dim >= 2, got " + std::to_string(dim));
    }
    if (dim > (1 << kMaxQubits)) {
        throw CapacityError("Haar unitary dimension too large");
    }
    const double r = 1.0 / std::sqrt(2.0);
    ComplexMatrix g(dim, dim);
    for (int j = 0; j < dim; ++j) {
        for (int i = 0; i < dim; ++i) {
            const double re = rng.normal();
            const double im = rng.normal();
            g(i, j) = Complex(re * r, im * r);
        }
    }
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(dim, dim);
    const ComplexMatrix &packed = qr.matrixQR();
    for (int j = 0; j < dim; ++j) {
        const Complex d = packed(j, j);
        const double mag = std::abs(d);
        const Complex phase = mag > 0.0 ? d / mag : Complex(1.0, 0.0);
        q.col(j) *= phase;
    }
    return q;
}

Statevector haar_random_state(int n_qubits, Rng &rng) {
    detail::check_qubit_count(n_qubits);
    const ComplexMatrix u = haar_random_unitary(1 << n_qubits, rng);
    Amplitudes amps(static_cast<std::size_t>(u.rows()));
    for (Eigen::Index i = 0; i < u.rows(); ++i) {
        amps[static_cast<std::size_t>(i)] = u(i, 0);
    }
    return Statevector(std::move(amps));
}

}  // namespace qet
