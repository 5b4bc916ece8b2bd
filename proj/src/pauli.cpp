#include "qet/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "qet/errors.hpp"

namespace qet {

char to_char(Pauli p) {
    switch (p) {
    case Pauli::I:
        return 'I';
    case Pauli::X:
        return 'X';
    case Pauli::Y:
        return 'Y';
    case Pauli::Z:
        return 'Z';
    }
    return '?';
}

PauliString::PauliString(std::vector<Pauli> labels) : labels_(std::move(labels)) {
    detail::check_qubit_count(n_qubits());
    const int n = n_qubits();
    for (int q = 0; q < n; ++q) {
        const std::size_t bit = std::size_t{1} << (n - 1 - q);
        switch (labels_[static_cast<std::size_t>(q)]) {
        case Pauli::I:
            break;
        case Pauli::X:
            x_mask_ |= bit;
            break;
        case Pauli::Y:
            x_mask_ |= bit;
            z_mask_ |= bit;
            ++y_count_;
            break;
        case Pauli::Z:
            z_mask_ |= bit;
            break;
        }
    }
}

PauliString PauliString::parse(std::string_view text) {
    std::vector<Pauli> labels;
    labels.reserve(text.size());
    for (char c : text) {
        switch (c) {
        case 'I':
        case '_':
            labels.push_back(Pauli::I);
            break;
        case 'X':
            labels.push_back(Pauli::X);
            break;
        case 'Y':
            labels.push_back(Pauli::Y);
            break;
        case 'Z':
            labels.push_back(Pauli::Z);
            break;
        default:
            throw ArgumentError(std::string("invalid Pauli label '") + c + "'");
        }
    }
    return PauliString(std::move(labels));
}

PauliString PauliString::identity(int n_qubits) {
    detail::check_qubit_count(n_qubits);
    return PauliString(std::vector<Pauli>(static_cast<std::size_t>(n_qubits), Pauli::I));
}

PauliString PauliString::single(int n_qubits, int site, Pauli p) {
    return on_sites(n_qubits, {site}, p);
}

PauliString PauliString::on_sites(int n_qubits, std::initializer_list<int> sites, Pauli p) {
    detail::check_qubit_count(n_qubits);
    detail::check_targets(n_qubits, std::span<const int>(sites.begin(), sites.size()));
    std::vector<Pauli> labels(static_cast<std::size_t>(n_qubits), Pauli::I);
    for (int s : sites) {
        labels[static_cast<std::size_t>(s)] = p;
    }
    return PauliString(std::move(labels));
}

std::vector<int> PauliString::support() const {
    std::vector<int> out;
    for (int q = 0; q < n_qubits(); ++q) {
        if (labels_[static_cast<std::size_t>(q)] != Pauli::I) {
            out.push_back(q);
        }
    }
    return out;
}

std::string PauliString::str() const {
    std::string s;
    for (Pauli p : labels_) {
        s.push_back(to_char(p));
    }
    return s;
}

Complex PauliString::phase(std::size_t index) const {
    // Y|b> = i(-1)^b |1-b>, Z|b> = (-1)^b |b>.
    static constexpr Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    Complex ph = kIPow[y_count_ % 4];
    if (std::popcount(index & z_mask_) & 1) {
        ph = -ph;
    }
    return ph;
}

ComplexMatrix PauliString::to_matrix() const {
    const std::size_t dim = std::size_t{1} << n_qubits();
    ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t i = 0; i < dim; ++i) {
        m(static_cast<Eigen::Index>(i ^ x_mask_), static_cast<Eigen::Index>(i)) = phase(i);
    }
    return m;
}

PauliObservable::PauliObservable(int n_qubits, std::vector<PauliTerm> terms, double constant)
    : n_qubits_(n_qubits), terms_(std::move(terms)), constant_(constant) {
    detail::check_qubit_count(n_qubits_);
    for (const auto &t : terms_) {
        if (t.pauli.n_qubits() != n_qubits_) {
            throw ArgumentError("Pauli term width does not match observable width");
        }
        if (!std::isfinite(t.coefficient)) {
            throw ArgumentError("non-finite Pauli coefficient");
        }
    }
    if (!std::isfinite(constant_)) {
        throw ArgumentError("non-finite constant");
    }
}

PauliObservable PauliObservable::shifted(double delta) const {
    return PauliObservable(n_qubits_, terms_, constant_ + delta);
}

PauliObservable PauliObservable::scaled(double factor) const {
    auto terms = terms_;
    for (auto &t : terms) {
        t.coefficient *= factor;
    }
    return PauliObservable(n_qubits_, std::move(terms), constant_ * factor);
}

std::vector<int> PauliObservable::support() const {
    std::vector<int> out;
    for (const auto &t : terms_) {
        for (int s : t.pauli.support()) {
            out.push_back(s);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool PauliObservable::acts_on(int site) const {
    const auto s = support();
    return std::binary_search(s.begin(), s.end(), site);
}

Amplitudes PauliObservable::apply(const Amplitudes &psi) const {
    if (psi.size() != (std::size_t{1} << n_qubits_)) {
        throw ArgumentError("dimension mismatch applying observable");
    }
    Amplitudes out(psi.size());
    for (std::size_t i = 0; i < psi.size(); ++i) {
        out[i] = constant_ * psi[i];
    }
    for (const auto &t : terms_) {
        const std::size_t xm = t.pauli.x_mask();
        for (std::size_t i = 0; i < psi.size(); ++i) {
            out[i ^ xm] += t.coefficient * t.pauli.phase(i) * psi[i];
        }
    }
    return out;
}

ComplexMatrix PauliObservable::to_matrix() const {
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n_qubits_);
    ComplexMatrix m = constant_ * ComplexMatrix::Identity(dim, dim);
    for (const auto &t : terms_) {
        m += t.coefficient * t.pauli.to_matrix();
    }
    return m;
}

PauliObservable operator+(const PauliObservable &a, const PauliObservable &b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw ArgumentError("cannot add observables of different widths");
    }
    auto terms = a.terms();
    terms.insert(terms.end(), b.terms().begin(), b.terms().end());
    return PauliObservable(a.n_qubits(), std::move(terms), a.constant() + b.constant());
}

PauliObservable sum(const std::vector<PauliObservable> &terms) {
    if (terms.empty()) {
        throw ArgumentError("cannot sum an empty observable list");
    }
    PauliObservable acc = terms.front();
    for (std::size_t i = 1; i < terms.size(); ++i) {
        acc = acc + terms[i];
    }
    return acc;
}

Statevector apply_pauli(const Statevector &state, const PauliString &pauli) {
    if (pauli.n_qubits() != state.n_qubits()) {
        throw ArgumentError("Pauli width does not match state");
    }
    const auto &in = state.amplitudes();
    Amplitudes out(in.size());
    for (std::size_t i = 0; i < in.size(); ++i) {
        out[i ^ pauli.x_mask()] = pauli.phase(i) * in[i];
    }
    return Statevector(std::move(out));
}

double expectation(const Statevector &state, const PauliString &pauli) {
    if (pauli.n_qubits() != state.n_qubits()) {
        throw ArgumentError("Pauli width does not match state");
    }
    const auto &a = state.amplitudes();
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += std::conj(a[i ^ pauli.x_mask()]) * pauli.phase(i) * a[i];
    }
    return acc.real();
}

double expectation(const Statevector &state, const PauliObservable &obs) {
    if (obs.n_qubits() != state.n_qubits()) {
        throw ArgumentError("observable width does not match state");
    }
    double acc = obs.constant();
    for (const auto &t : obs.terms()) {
        acc += t.coefficient * expectation(state, t.pauli);
    }
    return acc;
}

}  // namespace qet
