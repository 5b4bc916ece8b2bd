#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qet/statevector.hpp"

namespace qet {

enum class Pauli : std::uint8_t { I, X, Y, Z };

char to_char(Pauli p);

/// Tensor product of single-qubit Paulis, one label per site.
class PauliString {
  public:
    explicit PauliString(std::vector<Pauli> labels);

    /// Parses labels such as "XIZY"; '_' is accepted for identity.
    static PauliString parse(std::string_view text);
    static PauliString identity(int n_qubits);
    /// A single non-identity label at `site`.
    static PauliString single(int n_qubits, int site, Pauli p);
    /// Product of identical labels on the given sites.
    static PauliString on_sites(int n_qubits, std::initializer_list<int> sites, Pauli p);

    int n_qubits() const { return static_cast<int>(labels_.size()); }
    Pauli operator[](int site) const { return labels_[static_cast<std::size_t>(site)]; }
    const std::vector<Pauli> &labels() const { return labels_; }

    /// Sites carrying a non-identity label.
    std::vector<int> support() const;
    bool is_identity() const { return x_mask_ == 0 && z_mask_ == 0; }
    /// True when exactly one site carries a non-identity label.
    bool is_single_site() const { return support().size() == 1; }

    std::string str() const;

    /// P|i> = phase(i) |i ^ x_mask()>.
    std::size_t x_mask() const { return x_mask_; }
    std::size_t z_mask() const { return z_mask_; }
    Complex phase(std::size_t index) const;

    /// Dense 2^n x 2^n matrix.
    ComplexMatrix to_matrix() const;

    friend bool operator==(const PauliString &, const PauliString &) = default;

  private:
    std::vector<Pauli> labels_;
    std::size_t x_mask_ = 0;
    std::size_t z_mask_ = 0;
    int y_count_ = 0;
};

struct PauliTerm {
    double coefficient;
    PauliString pauli;
};

/// Hermitian operator sum_j c_j P_j + constant, with real c_j.
class PauliObservable {
  public:
    PauliObservable(int n_qubits, std::vector<PauliTerm> terms, double constant = 0.0);

    int n_qubits() const { return n_qubits_; }
    const std::vector<PauliTerm> &terms() const { return terms_; }
    double constant() const { return constant_; }

    /// Copy with the constant offset moved by `delta`.
    PauliObservable shifted(double delta) const;
    PauliObservable scaled(double factor) const;

    /// Sites touched by any term.
    std::vector<int> support() const;
    bool acts_on(int site) const;

    /// O|psi> without normalization.
    Amplitudes apply(const Amplitudes &psi) const;

    ComplexMatrix to_matrix() const;

    friend PauliObservable operator+(const PauliObservable &a, const PauliObservable &b);

  private:
    int n_qubits_;
    std::vector<PauliTerm> terms_;
    double constant_;
};

/// Sum of a list of observables.
PauliObservable sum(const std::vector<PauliObservable> &terms);

/// P|psi>; a Pauli string is unitary so the result is normalized.
Statevector apply_pauli(const Statevector &state, const PauliString &pauli);

/// <psi|P|psi> (real for Hermitian P).
double expectation(const Statevector &state, const PauliString &pauli);

/// <psi|O|psi> including the constant shift.
double expectation(const Statevector &state, const PauliObservable &obs);

}  // namespace qet
