#pragma once

#include <vector>

#include "qet/pauli.hpp"

namespace qet {

/// Two-qubit model H = h Z_0 + h Z_1 + 2k X_0 X_1 + constants, h, k > 0.
///
/// Site 0 is the supplier (witness) qubit, site 1 the receiver qubit.
class MinimalModel {
  public:
    MinimalModel(double h, double k);

    double h() const { return h_; }
    double k() const { return k_; }
    /// sqrt(h^2 + k^2)
    double norm() const;

  private:
    double h_;
    double k_;
};

/// Local terms of the minimal model, each shifted to zero ground-state mean.
struct MinimalTerms {
    PauliObservable field_a;      ///< h Z_0 + h^2/s
    PauliObservable field_b;      ///< h Z_1 + h^2/s (receiver field term)
    PauliObservable interaction;  ///< 2k X_0 X_1 + 2k^2/s

    PauliObservable total() const { return field_a + field_b + interaction; }
    /// Energy observed at the receiver: field_b + interaction.
    PauliObservable receiver_energy() const { return field_b + interaction; }
    std::vector<PauliObservable> as_list() const { return {field_a, field_b, interaction}; }
};

/// H = sum_i z_i Z_i + sum_j xx_j X_j X_{j+1} on N >= 2 sites.
struct GeneralChainModel {
    std::vector<double> z_coeffs;
    std::vector<double> xx_coeffs;

    GeneralChainModel(std::vector<double> z, std::vector<double> xx);
    int n_sites() const { return static_cast<int>(z_coeffs.size()); }
};

/// Largest chain accepted by dense diagonalization.
inline constexpr int kMaxChainSites = 12;

/// Rotation angle for the receiver's conditional operation together with
/// xi = <g|sigma_B H sigma_B|g> and eta = <g|sigma_A i[H, sigma_B]|g>.
///
/// cos 2theta = xi/sqrt(xi^2+eta^2), sin 2theta = eta/sqrt(xi^2+eta^2).
/// With U(mu) = cos(theta) I - i mu sin(theta) sigma_B this choice minimizes
/// the receiver energy to (xi - sqrt(xi^2 + eta^2)) / 2.
struct ThetaSolution {
    double theta;  ///< radians in [0, 2pi)
    double xi;
    double eta;

    /// (xi - sqrt(xi^2 + eta^2)) / 2
    double optimal_energy() const;
};

MinimalTerms minimal_terms(const MinimalModel &model);

/// a|00> - b|11> with a = sqrt((1 - h/s)/2), b = sqrt((1 + h/s)/2).
Statevector minimal_ground_state(const MinimalModel &model);

/// Closed-form angle: cos 2theta = (h^2+2k^2)/R, sin 2theta = hk/R.
ThetaSolution minimal_theta(const MinimalModel &model);

/// Angle from exact algebra on an arbitrary model. `terms` are summed into H.
/// Throws DegenerateModelError when eta vanishes (no extractable energy).
ThetaSolution general_theta(const std::vector<PauliObservable> &terms, const PauliString &sigma_a,
                            const PauliString &sigma_b, const Statevector &ground);

struct GroundState {
    Statevector state;
    double energy;
};

/// Dense Hermitian eigensolve of an arbitrary observable. Degenerate ground
/// spaces resolve to the projection of the lowest-index basis state with
/// nonzero overlap; the global phase makes the first nonzero amplitude real
/// and positive.
GroundState exact_ground_state(const PauliObservable &hamiltonian);
GroundState exact_ground_state(const GeneralChainModel &model);

/// Per-site Z terms followed by per-bond XX terms, unshifted.
std::vector<PauliObservable> chain_terms(const GeneralChainModel &model);
PauliObservable chain_hamiltonian(const GeneralChainModel &model);

/// Shifts every term by -<g|O_n|g> so each has zero ground-state mean.
std::vector<PauliObservable> normalize_constants(const std::vector<PauliObservable> &terms,
                                                 const Statevector &ground);

/// Terms that act on `site` (the receiver's local Hamiltonian).
std::vector<PauliObservable> terms_touching(const std::vector<PauliObservable> &terms, int site);

}  // namespace qet
