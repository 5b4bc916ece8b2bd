#include "qet/hamiltonian.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qet/errors.hpp"

namespace qet {

MinimalModel::MinimalModel(double h, double k) : h_(h), k_(k) {
    if (!(h > 0.0) || !(k > 0.0) || !std::isfinite(h) || !std::isfinite(k)) {
        throw ArgumentError("minimal model requires finite h > 0 and k > 0");
    }
}

double MinimalModel::norm() const { return std::hypot(h_, k_); }

GeneralChainModel::GeneralChainModel(std::vector<double> z, std::vector<double> xx)
    : z_coeffs(std::move(z)), xx_coeffs(std::move(xx)) {
    if (z_coeffs.size() < 2) {
        throw ArgumentError("chain model needs at least two sites");
    }
    if (xx_coeffs.size() + 1 != z_coeffs.size()) {
        throw ArgumentError("chain model needs N-1 bond coefficients for N sites");
    }
}

double ThetaSolution::optimal_energy() const { return 0.5 * (xi - std::hypot(xi, eta)); }

MinimalTerms minimal_terms(const MinimalModel &model) {
    const double h = model.h();
    const double k = model.k();
    const double s = model.norm();
    auto z0 = PauliString::single(2, 0, Pauli::Z);
    auto z1 = PauliString::single(2, 1, Pauli::Z);
    auto xx = PauliString::parse("XX");
    return MinimalTerms{
        PauliObservable(2, {{h, z0}}, h * h / s),
        PauliObservable(2, {{h, z1}}, h * h / s),
        PauliObservable(2, {{2.0 * k, xx}}, 2.0 * k * k / s),
    };
}

Statevector minimal_ground_state(const MinimalModel &model) {
    const double ratio = model.h() / model.norm();
    const double a = std::sqrt(0.5 * (1.0 - ratio));
    const double b = std::sqrt(0.5 * (1.0 + ratio));
    return Statevector(Amplitudes{a, 0.0, 0.0, -b});
}

namespace {

double wrap_angle(double theta) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    theta = std::fmod(theta, two_pi);
    if (theta < 0.0) {
        theta += two_pi;
    }
    return theta;
}

}  // namespace

ThetaSolution minimal_theta(const MinimalModel &model) {
    const double h = model.h();
    const double k = model.k();
    const double s = model.norm();
    const double a = h * h + 2.0 * k * k;
    return ThetaSolution{wrap_angle(0.5 * std::atan2(h * k, a)), 2.0 * a / s, 2.0 * h * k / s};
}

ThetaSolution general_theta(const std::vector<PauliObservable> &terms, const PauliString &sigma_a,
                            const PauliString &sigma_b, const Statevector &ground) {
    if (!sigma_a.is_single_site() || !sigma_b.is_single_site()) {
        throw ArgumentError("sigma_A and sigma_B must be single-site Pauli strings");
    }
    if (sigma_a.support() == sigma_b.support()) {
        throw ArgumentError("sigma_A and sigma_B must act on distinct sites");
    }
    if (std::abs(ground.norm_squared() - 1.0) > 1e-10) {
        throw StateError("ground state is not normalized");
    }
    const PauliObservable h = sum(terms);
    if (h.n_qubits() != ground.n_qubits() || sigma_a.n_qubits() != ground.n_qubits() ||
        sigma_b.n_qubits() != ground.n_qubits()) {
        throw ArgumentError("operator widths do not match the ground state");
    }

    const Statevector sb_g = apply_pauli(ground, sigma_b);
    const double xi = expectation(sb_g, h);

    // i[H, sigma_B]|g> = i (H sigma_B - sigma_B H)|g>
    const Amplitudes h_sb_g = h.apply(sb_g.amplitudes());
    Amplitudes h_g = h.apply(ground.amplitudes());
    Amplitudes sb_h_g(h_g.size());
    for (std::size_t i = 0; i < h_g.size(); ++i) {
        sb_h_g[i ^ sigma_b.x_mask()] = sigma_b.phase(i) * h_g[i];
    }
    const Statevector sa_g = apply_pauli(ground, sigma_a);
    Complex eta_c{0.0, 0.0};
    for (std::size_t i = 0; i < h_g.size(); ++i) {
        eta_c += std::conj(sa_g[i]) * Complex(0.0, 1.0) * (h_sb_g[i] - sb_h_g[i]);
    }
    const double eta = eta_c.real();

    if (std::abs(eta) <= 1e-12 * std::max(1.0, std::abs(xi))) {
        throw DegenerateModelError("eta vanishes: no negative energy can be extracted");
    }
    return ThetaSolution{wrap_angle(0.5 * std::atan2(eta, xi)), xi, eta};
}

std::vector<PauliObservable> chain_terms(const GeneralChainModel &model) {
    const int n = model.n_sites();
    if (n > kMaxChainSites) {
        throw CapacityError("chain of " + std::to_string(n) + " sites exceeds limit of " +
                            std::to_string(kMaxChainSites));
    }
    std::vector<PauliObservable> out;
    for (int i = 0; i < n; ++i) {
        out.emplace_back(n, std::vector<PauliTerm>{{model.z_coeffs[static_cast<std::size_t>(i)],
                                                    PauliString::single(n, i, Pauli::Z)}});
    }
    for (int j = 0; j + 1 < n; ++j) {
        out.emplace_back(n, std::vector<PauliTerm>{{model.xx_coeffs[static_cast<std::size_t>(j)],
                                                    PauliString::on_sites(n, {j, j + 1}, Pauli::X)}});
    }
    return out;
}

PauliObservable chain_hamiltonian(const GeneralChainModel &model) { return sum(chain_terms(model)); }

GroundState exact_ground_state(const PauliObservable &hamiltonian) {
    if (hamiltonian.n_qubits() > kMaxChainSites) {
        throw CapacityError("dense diagonalization limited to " + std::to_string(kMaxChainSites) + " qubits");
    }
    const ComplexMatrix m = hamiltonian.to_matrix();
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
    if (solver.info() != Eigen::Success) {
        throw StateError("eigensolver failed to converge");
    }
    const auto &evals = solver.eigenvalues();
    const auto &evecs = solver.eigenvectors();
    const double e0 = evals(0);
    const double tol = 1e-9 * std::max(1.0, std::abs(e0));
    Eigen::Index degeneracy = 1;
    while (degeneracy < evals.size() && evals(degeneracy) - e0 <= tol) {
        ++degeneracy;
    }

    const Eigen::Index dim = m.rows();
    Eigen::VectorXcd vec;
    if (degeneracy == 1) {
        vec = evecs.col(0);
    } else {
        const ComplexMatrix basis = evecs.leftCols(degeneracy);
        for (Eigen::Index i = 0; i < dim; ++i) {
            Eigen::VectorXcd proj = basis * basis.row(i).adjoint();
            if (proj.norm() > 1e-6) {
                vec = proj;
                break;
            }
        }
    }
    vec.normalize();
    for (Eigen::Index i = 0; i < dim; ++i) {
        const double mag = std::abs(vec(i));
        if (mag > 1e-12) {
            vec *= std::conj(vec(i)) / mag;
            break;
        }
    }
    Amplitudes amps(static_cast<std::size_t>(dim));
    for (Eigen::Index i = 0; i < dim; ++i) {
        amps[static_cast<std::size_t>(i)] = vec(i);
    }
    return GroundState{Statevector(std::move(amps)), e0};
}

GroundState exact_ground_state(const GeneralChainModel &model) {
    if (model.n_sites() > kMaxChainSites) {
        throw CapacityError("chain of " + std::to_string(model.n_sites()) + " sites exceeds limit of " +
                            std::to_string(kMaxChainSites));
    }
    return exact_ground_state(chain_hamiltonian(model));
}

std::vector<PauliObservable> normalize_constants(const std::vector<PauliObservable> &terms,
                                                 const Statevector &ground) {
    std::vector<PauliObservable> out;
    out.reserve(terms.size());
    for (const auto &t : terms) {
        out.push_back(t.shifted(-expectation(ground, t)));
    }
    return out;
}

std::vector<PauliObservable> terms_touching(const std::vector<PauliObservable> &terms, int site) {
    std::vector<PauliObservable> out;
    for (const auto &t : terms) {
        if (t.acts_on(site)) {
            out.push_back(t);
        }
    }
    return out;
}

}  // namespace qet
