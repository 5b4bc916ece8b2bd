#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qet/ensemble.hpp"
#include "qet/errors.hpp"
#include "qet/haar.hpp"
#include "qet/hamiltonian.hpp"
#include "qet/measurement.hpp"
#include "qet/pauli.hpp"
#include "qet/rng.hpp"
#include "qet/statevector.hpp"

using namespace qet;

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752;

Statevector plus_state() { return Statevector(Amplitudes{kInvSqrt2, kInvSqrt2}); }

Statevector random_state(int n, Rng &rng) { return haar_random_state(n, rng); }

}  // namespace

TEST(Rng, ChildStreamsDependOnlyOnSeedAndIndex) {
    Rng a(42);
    Rng b(42);
    a();
    a();
    EXPECT_EQ(a.child(7)(), b.child(7)());
    EXPECT_NE(b.child(7)(), b.child(8)());
    EXPECT_NE(Rng(1)(), Rng(2)());
}

TEST(Rng, UniformInUnitInterval) {
    Rng r(3);
    double lo = 1.0, hi = 0.0, sum = 0.0;
    for (int i = 0; i < 100000; ++i) {
        const double u = r.uniform();
        lo = std::min(lo, u);
        hi = std::max(hi, u);
        sum += u;
    }
    EXPECT_GE(lo, 0.0);
    EXPECT_LT(hi, 1.0);
    EXPECT_NEAR(sum / 100000, 0.5, 4 * std::sqrt(1.0 / 12 / 100000));
}

TEST(Statevector, BasisStates) {
    const auto one = make_basis_state(1);
    ASSERT_EQ(one.dim(), 2u);
    EXPECT_EQ(one[0], Complex(1.0));
    EXPECT_EQ(one[1], Complex(0.0));
    const auto two = make_basis_state(2);
    ASSERT_EQ(two.dim(), 4u);
    EXPECT_EQ(two[0], Complex(1.0));
    for (std::size_t i = 1; i < 4; ++i) {
        EXPECT_EQ(two[i], Complex(0.0));
    }
    EXPECT_THROW(make_basis_state(0), ArgumentError);
    EXPECT_THROW(make_basis_state(kMaxQubits + 1), CapacityError);
}

TEST(Statevector, RejectsBadAmplitudes) {
    EXPECT_THROW(Statevector(Amplitudes{1.0, 0.0, 0.0}), ArgumentError);
    EXPECT_THROW(Statevector(Amplitudes{1.0, 1.0}), StateError);
}

TEST(Statevector, SiteZeroIsLeftmost) {
    // X on site 0 of |00> gives |10>, basis index 2.
    const auto s = apply_unitary(make_basis_state(2), gates::pauli_x(), {0});
    EXPECT_NEAR(std::abs(s[2]), 1.0, 1e-15);
    EXPECT_DOUBLE_EQ(expectation(s, PauliString::parse("ZI")), -1.0);
    EXPECT_DOUBLE_EQ(expectation(s, PauliString::parse("IZ")), 1.0);
}

TEST(Statevector, ApplyUnitaryExamples) {
    Rng rng(5);
    const auto psi = random_state(3, rng);
    const auto same = apply_unitary(psi, gates::identity(), {1});
    EXPECT_NEAR(state_fidelity(psi, same), 1.0, 1e-12);

    const auto flipped = apply_unitary(make_basis_state(1), gates::pauli_x(), {0});
    EXPECT_NEAR(std::abs(flipped[1]), 1.0, 1e-15);

    const auto hh = apply_unitary(apply_unitary(make_basis_state(1), gates::hadamard(), {0}), gates::hadamard(), {0});
    EXPECT_NEAR(hh[0].real(), 1.0, 1e-12);
    EXPECT_NEAR(std::abs(hh[1]), 0.0, 1e-12);
}

TEST(Statevector, ApplyUnitaryRejectsBadInput) {
    const auto s = make_basis_state(2);
    ComplexMatrix m = ComplexMatrix::Identity(2, 2);
    m(0, 0) = 2.0;
    EXPECT_THROW(apply_unitary(s, m, {0}), ArgumentError);
    EXPECT_THROW(apply_unitary(s, gates::cnot(), {0, 0}), ArgumentError);
    EXPECT_THROW(apply_unitary(s, gates::pauli_x(), {2}), ArgumentError);
    EXPECT_THROW(apply_unitary(s, gates::cnot(), {0}), ArgumentError);
}

TEST(Statevector, CnotUsesFirstTargetAsControl) {
    const auto s = apply_unitary(make_basis_state(2, 2), gates::cnot(), {0, 1});  // |10> -> |11>
    EXPECT_NEAR(std::abs(s[3]), 1.0, 1e-15);
    const auto t = apply_unitary(make_basis_state(2, 2), gates::cnot(), {1, 0});  // control is |0>
    EXPECT_NEAR(std::abs(t[2]), 1.0, 1e-15);
}

TEST(Statevector, NormPreservedUnderRandomUnitaries) {
    Rng rng(11);
    auto psi = random_state(4, rng);
    for (int i = 0; i < 200; ++i) {
        const int a = static_cast<int>(rng() % 4);
        const int b = static_cast<int>((a + 1 + rng() % 3) % 4);
        psi = apply_unitary(psi, haar_random_unitary(4, rng), {a, b});
        ASSERT_NEAR(psi.norm_squared(), 1.0, 1e-12);
    }
}

TEST(Statevector, Fidelity) {
    Rng rng(2);
    const auto psi = random_state(2, rng);
    EXPECT_NEAR(state_fidelity(psi, psi), 1.0, 1e-12);
    EXPECT_NEAR(state_fidelity(make_basis_state(2, 0), make_basis_state(2, 3)), 0.0, 1e-15);
    const auto g = minimal_ground_state(MinimalModel(1, 1));
    EXPECT_NEAR(state_fidelity(g, make_basis_state(2)), (1.0 - kInvSqrt2) / 2.0, 1e-12);
    EXPECT_THROW(state_fidelity(make_basis_state(1), make_basis_state(2)), ArgumentError);
}

TEST(Statevector, TensorPutsFirstFactorOnLeadingSites) {
    const auto s = tensor(make_basis_state(1, 1), make_basis_state(2, 0));
    EXPECT_EQ(s.n_qubits(), 3);
    EXPECT_NEAR(std::abs(s[4]), 1.0, 1e-15);
}

TEST(Pauli, ParseAndMasks) {
    const auto p = PauliString::parse("XI_Y");
    EXPECT_EQ(p.n_qubits(), 4);
    EXPECT_EQ(p.str(), "XIIY");
    EXPECT_EQ(p.support(), (std::vector<int>{0, 3}));
    EXPECT_FALSE(p.is_single_site());
    EXPECT_THROW(PauliString::parse("XQ"), ArgumentError);
}

TEST(Pauli, MatrixMatchesKroneckerProduct) {
    const auto m = PauliString::parse("XY").to_matrix();
    ComplexMatrix expected(4, 4);
    const ComplexMatrix x = gates::pauli_x();
    const ComplexMatrix y = gates::pauli_y();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) expected(2 * i + k, 2 * j + l) = x(i, j) * y(k, l);
    EXPECT_LT((m - expected).norm(), 1e-15);
}

TEST(Pauli, ExpectationExamples) {
    EXPECT_DOUBLE_EQ(expectation(make_basis_state(1), PauliObservable(1, {{1.0, PauliString::parse("Z")}})), 1.0);
    EXPECT_DOUBLE_EQ(expectation(make_basis_state(2), PauliString::parse("XX")), 0.0);
    const MinimalModel m(1, 1);
    EXPECT_NEAR(expectation(minimal_ground_state(m), minimal_terms(m).total()), 0.0, 1e-12);
    EXPECT_THROW(expectation(make_basis_state(1), PauliString::parse("ZZ")), ArgumentError);
}

TEST(Pauli, IdentityExpectationIsOne) {
    Rng rng(9);
    for (int n = 1; n <= 4; ++n) {
        const auto psi = random_state(n, rng);
        EXPECT_NEAR(expectation(psi, PauliString::identity(n)), 1.0, 1e-12);
    }
}

TEST(Pauli, ObservableMatchesDenseMatrix) {
    Rng rng(4);
    const PauliObservable obs(3, {{0.3, PauliString::parse("XYZ")}, {-1.2, PauliString::parse("IZI")}}, 0.5);
    const auto psi = random_state(3, rng);
    Eigen::VectorXcd v(8);
    for (int i = 0; i < 8; ++i) v[i] = psi[i];
    const Complex dense = v.dot(obs.to_matrix() * v);
    EXPECT_NEAR(expectation(psi, obs), dense.real(), 1e-12);
    EXPECT_NEAR(dense.imag(), 0.0, 1e-12);
}

TEST(Measurement, GroundStateXOutcomesAreUnbiased) {
    const auto g = minimal_ground_state(MinimalModel(1.3, 0.7));
    const auto br = branch_measure(g, PauliString::single(2, 0, Pauli::X));
    EXPECT_EQ(br[0].outcome, 1);
    EXPECT_EQ(br[1].outcome, -1);
    EXPECT_NEAR(br[0].probability, 0.5, 1e-12);
    EXPECT_NEAR(br[1].probability, 0.5, 1e-12);
}

TEST(Measurement, EigenstatesAreDeterministic) {
    Rng rng(1);
    const auto rz = projective_measure(make_basis_state(1), PauliString::parse("Z"), rng);
    EXPECT_EQ(rz.outcome, 1);
    EXPECT_NEAR(rz.probability, 1.0, 1e-12);
    const auto rx = projective_measure(plus_state(), PauliString::parse("X"), rng);
    EXPECT_EQ(rx.outcome, 1);
    EXPECT_NEAR(rx.probability, 1.0, 1e-12);

    const auto bz = branch_measure(make_basis_state(1), PauliString::parse("Z"));
    EXPECT_NEAR(bz[0].probability, 1.0, 1e-12);
    EXPECT_EQ(bz[1].probability, 0.0);
    EXPECT_NEAR(bz[1].post_state.norm_squared(), 1.0, 1e-12);
    const auto bx = branch_measure(plus_state(), PauliString::parse("X"));
    EXPECT_NEAR(bx[0].probability, 1.0, 1e-12);
    EXPECT_NEAR(bx[1].probability, 0.0, 1e-12);
}

TEST(Measurement, RequiresSingleSitePauli) {
    Rng rng(1);
    EXPECT_THROW(projective_measure(make_basis_state(2), PauliString::parse("XX"), rng), ArgumentError);
    EXPECT_THROW(branch_measure(make_basis_state(2), PauliString::parse("II")), ArgumentError);
}

TEST(Measurement, BranchWeightsAreCompleteAndPostStatesProject) {
    Rng rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + trial % 4;
        const auto psi = random_state(n, rng);
        const int site = static_cast<int>(rng() % n);
        const Pauli p = std::array{Pauli::X, Pauli::Y, Pauli::Z}[rng() % 3];
        const auto pauli = PauliString::single(n, site, p);
        const auto br = branch_measure(psi, pauli);
        ASSERT_NEAR(br[0].probability + br[1].probability, 1.0, 1e-12);
        ASSERT_NEAR(br[0].probability, 0.5 * (1.0 + expectation(psi, pauli)), 1e-12);
        for (const auto &b : br) {
            ASSERT_NEAR(expectation(b.post_state, pauli), b.outcome, 1e-12);
        }
    }
}

TEST(Measurement, SampledFrequencyMatchesBranchWeight) {
    Rng rng(8);
    const auto psi = random_state(2, rng);
    const auto pauli = PauliString::single(2, 1, Pauli::Y);
    const double p = branch_measure(psi, pauli)[0].probability;
    const int n = 20000;
    int plus = 0;
    for (int i = 0; i < n; ++i) {
        Rng shot = rng.child(static_cast<std::uint64_t>(i));
        plus += projective_measure(psi, pauli, shot).outcome > 0;
    }
    EXPECT_NEAR(static_cast<double>(plus) / n, p, 4.0 * std::sqrt(p * (1 - p) / n));
}

TEST(Ensemble, ValidatesWeightsAndWidths) {
    EXPECT_THROW(MixedEnsemble({{0.6, make_basis_state(1)}, {0.6, make_basis_state(1)}}), ArgumentError);
    EXPECT_THROW(MixedEnsemble({{-0.1, make_basis_state(1)}, {1.1, make_basis_state(1)}}), ArgumentError);
    EXPECT_THROW(MixedEnsemble({{0.5, make_basis_state(1)}, {0.5, make_basis_state(2)}}), ArgumentError);
    EXPECT_THROW(MixedEnsemble({}), ArgumentError);
}

TEST(Ensemble, Expectations) {
    Rng rng(6);
    const auto psi = random_state(2, rng);
    const PauliObservable obs(2, {{0.7, PauliString::parse("XZ")}}, 0.1);
    EXPECT_NEAR(ensemble_expectation(MixedEnsemble::pure(psi), obs), expectation(psi, obs), 1e-15);
    const MixedEnsemble mix({{0.25, make_basis_state(2, 0)}, {0.75, make_basis_state(2, 3)}});
    EXPECT_NEAR(ensemble_expectation(mix, PauliObservable(2, {{1.0, PauliString::parse("ZI")}})), -0.5, 1e-15);
    const double c = 2.5;
    EXPECT_EQ(ensemble_expectation(mix, PauliObservable(2, {{1.0, PauliString::identity(2)}}, c)), 1.0 + c);
}

TEST(Haar, UnitaryAndDeterministic) {
    Rng rng(13);
    for (int i = 0; i < 200; ++i) {
        const int dim = 2 << (i % 4);
        ASSERT_LE(unitarity_residual(haar_random_unitary(dim, rng)), 1e-10);
    }
    Rng a(99), b(99);
    EXPECT_EQ((haar_random_unitary(4, a) - haar_random_unitary(4, b)).norm(), 0.0);
    EXPECT_THROW(haar_random_unitary(1, rng), ArgumentError);
}

TEST(Haar, EntryMagnitudesAverageToInverseDimension) {
    Rng rng(17);
    const int n = 10000;
    double sum = 0.0, sum2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = std::norm(haar_random_unitary(4, rng)(1, 2));
        sum += x;
        sum2 += x * x;
    }
    const double mean = sum / n;
    const double se = std::sqrt((sum2 / n - mean * mean) / n);
    EXPECT_NEAR(mean, 0.25, 3.0 * se);
}

TEST(Haar, PhaseOfFirstAmplitudeIsUniform) {
    // Without the diag(R) phase fix the first column is biased toward a
    // real positive first entry.
    Rng rng(23);
    const int n = 20000;
    double c = 0.0;
    for (int i = 0; i < n; ++i) {
        c += std::cos(std::arg(haar_random_unitary(2, rng)(0, 0)));
    }
    EXPECT_NEAR(c / n, 0.0, 4.0 * std::sqrt(0.5 / n));
}
