// Acceptance gate: prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails. Each criterion also has a wall-time budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "qet/analysis.hpp"
#include "qet/errors.hpp"
#include "qet/haar.hpp"
#include "qet/measurement.hpp"
#include "qet/protocol/backend.hpp"
#include "qet/protocol/qip.hpp"
#include "qet/protocol/qsd.hpp"

using namespace qet;

namespace {

const std::vector<double> kGrid{0.2, 0.5, 1.0, 1.5, 2.0};
const double kOptimalEnergy = (3.0 - std::sqrt(10.0)) / std::sqrt(2.0);

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char *f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

/// Exact mean and single-shot variances of the field and interaction samples
/// for a faithful (nu = mu) or unfaithful (nu = -mu) prover.
struct ExactShot {
    double field_mean, field_var, int_mean, int_var;
};

ExactShot exact_shot(const QetSetup &setup, bool faithful) {
    const BranchSampler s(setup);
    ExactShot out{};
    double f2 = 0.0, i2 = 0.0;
    for (int mu : {1, -1}) {
        const double p = s.probability(mu);
        const int nu = faithful ? mu : -mu;
        const auto [fm, fv] = s.sample_moments(mu, nu, Basis::Z);
        const auto [im, iv] = s.sample_moments(mu, nu, Basis::X);
        out.field_mean += p * fm;
        out.int_mean += p * im;
        f2 += p * (fv + fm * fm);
        i2 += p * (iv + im * im);
    }
    out.field_var = f2 - out.field_mean * out.field_mean;
    out.int_var = i2 - out.int_mean * out.int_mean;
    return out;
}

Outcome table1() {
    struct Row {
        double h, k, h1c, h1i, vc, vi;
    };
    const std::vector<Row> printed{
        {1.0, 0.2, 0.0521, -0.0193, -0.0701, 0.0727},
        {1.0, 0.5, 0.1873, -0.0955, -0.2599, 0.3058},
        {1.0, 1.0, 0.2598, -0.1873, -0.3746, 0.5198},
        {1.5, 1.0, 0.3480, -0.2058, -0.4906, 0.6171},
    };
    double worst = 0.0;
    for (const auto &r : printed) {
        const auto t = conditional_table(MinimalModel(r.h, r.k));
        for (auto [got, want] : {std::pair{t.h1_c, r.h1c}, {t.h1_i, r.h1i}, {t.v_c, r.vc}, {t.v_i, r.vi}}) {
            worst = std::max(worst, std::abs(got - want));
        }
    }
    return {worst <= 5e-4, fmt("16 entries, max |analytic - printed| = %.2e (tol 5e-4)", worst)};
}

Outcome shot_convergence() {
    // (1,1): the four Table 1 quantities from the QSD game (Q1 gives H1^C and
    // V^C, Q2 gives H1^I and V^I) and the QIP energy, 10 seeds at n = 1e4,
    // each within 3 exact standard errors of the closed form.
    const MinimalModel m(1, 1);
    const auto setup = minimal_setup(m);
    const auto tab = conditional_table(m);
    const std::int64_t n = 10000;
    int checks = 0, within = 0;
    double worst_z = 0.0;
    auto check = [&](double est, double want, double var) {
        const double z = std::abs(est - want) / std::sqrt(var / n);
        worst_z = std::max(worst_z, z);
        ++checks;
        within += z <= 3.0;
    };
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        for (auto choice : {VerifierChoice::Q1, VerifierChoice::Q2}) {
            QsdConfig c{m};
            c.choice = choice;
            c.n_shot = n;
            c.record_rounds = false;
            const auto r = run_qsd(c, Rng(seed));
            const auto ex = exact_shot(setup, choice == VerifierChoice::Q1);
            const bool q1 = choice == VerifierChoice::Q1;
            check(r.field_estimate, q1 ? tab.h1_c : tab.h1_i, ex.field_var);
            check(r.interaction_estimate, q1 ? tab.v_c : tab.v_i, ex.int_var);
        }
        QipConfig q{setup};
        q.n_shot = n;
        q.record_rounds = false;
        const auto tr = run_qip(q, Rng(100 + seed));
        const auto ex = exact_shot(setup, true);
        check(tr.estimate.mean_energy(), kOptimalEnergy, ex.field_var + ex.int_var);
    }
    // Spread of the energy estimate across 400 seeds at n = 100 and 1000.
    auto spread = [&](std::int64_t shots) {
        RunningStats s;
        for (std::uint64_t seed = 0; seed < 400; ++seed) {
            QipConfig q{setup};
            q.n_shot = shots;
            q.record_rounds = false;
            s.add(run_qip(q, Rng(5000 + seed)).estimate.mean_energy());
        }
        return std::sqrt(s.variance());
    };
    const double s100 = spread(100), s1000 = spread(1000);
    const bool sigma_ok = s100 > 0.05 && s100 < 0.2 && std::abs(s100 / s1000 - std::sqrt(10.0)) < 0.5;
    return {within == checks && sigma_ok,
            fmt("%d/%d estimates within 3 sigma (max %.2f sigma); spread sigma(100) = %.3f, sigma(1000) = %.4f, "
                "ratio %.2f (1/sqrt(n) predicts 3.16)",
                within, checks, worst_z, s100, s1000, s100 / s1000)};
}

Outcome completeness() {
    int accepted = 0, negative = 0, points = 0;
    std::int64_t total_shots = 0;
    double weakest = -1e9;
    for (double h : kGrid) {
        for (double k : kGrid) {
            const MinimalModel m(h, k);
            const auto setup = minimal_setup(m);
            const double e = analytic_h1_v(m, setup.theta).eb;
            negative += e < 0.0;
            weakest = std::max(weakest, e);
            // Shots for a 6-sigma margin from the exact single-shot variance.
            const auto ex = exact_shot(setup, true);
            const double sd = std::sqrt(ex.field_var + ex.int_var);
            const auto n = std::max<std::int64_t>(1000, static_cast<std::int64_t>(std::ceil(std::pow(6.0 * sd / e, 2))));
            QipConfig q{setup};
            q.n_shot = n;
            q.record_rounds = false;
            accepted += run_qip(q, Rng(static_cast<std::uint64_t>(1000 * h + 10 * k))).decision == Decision::Accept;
            total_shots += n;
            ++points;
        }
    }
    std::vector<double> grid;
    for (int i = -1571; i <= 1571; ++i) grid.push_back(i * 1e-3);
    const auto reps = delta_sensitivity(MinimalModel(1, 1), grid);
    std::size_t best = 0;
    for (std::size_t i = 1; i < reps.size(); ++i) {
        if (reps[i].eb < reps[best].eb) best = i;
    }
    const bool delta_ok = std::abs(reps[best].delta) < 0.5e-3;
    return {accepted == points && negative == points && delta_ok,
            fmt("%d/%d accepted (%lld shots/basis total), %d/%d analytically negative (weakest %.5f), "
                "delta-sweep argmin %.3f",
                accepted, points, static_cast<long long>(total_shots), negative, points, weakest, reps[best].delta)};
}

Outcome soundness() {
    int in_band = 0;
    std::string fractions;
    double worst_control = 0.0;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto res = soundness_sweep(MinimalModel(1, 1), 500, 600, Rng(seed));
        in_band += res.negative_fraction >= 0.002 && res.negative_fraction <= 0.020;
        fractions += fmt("%s%.5f", fractions.empty() ? "" : ", ", res.negative_fraction);
        worst_control = std::max(worst_control, std::abs(res.control.energy - kOptimalEnergy));
    }
    return {in_band >= 4 && worst_control <= 1e-9,
            fmt("negative fractions [%s], %d/5 in [0.002, 0.020] (need 4); control |E - E*| = %.1e", fractions.c_str(),
                in_band, worst_control)};
}

Outcome qsd() {
    const MinimalModel m(1, 1);
    int correct[2] = {0, 0};
    for (int c = 0; c < 2; ++c) {
        for (std::uint64_t g = 0; g < 100; ++g) {
            QsdConfig cfg{m};
            cfg.choice = c == 0 ? VerifierChoice::Q1 : VerifierChoice::Q2;
            cfg.n_shot = 1000;
            cfg.record_rounds = false;
            correct[c] += run_qsd(cfg, Rng(10000 * (c + 1) + g)).guess == cfg.choice;
        }
    }
    return {correct[0] >= 99 && correct[1] >= 99, fmt("Q1 %d/100, Q2 %d/100 correct (need 99)", correct[0], correct[1])};
}

Outcome oracle_equivalence() {
    Rng rng(606);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const MinimalModel m(0.1 + 2.0 * rng.uniform(), 0.1 + 2.0 * rng.uniform());
        const double theta = 2 * std::numbers::pi * rng.uniform();
        const auto ens = build_qet_ensemble(minimal_ground_state(m), theta);
        worst = std::max(worst, std::abs(ensemble_expectation(ens, minimal_terms(m).receiver_energy()) -
                                         analytic_h1_v(m, theta).eb));
    }
    // Full six-qubit circuit with both teleportation legs at 1e5 shots.
    const MinimalModel m(1, 1);
    const auto setup = minimal_setup(m);
    QipConfig q{setup};
    q.n_shot = 100000;
    q.engine = Engine::FullCircuit;
    const auto tr = run_qip(q, Rng(66));
    const auto ex = exact_shot(setup, true);
    const double z = (tr.estimate.mean_energy() - kOptimalEnergy) / std::sqrt((ex.field_var + ex.int_var) / q.n_shot);

    // Per-(mu, basis) outcome frequencies against the direct two-qubit circuit.
    const BranchSampler direct(setup);
    const double c1 = minimal_terms(m).field_b.constant();
    const double cv = minimal_terms(m).interaction.constant();
    double worst_freq_z = 0.0;
    for (int mu : {1, -1}) {
        for (auto basis : {Basis::Z, Basis::X}) {
            std::int64_t n = 0, low = 0;
            for (const auto &r : tr.rounds) {
                if (r.mu != mu || r.basis != basis) continue;
                ++n;
                const double x = basis == Basis::Z ? *r.h1_sample - c1 : *r.v_sample - cv;
                low += x < 0.0;
            }
            const auto [mean, var] = direct.sample_moments(mu, mu, basis);
            const double half = basis == Basis::Z ? m.h() : 2 * m.k();
            const double p_low = (1.0 - (mean - (basis == Basis::Z ? c1 : cv)) / half) / 2.0;
            const double sd = std::sqrt(std::max(p_low * (1 - p_low), 1e-300) / n);
            worst_freq_z = std::max(worst_freq_z, std::abs(static_cast<double>(low) / n - p_low) / sd);
        }
    }
    return {worst <= 1e-10 && std::abs(z) <= 4.0 && worst_freq_z <= 4.0,
            fmt("ensemble vs closed form max %.1e (tol 1e-10); full circuit E = %.5f, %.2f sigma from %.5f; "
                "branch outcome frequencies max %.2f sigma",
                worst, tr.estimate.mean_energy(), z, kOptimalEnergy, worst_freq_z)};
}

Outcome invariants() {
    std::vector<std::string> failed;
    auto expect = [&](bool ok, const char *name) {
        if (!ok) failed.emplace_back(name);
    };
    Rng rng(707);

    double norm_drift = 0.0, branch_gap = 0.0;
    for (int i = 0; i < 200; ++i) {
        const int n = 1 + i % 5;
        auto psi = haar_random_state(n, rng);
        for (int s = 0; s < n; ++s) {
            psi = apply_unitary(psi, haar_random_unitary(2, rng), {s});
            norm_drift = std::max(norm_drift, std::abs(psi.norm_squared() - 1.0));
            const auto br = branch_measure(psi, PauliString::single(n, s, std::array{Pauli::X, Pauli::Y, Pauli::Z}[s % 3]));
            branch_gap = std::max(branch_gap, std::abs(br[0].probability + br[1].probability - 1.0));
        }
    }
    expect(norm_drift <= 1e-12, "norm preservation");
    expect(branch_gap <= 1e-12, "branch completeness");

    double zeroing = 0.0, theta_gap = 0.0;
    bool signs = true;
    for (double h : kGrid) {
        for (double k : kGrid) {
            const MinimalModel m(h, k);
            const auto g = minimal_ground_state(m);
            const auto t = minimal_terms(m);
            for (const auto &o : {t.total(), t.field_a, t.field_b, t.interaction}) {
                zeroing = std::max(zeroing, std::abs(expectation(g, o)));
            }
            const auto gen = general_theta(t.as_list(), PauliString::single(2, 0, Pauli::X),
                                           PauliString::single(2, 1, Pauli::Y), g);
            theta_gap = std::max(theta_gap, std::abs(gen.theta - minimal_theta(m).theta));
            const auto c = conditional_table(m);
            signs = signs && c.v_c <= 0 && c.v_i >= 0 && c.h1_c >= 0 && c.h1_i <= 0;
        }
    }
    expect(zeroing <= 1e-12, "ground-state zeroing");
    expect(theta_gap <= 1e-9, "theta consistency");
    expect(signs, "conditional sign structure");

    double residual = 0.0;
    for (int i = 0; i < 20; ++i) {
        const int n = 2 + i % 6;
        std::vector<double> z, xx;
        for (int s = 0; s < n; ++s) z.push_back(2 * rng.uniform() - 1);
        for (int s = 0; s + 1 < n; ++s) xx.push_back(2 * rng.uniform() - 1);
        const GeneralChainModel model(z, xx);
        const auto gs = exact_ground_state(model);
        const auto hg = chain_hamiltonian(model).apply(gs.state.amplitudes());
        double r = 0.0;
        for (std::size_t j = 0; j < hg.size(); ++j) r += std::norm(hg[j] - gs.energy * gs.state[j]);
        residual = std::max(residual, std::sqrt(r));
    }
    expect(residual <= 1e-9, "eigen residual");

    bool locc = true;
    const auto setup = minimal_setup(MinimalModel(1, 1));
    for (int i = 0; i < 50; ++i) {
        auto backend = make_backend(Engine::FullCircuit, setup, prover_id(0));
        ClassicalChannel up(prover_id(0), kVerifier);
        Rng shot = rng.child(i);
        const int mu = backend->deliver_witness(up, shot);
        backend->respond(mu, up, shot);
        backend->measure(i % 2 ? Basis::X : Basis::Z, shot);
        locc = locc && locc_respected(backend->last_register()->log());
    }
    QipConfig q{setup};
    q.n_shot = 100;
    q.engine = Engine::FullCircuit;
    const auto tr = run_qip(q, Rng(1));
    expect(locc && tr.verifier_bits == tr.rounds_run, "LOCC discipline and one-bit budget");

    double level = 0.0;
    const MinimalModel m(1, 1);
    const double th = minimal_theta(m).theta;
    for (const auto &[k, h] : theta_level_set(th, 10)) {
        level = std::max(level, std::abs(std::sin(2 * minimal_theta(MinimalModel(h, k)).theta) - std::sin(2 * th)));
    }
    const auto e = pauli_expectations(m, th);
    for (const auto &[k, h] : observable_level_set(e.xx, e.z, th, 10)) {
        const auto f = pauli_expectations(MinimalModel(h, k), th);
        level = std::max({level, std::abs(f.xx - e.xx), std::abs(f.z - e.z)});
    }
    for (auto term : {EnergyTerm::Field, EnergyTerm::Interaction}) {
        const double target = term_energy(term, m, th);
        for (const auto &[k, h] : energy_level_set(term, target, th, 10)) {
            level = std::max(level, std::abs(term_energy(term, MinimalModel(h, k), th) - target));
        }
    }
    expect(level <= 1e-6, "level-set residuals");

    std::string detail = fmt("norm %.1e, branches %.1e, zeroing %.1e, theta %.1e, eigen %.1e, level %.1e", norm_drift,
                             branch_gap, zeroing, theta_gap, residual, level);
    for (const auto &f : failed) detail += "; FAILED " + f;
    return {failed.empty(), detail};
}

}  // namespace

int main() {
    struct Criterion {
        const char *name;
        double budget_s;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"table-1 analytic reproduction", 1.0, table1},
        {"shot convergence", 30.0, shot_convergence},
        {"completeness", 10.0, completeness},
        {"soundness (statistical)", 300.0, soundness},
        {"qsd distinguishability", 120.0, qsd},
        {"oracle equivalence", 60.0, oracle_equivalence},
        {"invariant suite", 120.0, invariants},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out{false, ""};
        try {
            out = criteria[i].run();
        } catch (const std::exception &e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs <= criteria[i].budget_s;
        const bool pass = out.pass && in_time;
        failures += !pass;
        std::printf("[%s] %zu %s: %s; %.2f s (budget %.0f s%s)\n", pass ? "PASS" : "FAIL", i + 1, criteria[i].name,
                    out.detail.c_str(), secs, criteria[i].budget_s, in_time ? "" : ", EXCEEDED");
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
