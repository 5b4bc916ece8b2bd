#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "qet/hamiltonian.hpp"
#include "qet/rng.hpp"

namespace qet {

/// Receiver-side energies of the minimal model after one QET round.
struct EnergyReport {
    double h1;     ///< receiver field term
    double v;      ///< interaction term
    double eb;     ///< h1 + v
    double theta;  ///< angle used
    double delta;  ///< theta - theta*
};

/// Closed forms averaged over mu with nu = mu, s = sqrt(h^2 + k^2):
///   <H1> = (h/s) [k sin 2t + h (1 - cos 2t)]
///   <V>  = (2k/s) [-h sin 2t + k (1 - cos 2t)]
EnergyReport analytic_h1_v(const MinimalModel &model, double theta);

/// Branch contribution for one (mu, nu), weighted by the branch probability
/// 1/2, so summing over mu with nu = +-mu gives the faithful or unfaithful
/// total:
///   <H1(mu,nu)> = (h/2s) [k mu nu sin 2t + h (1 - cos 2t)]
///   <V(mu,nu)>  = (k/s) [-h mu nu sin 2t + k (1 - cos 2t)]
EnergyReport analytic_conditional(const MinimalModel &model, double theta, int mu, int nu);

/// Faithful (C) and unfaithful (I) totals at theta*.
struct ConditionalTable {
    double h1_c;
    double h1_i;
    double v_c;
    double v_i;
};
ConditionalTable conditional_table(const MinimalModel &model);

/// analytic_h1_v at theta* + delta for each delta.
std::vector<EnergyReport> delta_sensitivity(const MinimalModel &model, const std::vector<double> &delta_grid);

/// Uniform grid of n points on [lo, hi], both ends included.
std::vector<double> linspace(double lo, double hi, int n);

struct AttackSample {
    std::int64_t seed_id;  ///< unitary index; -1 for the ground-state control
    double theta;
    double energy;         ///< mu-averaged receiver energy
    double fidelity;       ///< |<g|psi>|^2
    double energy_plus;    ///< contribution of the mu = +1 branch
    double energy_minus;   ///< contribution of the mu = -1 branch
};

struct SoundnessResult {
    std::vector<AttackSample> samples;  ///< unitary-major, theta-minor
    double negative_fraction;           ///< over `samples`, strictly negative
    AttackSample control;               ///< ground state at theta*
};

/// Haar attack: n_unitaries states U|00> (unitary u drawn from rng.child(u)),
/// each run through a faithful QET round at n_thetas angles i * 2pi / n_thetas.
/// `threads` caps worker threads; 0 reads QET_THREADS, then hardware.
SoundnessResult soundness_sweep(const MinimalModel &model, int n_unitaries, int n_thetas, const Rng &rng,
                                int threads = 0);

/// Worker count from QET_THREADS (0 or unset means hardware concurrency).
int resolve_threads(int requested);

struct Histogram {
    double lo;
    double hi;
    std::vector<std::int64_t> counts;
};
/// `bins` uniform bins over [min, max] of the values.
Histogram histogram(const std::vector<double> &values, int bins = 100);

/// (k, h) pair.
using ModelPair = std::pair<double, double>;

/// sin 2theta* as a function of r = h/k.
double theta_signature(double r);

/// Models sharing theta* = theta_target. sin 2theta* depends only on h/k and
/// takes values in (0, 1/3], each reached on the rays r and 2/r, so the
/// result alternates between the two rays at growing scale.
/// Throws EmptyLevelSetError when the target is unreachable.
std::vector<ModelPair> theta_level_set(double theta_target, int n_samples);

/// <X_A X_B> and <Z_B> on the faithful post-round state at angle theta.
struct PauliExpectations {
    double xx;
    double z;
};
PauliExpectations pauli_expectations(const MinimalModel &model, double theta);

/// Models whose post-round <X_A X_B> and <Z_B> at `theta` match the targets
/// within 1e-6. Both depend only on h/k, so the preimage is one ray.
std::vector<ModelPair> observable_level_set(double xx_target, double z_target, double theta, int n_samples);

enum class EnergyTerm { Field, Interaction };

/// Models whose post-round <H1> or <V> at `theta` equals `target`. Both are
/// homogeneous of degree one, so the level set is the curve
/// k = target / f(h/k); it is sampled at ratios spaced by 10% around the
/// valid ratio closest to 1. Distinct ratios give distinct ground states.
std::vector<ModelPair> energy_level_set(EnergyTerm term, double target, double theta, int n_samples);

double term_energy(EnergyTerm term, const MinimalModel &model, double theta);

/// CSV with header seed_id,theta,energy,fidelity.
void write_attack_csv(std::ostream &out, const std::vector<AttackSample> &samples);
/// CSV with header h,k,theta,delta,h1,v,eb.
void write_energy_csv(std::ostream &out, const MinimalModel &model, const std::vector<EnergyReport> &reports);

}  // namespace qet
