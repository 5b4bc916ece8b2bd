#include "qet/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <string>
#include <thread>

#include "qet/errors.hpp"
#include "qet/haar.hpp"
#include "qet/measurement.hpp"
#include "qet/protocol/qet.hpp"

namespace qet {

namespace {

constexpr double kLevelTol = 1e-6;

double theta_star(const MinimalModel &model) { return minimal_theta(model).theta; }

EnergyReport make_report(double h1, double v, double theta, double delta) {
    return EnergyReport{h1, v, h1 + v, theta, delta};
}

std::vector<ModelPair> scaled_ray(double r, int n) {
    std::vector<ModelPair> out;
    for (int j = 0; j < n; ++j) {
        const double c = 1.0 + 0.5 * j;
        out.emplace_back(c, c * r);
    }
    return out;
}

}  // namespace

EnergyReport analytic_h1_v(const MinimalModel &model, double theta) {
    const double h = model.h();
    const double k = model.k();
    const double s = model.norm();
    const double sn = std::sin(2.0 * theta);
    const double cs = 1.0 - std::cos(2.0 * theta);
    const double h1 = (h / s) * (k * sn + h * cs);
    const double v = (2.0 * k / s) * (-h * sn + k * cs);
    return make_report(h1, v, theta, theta - theta_star(model));
}

EnergyReport analytic_conditional(const MinimalModel &model, double theta, int mu, int nu) {
    if ((mu != 1 && mu != -1) || (nu != 1 && nu != -1)) {
        throw ArgumentError("mu and nu must be +1 or -1");
    }
    const double h = model.h();
    const double k = model.k();
    const double s = model.norm();
    const double sn = mu * nu * std::sin(2.0 * theta);
    const double cs = 1.0 - std::cos(2.0 * theta);
    const double h1 = (h / (2.0 * s)) * (k * sn + h * cs);
    const double v = (k / s) * (-h * sn + k * cs);
    return make_report(h1, v, theta, theta - theta_star(model));
}

ConditionalTable conditional_table(const MinimalModel &model) {
    const double t = theta_star(model);
    ConditionalTable out{};
    for (int mu : {1, -1}) {
        const auto c = analytic_conditional(model, t, mu, mu);
        const auto i = analytic_conditional(model, t, mu, -mu);
        out.h1_c += c.h1;
        out.v_c += c.v;
        out.h1_i += i.h1;
        out.v_i += i.v;
    }
    return out;
}

std::vector<EnergyReport> delta_sensitivity(const MinimalModel &model, const std::vector<double> &delta_grid) {
    const double t = theta_star(model);
    std::vector<EnergyReport> out;
    out.reserve(delta_grid.size());
    for (double d : delta_grid) {
        auto rep = analytic_h1_v(model, t + d);
        rep.delta = d;
        out.push_back(rep);
    }
    return out;
}

std::vector<double> linspace(double lo, double hi, int n) {
    if (n < 1) {
        throw ArgumentError("linspace needs at least one point");
    }
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        out[i] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
    }
    return out;
}

int resolve_threads(int requested) {
    int n = requested;
    if (n <= 0) {
        if (const char *env = std::getenv("QET_THREADS")) {
            n = std::atoi(env);
        }
    }
    if (n <= 0) {
        n = static_cast<int>(std::thread::hardware_concurrency());
    }
    return std::max(1, n);
}

SoundnessResult soundness_sweep(const MinimalModel &model, int n_unitaries, int n_thetas, const Rng &rng,
                                int threads) {
    if (n_unitaries < 1 || n_thetas < 1) {
        throw ArgumentError("n_unitaries and n_thetas must be positive");
    }
    const auto obs = minimal_terms(model).receiver_energy();
    const auto ground = minimal_ground_state(model);
    const auto sigma_a = PauliString::single(2, 0, Pauli::X);
    const auto sigma_b = PauliString::single(2, 1, Pauli::Y);

    auto attack = [&](std::int64_t id, const Statevector &psi, double theta) {
        const auto branches = branch_measure(psi, sigma_a);
        const ConditionalRotation plus(theta, 1, sigma_b);
        const ConditionalRotation minus(theta, -1, sigma_b);
        const double e_plus = branches[0].probability * expectation(plus.apply(branches[0].post_state), obs);
        const double e_minus = branches[1].probability * expectation(minus.apply(branches[1].post_state), obs);
        return AttackSample{id, theta, e_plus + e_minus, state_fidelity(ground, psi), e_plus, e_minus};
    };

    SoundnessResult res;
    res.samples.resize(static_cast<std::size_t>(n_unitaries) * n_thetas);
    auto work = [&](int first, int last) {
        for (int u = first; u < last; ++u) {
            Rng local = rng.child(static_cast<std::uint64_t>(u));
            const auto psi = haar_random_state(2, local);
            for (int i = 0; i < n_thetas; ++i) {
                const double theta = 2.0 * std::numbers::pi * i / n_thetas;
                res.samples[static_cast<std::size_t>(u) * n_thetas + i] = attack(u, psi, theta);
            }
        }
    };
    const int n_workers = std::min(resolve_threads(threads), n_unitaries);
    if (n_workers == 1) {
        work(0, n_unitaries);
    } else {
        std::vector<std::thread> pool;
        const int chunk = (n_unitaries + n_workers - 1) / n_workers;
        for (int w = 0; w < n_workers; ++w) {
            const int first = w * chunk;
            const int last = std::min(n_unitaries, first + chunk);
            if (first < last) {
                pool.emplace_back(work, first, last);
            }
        }
        for (auto &t : pool) {
            t.join();
        }
    }

    const auto negative = std::count_if(res.samples.begin(), res.samples.end(),
                                        [](const AttackSample &a) { return a.energy < 0.0; });
    res.negative_fraction = static_cast<double>(negative) / static_cast<double>(res.samples.size());
    res.control = attack(-1, ground, theta_star(model));
    return res;
}

Histogram histogram(const std::vector<double> &values, int bins) {
    if (bins < 1) {
        throw ArgumentError("histogram needs at least one bin");
    }
    Histogram out{0.0, 0.0, std::vector<std::int64_t>(static_cast<std::size_t>(bins), 0)};
    if (values.empty()) {
        return out;
    }
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    out.lo = *lo;
    out.hi = *hi;
    const double width = (out.hi - out.lo) / bins;
    for (double x : values) {
        int b = width > 0.0 ? static_cast<int>((x - out.lo) / width) : 0;
        out.counts[std::clamp(b, 0, bins - 1)]++;
    }
    return out;
}

double theta_signature(double r) { return r / std::sqrt((r * r + 2.0) * (r * r + 2.0) + r * r); }

std::vector<ModelPair> theta_level_set(double theta_target, int n_samples) {
    if (n_samples < 1) {
        throw ArgumentError("n_samples must be positive");
    }
    const double t = std::sin(2.0 * theta_target);
    const double c = std::cos(2.0 * theta_target);
    if (!(t > 0.0) || !(c > 0.0) || t > 1.0 / 3.0 + 1e-12) {
        throw EmptyLevelSetError("no model has this optimal angle");
    }
    // u = r^2 solves t^2 u^2 + (5t^2 - 1) u + 4 t^2 = 0 with u1 u2 = 4.
    const double b = 5.0 * t * t - 1.0;
    const double disc = std::max(0.0, b * b - 16.0 * t * t * t * t);
    const double u_hi = (-b + std::sqrt(disc)) / (2.0 * t * t);
    const double r_lo = std::sqrt(4.0 / u_hi);
    const double r_hi = std::sqrt(u_hi);
    const bool single = r_hi - r_lo < 1e-12;

    std::vector<ModelPair> out;
    for (int i = 0; static_cast<int>(out.size()) < n_samples; ++i) {
        const int j = single ? i : i / 2;
        const double r = (single || i % 2 == 0) ? r_lo : r_hi;
        const double scale = 1.0 + 0.5 * j;
        out.emplace_back(scale, scale * r);
    }
    for (const auto &[k, h] : out) {
        if (std::abs(theta_signature(h / k) - t) > 1e-9) {
            throw std::logic_error("theta level set lost precision");
        }
    }
    return out;
}

PauliExpectations pauli_expectations(const MinimalModel &model, double theta) {
    const double r = model.h() / model.k();
    const double n = std::sqrt(r * r + 1.0);
    const double sn = std::sin(2.0 * theta);
    const double cs = std::cos(2.0 * theta);
    return PauliExpectations{(-r * sn - cs) / n, (sn - r * cs) / n};
}

std::vector<ModelPair> observable_level_set(double xx_target, double z_target, double theta, int n_samples) {
    if (n_samples < 1) {
        throw ArgumentError("n_samples must be positive");
    }
    // With r = tan(a): <XX> = -cos(2t - a), <Z_B> = sin(2t - a).
    if (std::abs(std::hypot(xx_target, z_target) - 1.0) > kLevelTol) {
        throw EmptyLevelSetError("targets are not jointly reachable");
    }
    double a = std::remainder(2.0 * theta - std::atan2(z_target, -xx_target), 2.0 * std::numbers::pi);
    if (!(a > 0.0 && a < 0.5 * std::numbers::pi)) {
        throw EmptyLevelSetError("targets require h/k outside (0, inf)");
    }
    auto out = scaled_ray(std::tan(a), n_samples);
    for (const auto &[k, h] : out) {
        const auto e = pauli_expectations(MinimalModel(h, k), theta);
        if (std::abs(e.xx - xx_target) > kLevelTol || std::abs(e.z - z_target) > kLevelTol) {
            throw EmptyLevelSetError("targets are not jointly reachable");
        }
    }
    return out;
}

double term_energy(EnergyTerm term, const MinimalModel &model, double theta) {
    const auto rep = analytic_h1_v(model, theta);
    return term == EnergyTerm::Field ? rep.h1 : rep.v;
}

std::vector<ModelPair> energy_level_set(EnergyTerm term, double target, double theta, int n_samples) {
    if (n_samples < 1) {
        throw ArgumentError("n_samples must be positive");
    }
    if (!std::isfinite(target) || target == 0.0) {
        throw EmptyLevelSetError("energy target must be finite and nonzero");
    }
    // Energy per unit k along the ray h = r k.
    auto per_k = [&](double r) { return term_energy(term, MinimalModel(r, 1.0), theta); };
    auto valid = [&](double r) {
        const double f = per_k(r);
        return std::isfinite(f) && std::abs(f) > 1e-12 && (f > 0.0) == (target > 0.0);
    };

    constexpr double kStep = 1.1;
    constexpr int kSpan = 400;
    int start = kSpan + 1;
    for (int j = 0; j <= kSpan && start > kSpan; ++j) {
        for (int sgn : {1, -1}) {
            if (valid(std::pow(kStep, sgn * j))) {
                start = sgn * j;
                break;
            }
        }
    }
    if (start > kSpan) {
        throw EmptyLevelSetError("energy target has the wrong sign for every model");
    }

    std::vector<ModelPair> out;
    auto push = [&](int j) {
        const double r = std::pow(kStep, j);
        if (!valid(r)) {
            return false;
        }
        const double k = target / per_k(r);
        out.emplace_back(k, r * k);
        return true;
    };
    push(start);
    bool up = true;
    bool down = true;
    for (int d = 1; static_cast<int>(out.size()) < n_samples && (up || down) && d <= kSpan; ++d) {
        if (up) {
            up = push(start + d);
        }
        if (down && static_cast<int>(out.size()) < n_samples) {
            down = push(start - d);
        }
    }
    if (static_cast<int>(out.size()) < n_samples) {
        throw EmptyLevelSetError("energy level curve is shorter than requested");
    }
    return out;
}

void write_attack_csv(std::ostream &out, const std::vector<AttackSample> &samples) {
    out << "seed_id,theta,energy,fidelity\n" << std::setprecision(17);
    for (const auto &s : samples) {
        out << s.seed_id << ',' << s.theta << ',' << s.energy << ',' << s.fidelity << '\n';
    }
}

void write_energy_csv(std::ostream &out, const MinimalModel &model, const std::vector<EnergyReport> &reports) {
    out << "h,k,theta,delta,h1,v,eb\n" << std::setprecision(17);
    for (const auto &r : reports) {
        out << model.h() << ',' << model.k() << ',' << r.theta << ',' << r.delta << ',' << r.h1 << ',' << r.v << ','
            << r.eb << '\n';
    }
}

}  // namespace qet
