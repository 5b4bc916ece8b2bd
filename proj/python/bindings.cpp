#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qet/analysis.hpp"
#include "qet/errors.hpp"
#include "qet/hamiltonian.hpp"
#include "qet/protocol/qet.hpp"
#include "qet/protocol/qip.hpp"
#include "qet/protocol/qmip.hpp"
#include "qet/protocol/qsd.hpp"
#include "qet/rng.hpp"

namespace py = pybind11;
using namespace qet;

namespace {

py::dict summarize(const ProtocolTranscript &t) {
    py::dict d;
    d["decision"] = to_string(t.decision);
    d["energy"] = t.estimate.mean_energy();
    d["field"] = t.estimate.field.mean();
    d["interaction"] = t.estimate.interaction.mean();
    d["standard_error"] = t.estimate.standard_error();
    d["rounds_run"] = t.rounds_run;
    d["verifier_messages"] = t.verifier_messages;
    d["verifier_bits"] = t.verifier_bits;
    py::list rounds;
    for (const auto &r : t.rounds) {
        py::dict row;
        row["shot"] = r.shot;
        row["basis"] = to_string(r.basis);
        row["mu"] = r.mu;
        row["nu"] = r.nu;
        row["h1_sample"] = r.h1_sample ? py::cast(*r.h1_sample) : py::none();
        row["v_sample"] = r.v_sample ? py::cast(*r.v_sample) : py::none();
        rounds.append(row);
    }
    d["rounds"] = rounds;
    return d;
}

Engine engine_from(const std::string &name) {
    if (name == "branch-sampling") return Engine::BranchSampling;
    if (name == "full-circuit") return Engine::FullCircuit;
    throw ArgumentError("unknown engine: " + name);
}

AcceptRule rule_from(const std::string &name) {
    if (name == "strict") return AcceptRule::Strict;
    if (name == "ztest") return AcceptRule::ZTest;
    throw ArgumentError("unknown rule: " + name);
}

py::dict report_dict(const EnergyReport &r) {
    py::dict d;
    d["h1"] = r.h1;
    d["v"] = r.v;
    d["eb"] = r.eb;
    d["theta"] = r.theta;
    d["delta"] = r.delta;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Quantum energy teleportation proofs: simulation core";

    py::register_exception<CapacityError>(m, "CapacityError", PyExc_ValueError);
    py::register_exception<DegenerateModelError>(m, "DegenerateModelError", PyExc_ValueError);
    py::register_exception<EmptyLevelSetError>(m, "EmptyLevelSetError", PyExc_ValueError);
    py::register_exception<ConfigurationError>(m, "ConfigurationError", PyExc_ValueError);

    py::class_<MinimalModel>(m, "MinimalModel")
        .def(py::init<double, double>(), py::arg("h"), py::arg("k"))
        .def_property_readonly("h", &MinimalModel::h)
        .def_property_readonly("k", &MinimalModel::k)
        .def_property_readonly("norm", &MinimalModel::norm)
        .def("__repr__", [](const MinimalModel &mm) {
            return "MinimalModel(h=" + std::to_string(mm.h()) + ", k=" + std::to_string(mm.k()) + ")";
        });

    m.def("optimal_theta", [](const MinimalModel &mm) {
        auto sol = minimal_theta(mm);
        return py::make_tuple(sol.theta, sol.optimal_energy());
    }, py::arg("model"), "Optimal angle and the energy it reaches.");

    m.def("chain_theta", [](std::vector<double> z, std::vector<double> xx, int site_a, int site_b) {
        auto setup = chain_setup(GeneralChainModel(std::move(z), std::move(xx)), site_a, site_b);
        return setup.theta;
    }, py::arg("z"), py::arg("xx"), py::arg("site_a"), py::arg("site_b"));

    m.def("analytic_energy", [](const MinimalModel &mm, double theta) {
        return report_dict(analytic_h1_v(mm, theta));
    }, py::arg("model"), py::arg("theta"));

    m.def("analytic_conditional", [](const MinimalModel &mm, double theta, int mu, int nu) {
        return report_dict(analytic_conditional(mm, theta, mu, nu));
    }, py::arg("model"), py::arg("theta"), py::arg("mu"), py::arg("nu"));

    m.def("conditional_table", [](const MinimalModel &mm) {
        auto t = conditional_table(mm);
        py::dict d;
        d["H1_C"] = t.h1_c;
        d["H1_I"] = t.h1_i;
        d["V_C"] = t.v_c;
        d["V_I"] = t.v_i;
        return d;
    }, py::arg("model"));

    m.def("delta_sensitivity", [](const MinimalModel &mm, const std::vector<double> &deltas) {
        py::list out;
        for (const auto &r : delta_sensitivity(mm, deltas)) out.append(report_dict(r));
        return out;
    }, py::arg("model"), py::arg("deltas"));

    m.def("run_qip", [](const MinimalModel &mm, std::int64_t n_shot, std::uint64_t seed, std::optional<double> theta,
                        bool faithful, const std::string &rule, const std::string &engine, bool record_rounds) {
        QipConfig cfg{minimal_setup(mm, std::nullopt, theta)};
        cfg.faithful = faithful;
        cfg.n_shot = n_shot;
        cfg.rule = rule_from(rule);
        cfg.engine = engine_from(engine);
        cfg.record_rounds = record_rounds;
        ProtocolTranscript t;
        {
            py::gil_scoped_release release;
            t = run_qip(cfg, Rng(seed));
        }
        return summarize(t);
    }, py::arg("model"), py::arg("n_shot") = 1000, py::arg("seed") = 0, py::arg("theta") = py::none(),
       py::arg("faithful") = true, py::arg("rule") = "strict", py::arg("engine") = "branch-sampling",
       py::arg("record_rounds") = false);

    m.def("run_qsd", [](const MinimalModel &mm, const std::string &choice, std::int64_t n_shot, std::uint64_t seed,
                        std::optional<double> theta, const std::string &engine) {
        QsdConfig cfg{mm};
        if (choice == "Q1") cfg.choice = VerifierChoice::Q1;
        else if (choice == "Q2") cfg.choice = VerifierChoice::Q2;
        else throw ArgumentError("choice must be Q1 or Q2");
        cfg.theta = theta;
        cfg.n_shot = n_shot;
        cfg.engine = engine_from(engine);
        cfg.record_rounds = false;
        QsdResult r = [&] {
            py::gil_scoped_release release;
            return run_qsd(cfg, Rng(seed));
        }();
        py::dict d;
        d["guess"] = to_string(r.guess);
        d["field_guess"] = to_string(r.field_guess);
        d["interaction_estimate"] = r.interaction_estimate;
        d["field_estimate"] = r.field_estimate;
        d["verifier_accepts"] = r.verifier_accepts;
        return d;
    }, py::arg("model"), py::arg("choice") = "Q1", py::arg("n_shot") = 1000, py::arg("seed") = 0,
       py::arg("theta") = py::none(), py::arg("engine") = "branch-sampling");

    m.def("run_qmip", [](const std::vector<MinimalModel> &models, std::int64_t n_shot, std::uint64_t seed,
                         const std::string &rule) {
        QmipConfig cfg;
        int next = 0;
        for (const auto &mm : models) {
            cfg.provers.push_back(QmipProver{mm, {next, next + 1}, std::nullopt, std::nullopt, true});
            next += 2;
        }
        cfg.n_shot = n_shot;
        cfg.rule = rule_from(rule);
        cfg.record_rounds = false;
        QmipResult r = [&] {
            py::gil_scoped_release release;
            return run_qmip(cfg, Rng(seed));
        }();
        py::list provers;
        for (const auto &t : r.transcripts) provers.append(summarize(t));
        py::dict d;
        d["provers"] = provers;
        d["broadcasts"] = r.broadcasts;
        return d;
    }, py::arg("models"), py::arg("n_shot") = 1000, py::arg("seed") = 0, py::arg("rule") = "strict");

    m.def("soundness_sweep", [](const MinimalModel &mm, int n_unitaries, int n_thetas, std::uint64_t seed,
                                int threads) {
        SoundnessResult r = [&] {
            py::gil_scoped_release release;
            return soundness_sweep(mm, n_unitaries, n_thetas, Rng(seed), threads);
        }();
        const auto n = static_cast<py::ssize_t>(r.samples.size());
        const std::vector<py::ssize_t> shape{n};
        py::array_t<std::int64_t> seed_id(shape);
        py::array_t<double> theta(shape), energy(shape), fidelity(shape);
        auto s = seed_id.mutable_unchecked<1>();
        auto t = theta.mutable_unchecked<1>();
        auto e = energy.mutable_unchecked<1>();
        auto f = fidelity.mutable_unchecked<1>();
        for (py::ssize_t i = 0; i < n; ++i) {
            const auto &a = r.samples[static_cast<std::size_t>(i)];
            s(i) = a.seed_id;
            t(i) = a.theta;
            e(i) = a.energy;
            f(i) = a.fidelity;
        }
        py::dict d;
        d["seed_id"] = seed_id;
        d["theta"] = theta;
        d["energy"] = energy;
        d["fidelity"] = fidelity;
        d["negative_fraction"] = r.negative_fraction;
        d["control_energy"] = r.control.energy;
        d["control_fidelity"] = r.control.fidelity;
        return d;
    }, py::arg("model"), py::arg("n_unitaries") = 500, py::arg("n_thetas") = 600, py::arg("seed") = 0,
       py::arg("threads") = 0);

    m.def("pauli_expectations", [](const MinimalModel &mm, double theta) {
        auto p = pauli_expectations(mm, theta);
        return py::make_tuple(p.xx, p.z);
    }, py::arg("model"), py::arg("theta"), "Post-round (<X_A X_B>, <Z_B>).");

    m.def("theta_level_set", &theta_level_set, py::arg("theta"), py::arg("n_samples") = 10,
          "(k, h) pairs sharing the optimal angle.");
    m.def("observable_level_set", &observable_level_set, py::arg("xx"), py::arg("z"), py::arg("theta"),
          py::arg("n_samples") = 10);
    m.def("energy_level_set", [](const std::string &term, double target, double theta, int n_samples) {
        EnergyTerm t;
        if (term == "field") t = EnergyTerm::Field;
        else if (term == "interaction") t = EnergyTerm::Interaction;
        else throw ArgumentError("term must be field or interaction");
        return energy_level_set(t, target, theta, n_samples);
    }, py::arg("term"), py::arg("target"), py::arg("theta"), py::arg("n_samples") = 10);
}
