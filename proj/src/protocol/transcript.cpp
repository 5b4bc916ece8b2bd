#include "qet/protocol/transcript.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

#include "qet/errors.hpp"

namespace qet {

void RunningStats::add(double x) {
    ++n_;
    const double d = x - mean_;
    mean_ += d / static_cast<double>(n_);
    m2_ += d * (x - mean_);
}

double RunningStats::variance() const { return n_ > 1 ? m2_ / static_cast<double>(n_ - 1) : 0.0; }

void EnergyEstimate::add(const ShotRecord &rec) {
    if (rec.h1_sample) {
        field.add(*rec.h1_sample);
    }
    if (rec.v_sample) {
        interaction.add(*rec.v_sample);
    }
}

double EnergyEstimate::standard_error() const {
    double var = 0.0;
    if (field.count() > 0) {
        var += field.variance() / static_cast<double>(field.count());
    }
    if (interaction.count() > 0) {
        var += interaction.variance() / static_cast<double>(interaction.count());
    }
    return std::sqrt(var);
}

Decision decide(const EnergyEstimate &est, AcceptRule rule) {
    const double mean = est.mean_energy();
    if (rule == AcceptRule::Strict) {
        return mean < 0.0 ? Decision::Accept : Decision::Reject;
    }
    const double se = est.standard_error();
    if (se == 0.0) {
        if (mean < 0.0) {
            return Decision::Accept;
        }
        return mean > 0.0 ? Decision::Reject : Decision::Undecided;
    }
    const double z = mean / se;
    if (z < -kZCritical) {
        return Decision::Accept;
    }
    if (z > kZCritical) {
        return Decision::Reject;
    }
    return Decision::Undecided;
}

void write_jsonl(std::ostream &out, const std::vector<ShotRecord> &rounds) {
    for (const auto &r : rounds) {
        nlohmann::ordered_json j;
        j["shot"] = r.shot;
        j["basis"] = to_string(r.basis);
        j["mu"] = r.mu;
        j["nu"] = r.nu;
        j["h1_sample"] = r.h1_sample ? nlohmann::ordered_json(*r.h1_sample) : nlohmann::ordered_json(nullptr);
        j["v_sample"] = r.v_sample ? nlohmann::ordered_json(*r.v_sample) : nlohmann::ordered_json(nullptr);
        out << j.dump() << '\n';
    }
}

std::vector<ShotRecord> read_jsonl(std::istream &in) {
    std::vector<ShotRecord> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        try {
            const auto j = nlohmann::json::parse(line);
            ShotRecord r{};
            r.shot = j.at("shot").get<std::int64_t>();
            const auto basis = j.at("basis").get<std::string>();
            if (basis != "Z" && basis != "X") {
                throw ArgumentError("unknown basis '" + basis + "'");
            }
            r.basis = basis == "Z" ? Basis::Z : Basis::X;
            r.mu = j.at("mu").get<int>();
            r.nu = j.at("nu").get<int>();
            if (!j.at("h1_sample").is_null()) {
                r.h1_sample = j.at("h1_sample").get<double>();
            }
            if (!j.at("v_sample").is_null()) {
                r.v_sample = j.at("v_sample").get<double>();
            }
            out.push_back(r);
        } catch (const nlohmann::json::exception &e) {
            throw ArgumentError(std::string("malformed transcript line: ") + e.what());
        }
    }
    return out;
}

}  // namespace qet
