#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "qet/protocol/channel.hpp"

namespace qet {

/// One protocol round. Exactly one of the two samples is present: the field
/// sample for Z-basis rounds, the interaction sample for X-basis rounds.
struct ShotRecord {
    std::int64_t shot;
    Basis basis;
    int mu;
    int nu;
    std::optional<double> h1_sample;
    std::optional<double> v_sample;

    friend bool operator==(const ShotRecord &, const ShotRecord &) = default;
};

/// Welford accumulator.
class RunningStats {
  public:
    void add(double x);
    std::int64_t count() const { return n_; }
    double mean() const { return mean_; }
    /// Unbiased sample variance; 0 with fewer than two samples.
    double variance() const;

  private:
    std::int64_t n_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
};

/// Receiver-energy estimate assembled from both bases.
struct EnergyEstimate {
    RunningStats field;
    RunningStats interaction;

    void add(const ShotRecord &rec);
    double mean_energy() const { return field.mean() + interaction.mean(); }
    /// Standard error of mean_energy().
    double standard_error() const;
};

enum class AcceptRule { Strict, ZTest };

/// One-sided z critical value at significance 0.001.
inline constexpr double kZCritical = 3.090232306167813;

/// Strict: Accept iff the mean is negative. ZTest: Accept when significantly
/// negative, Reject when significantly positive, Undecided otherwise.
Decision decide(const EnergyEstimate &est, AcceptRule rule);

struct ProtocolTranscript {
    std::vector<ShotRecord> rounds;  ///< empty when recording is disabled
    EnergyEstimate estimate;
    Decision decision = Decision::Undecided;
    std::int64_t rounds_run = 0;
    std::int64_t verifier_messages = 0;
    std::int64_t verifier_bits = 0;
};

/// Line-delimited records, one JSON object per round with keys
/// shot, basis, mu, nu, h1_sample, v_sample (null when not measured).
void write_jsonl(std::ostream &out, const std::vector<ShotRecord> &rounds);
std::vector<ShotRecord> read_jsonl(std::istream &in);

}  // namespace qet
