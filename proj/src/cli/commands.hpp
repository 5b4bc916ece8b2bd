#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "config.hpp"

namespace qet::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitCapacity = 2,
    kExitInternal = 3,
};

/// Runs one experiment, writes its files into config.out and returns the
/// manifest that was written to config.out/manifest.json. Each output file
/// is listed with its SHA-256. CSV and JSONL outputs depend only on the
/// config; the manifest also carries the wall time.
nlohmann::ordered_json run_experiment(const ExperimentConfig &config, std::ostream &log);

/// Maps an exception from run_experiment or config handling to an exit code.
int exit_code_for(const std::exception &e);

/// Hex SHA-256 of a file's bytes.
std::string sha256_file(const std::string &path);

}  // namespace qet::cli
