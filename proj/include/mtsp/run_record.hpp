#pragma once

#include "mtsp/config.hpp"
#include "mtsp/ga.hpp"
#include "mtsp/instance.hpp"
#include "mtsp/report.hpp"
#include "mtsp/solution.hpp"

#include "json.hpp"

#include <string>
#include <string_view>

namespace mtsp {

inline constexpr char const *kRunSchema = "mtsp-run/1";
inline constexpr char const *kTimingSchema = "mtsp-timing/1";

// Hex SHA-256 of a byte string.
std::string sha256_hex(std::string_view bytes);

struct InstanceInfo {
    std::string source;  // file path, or "random:<nodes>,<seed>"
    std::string sha256;  // of the file bytes, or of the serialized generated instance
};

nlohmann::json config_to_json(GaConfig const &config, CutoffSpec const &cutoff);

// Tours as city indices 1..n (depot excluded) plus their file labels.
nlohmann::json solution_to_json(MtspSolution const &solution, Instance const &instance);

// Reads back the "tours" of a solution object and recomputes lengths.
MtspSolution solution_from_json(nlohmann::json const &json, Instance const &instance);

// Deterministic record of one run: instance identity, configuration echo,
// best solution, improvement history by generation. Wall-clock data lives in
// the separate timing record so identical runs give identical bytes.
nlohmann::json run_record(Instance const &instance, InstanceInfo const &info, GaConfig const &config,
                          CutoffSpec const &cutoff, int run_index, RunResult const &result);

nlohmann::json timing_record(RunResult const &result, double load_seconds);

}  // namespace mtsp
