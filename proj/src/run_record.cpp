#include "mtsp/run_record.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <stdexcept>

namespace mtsp {

std::string sha256_hex(std::string_view bytes)
{
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int length = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 computation failed");

    std::string hex;
    char buf[3];
    for (unsigned int i = 0; i < length; ++i) {
        std::snprintf(buf, sizeof buf, "%02x", digest[i]);
        hex += buf;
    }
    return hex;
}

nlohmann::json config_to_json(GaConfig const &config, CutoffSpec const &cutoff)
{
    nlohmann::json j;
    j["mu"] = config.mu;
    j["lambda"] = config.lambda;
    j["k_tournament"] = config.k_tournament;
    j["it_div"] = config.it_div;
    j["it_ni"] = config.it_ni;
    j["n_best_frac"] = config.n_best_frac;
    j["n_elite_frac"] = config.n_elite_frac;
    j["n_close_frac"] = config.n_close_frac;
    j["p_remove"] = config.p_remove;
    j["n_imprv"] = config.n_imprv;
    j["n_local_1"] = config.n_local_1;
    j["n_local_2"] = config.n_local_2;
    j["cutoff"] = cutoff.text;
    j["cutoff_seconds"] = config.cutoff_seconds ? nlohmann::json(*config.cutoff_seconds) : nlohmann::json();
    j["max_generations"] = config.max_generations ? nlohmann::json(*config.max_generations) : nlohmann::json();
    j["seed"] = config.seed;
    j["crossover"] = to_string(config.crossover);
    j["enrich"] = config.enrich;
    return j;
}

nlohmann::json solution_to_json(MtspSolution const &solution, Instance const &instance)
{
    nlohmann::json tours = nlohmann::json::array();
    nlohmann::json labels = nlohmann::json::array();
    for (auto const &tour : solution.tours) {
        tours.push_back(tour);
        nlohmann::json row = nlohmann::json::array();
        for (int c : tour)
            row.push_back(instance.label(c));
        labels.push_back(std::move(row));
    }
    return {
        {"makespan", solution.makespan},
        {"tour_lengths", solution.lengths},
        {"tours", std::move(tours)},
        {"tour_labels", std::move(labels)},
    };
}

MtspSolution solution_from_json(nlohmann::json const &json, Instance const &instance)
{
    std::vector<Tour> tours = json.at("tours").get<std::vector<Tour>>();
    return make_solution(instance, std::move(tours));
}

nlohmann::json run_record(Instance const &instance, InstanceInfo const &info, GaConfig const &config,
                          CutoffSpec const &cutoff, int run_index, RunResult const &result)
{
    nlohmann::json history = nlohmann::json::array();
    for (auto const &entry : result.history)
        history.push_back({{"generation", entry.generation}, {"makespan", entry.makespan}});

    auto solution = solution_to_json(result.best.solution, instance);
    solution["generations"] = result.generations;
    solution["termination"] = to_string(result.termination);
    solution["history"] = std::move(history);

    return {
        {"schema", kRunSchema},
        {"instance",
         {
             {"name", instance.name()},
             {"source", info.source},
             {"sha256", info.sha256},
             {"nodes", instance.num_nodes()},
             {"cities", instance.num_cities()},
             {"salesmen", instance.num_salesmen()},
             {"metric", to_string(instance.metric())},
             {"depot_label", instance.label(0)},
         }},
        {"config", config_to_json(config, cutoff)},
        {"run_index", run_index},
        {"result", std::move(solution)},
    };
}

nlohmann::json timing_record(RunResult const &result, double load_seconds)
{
    nlohmann::json history = nlohmann::json::array();
    for (auto const &entry : result.history)
        history.push_back({{"generation", entry.generation}, {"seconds", entry.seconds}});
    return {
        {"schema", kTimingSchema},
        {"load_seconds", load_seconds},
        {"solve_seconds", result.seconds},
        {"time_to_best", result.time_to_best},
        {"history", std::move(history)},
    };
}

}  // namespace mtsp
