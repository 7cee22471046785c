#include "mtsp/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace mtsp {

std::string to_string(CrossoverKind kind)
{
    return kind == CrossoverKind::Stx ? "stx" : "ox";
}

CrossoverKind crossover_from_string(std::string const &text)
{
    if (text == "stx")
        return CrossoverKind::Stx;
    if (text == "ox")
        return CrossoverKind::Ox;
    throw std::invalid_argument("unknown crossover '" + text + "' (expected stx|ox)");
}

int GaConfig::n_best() const
{
    return std::clamp(static_cast<int>(std::lround(n_best_frac * mu)), 0, mu);
}

int GaConfig::n_close(int num_cities) const
{
    int const k = static_cast<int>(std::ceil(n_close_frac * num_cities - 1e-9));
    return std::clamp(k, 1, std::max(1, num_cities - 1));
}

void GaConfig::validate() const
{
    auto require = [](bool ok, char const *what) {
        if (!ok)
            throw std::invalid_argument(what);
    };
    require(mu >= 1, "mu must be at least 1");
    require(lambda >= 1, "lambda must be at least 1");
    require(k_tournament >= 1, "k_tournament must be at least 1");
    require(it_div >= 1, "it_div must be at least 1");
    require(it_ni >= 1, "it_ni must be at least 1");
    require(n_best_frac >= 0.0 && n_best_frac <= 1.0, "n_best_frac must lie in [0, 1]");
    require(n_elite_frac >= 0.0 && n_elite_frac < 1.0, "n_elite_frac must lie in [0, 1)");
    require(n_close_frac > 0.0 && n_close_frac <= 1.0, "n_close_frac must lie in (0, 1]");
    require(p_remove >= 0.0 && p_remove <= 1.0, "p_remove must lie in [0, 1]");
    require(n_imprv >= 0, "n_imprv must be non-negative");
    require(n_local_1 >= 0 && n_local_2 >= 0, "n_local values must be non-negative");
    require(n_local_1 < n_local_2 || (n_local_1 == 0 && n_local_2 == 0),
            "n_local_1 must be smaller than n_local_2");
    require(!cutoff_seconds || *cutoff_seconds >= 0.0, "cutoff must be non-negative");
    require(!max_generations || *max_generations >= 0, "max_generations must be non-negative");
}

namespace {

template <class T> T parse_number(std::string const &key, std::string const &text)
{
    T value{};
    auto const *first = text.data();
    auto const *last = text.data() + text.size();
    auto const [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        throw std::invalid_argument("malformed value '" + text + "' for parameter " + key);
    return value;
}

bool parse_bool(std::string const &key, std::string const &text)
{
    if (text == "1" || text == "true" || text == "on")
        return true;
    if (text == "0" || text == "false" || text == "off")
        return false;
    throw std::invalid_argument("malformed boolean '" + text + "' for parameter " + key);
}

}  // namespace

void GaConfig::set(std::string const &key, std::string const &value)
{
    if (key == "mu")
        mu = parse_number<int>(key, value);
    else if (key == "lambda")
        lambda = parse_number<int>(key, value);
    else if (key == "k_tournament")
        k_tournament = parse_number<int>(key, value);
    else if (key == "it_div")
        it_div = parse_number<long>(key, value);
    else if (key == "it_ni")
        it_ni = parse_number<long>(key, value);
    else if (key == "n_best_frac")
        n_best_frac = parse_number<double>(key, value);
    else if (key == "n_elite_frac")
        n_elite_frac = parse_number<double>(key, value);
    else if (key == "n_close_frac")
        n_close_frac = parse_number<double>(key, value);
    else if (key == "p_remove")
        p_remove = parse_number<double>(key, value);
    else if (key == "n_imprv")
        n_imprv = parse_number<long>(key, value);
    else if (key == "n_local_1")
        n_local_1 = parse_number<int>(key, value);
    else if (key == "n_local_2")
        n_local_2 = parse_number<int>(key, value);
    else if (key == "max_generations")
        max_generations = parse_number<long>(key, value);
    else if (key == "enrich")
        enrich = parse_bool(key, value);
    else if (key == "crossover")
        crossover = crossover_from_string(value);
    else
        throw std::invalid_argument("unknown parameter '" + key + "'");
}

}  // namespace mtsp
