#include "evoshapes/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace evoshapes {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

[[noreturn]] void bad_value(std::string_view key, const char* range,
                            std::string_view value) {
    throw ConfigError(std::string(key) + ": expected " + range + ", got '" +
                      std::string(value) + "'");
}

long long parse_int(std::string_view key, std::string_view value, long long lo,
                    long long hi, const char* range) {
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || ptr != value.data() + value.size() || v < lo || v > hi)
        bad_value(key, range, value);
    return v;
}

double parse_real(std::string_view key, std::string_view value, double lo, double hi,
                  const char* range) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || ptr != value.data() + value.size() || !(v >= lo && v <= hi))
        bad_value(key, range, value);
    return v;
}

bool parse_bool(std::string_view key, std::string_view value) {
    std::string lower(value);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (lower == "true") return true;
    if (lower == "false") return false;
    bad_value(key, "true or false", value);
}

std::uint64_t parse_u64(std::string_view key, std::string_view value) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        bad_value(key, "unsigned 64-bit integer", value);
    return v;
}

} // namespace

EvolutionConfig default_config() {
    EvolutionConfig config;
    config.number_of_parents = 1;
    config.children_per_parent = 1;
    config.composition = GenomeComposition{20, 0, 0, 3};
    config.mutation.mutation_probability = 0.1;
    config.mutation.genetic_restructure_rate = 0.0;
    config.mutation.soft_mutation_rate = 0.1;
    config.mutation.hybrid_soft_generations = 0;
    config.mutation.hybrid_medium_generations = 0;
    config.mutation.chunk_mode = false;
    config.mutation.gene_swap_enabled = false;
    config.crossover_enabled = false;
    config.save_rate = 1000;
    config.max_generations = 10000;
    config.seed = 1;
    return config;
}

void apply_setting(EvolutionConfig& config, std::string_view key,
                   std::string_view value) {
    if (key == "number_of_parents")
        config.number_of_parents =
            static_cast<int>(parse_int(key, value, 1, 100, "integer in [1, 100]"));
    else if (key == "children_per_parent")
        config.children_per_parent =
            static_cast<int>(parse_int(key, value, 1, 100, "integer in [1, 100]"));
    else if (key == "polygons")
        config.composition.polygons = static_cast<int>(
            parse_int(key, value, 0, 1000000, "integer >= 0"));
    else if (key == "circles")
        config.composition.circles = static_cast<int>(
            parse_int(key, value, 0, 1000000, "integer >= 0"));
    else if (key == "lines")
        config.composition.lines = static_cast<int>(
            parse_int(key, value, 0, 1000000, "integer >= 0"));
    else if (key == "vertices")
        config.composition.vertices_per_polygon = static_cast<int>(
            parse_int(key, value, 3, 1000000, "integer >= 3"));
    else if (key == "mutation_probability")
        config.mutation.mutation_probability =
            parse_real(key, value, 0.0, 1.0, "real in [0, 1]");
    else if (key == "genetic_restructure_rate")
        config.mutation.genetic_restructure_rate =
            parse_real(key, value, 0.0, 1.0, "real in [0, 1]");
    else if (key == "soft_mutation_rate") {
        config.mutation.soft_mutation_rate =
            parse_real(key, value, 0.0, 1.0, "real in (0, 1]");
        if (config.mutation.soft_mutation_rate <= 0.0)
            bad_value(key, "real in (0, 1]", value);
    } else if (key == "hybrid_soft")
        config.mutation.hybrid_soft_generations = static_cast<int>(
            parse_int(key, value, 0, 1000000000, "integer >= 0"));
    else if (key == "hybrid_medium")
        config.mutation.hybrid_medium_generations = static_cast<int>(
            parse_int(key, value, 0, 1000000000, "integer >= 0"));
    else if (key == "chunk_mutation")
        config.mutation.chunk_mode = parse_bool(key, value);
    else if (key == "crossover_mutation")
        config.crossover_enabled = parse_bool(key, value);
    else if (key == "gene_swap")
        config.mutation.gene_swap_enabled = parse_bool(key, value);
    else if (key == "save_rate")
        config.save_rate = static_cast<int>(
            parse_int(key, value, 1, 1000000000, "integer >= 1"));
    else if (key == "max_generations")
        config.max_generations = static_cast<int>(
            parse_int(key, value, 1, 1000000000, "integer >= 1"));
    else if (key == "seed")
        config.seed = parse_u64(key, value);
    else
        throw ConfigError("unknown key '" + std::string(key) + "'");
}

EvolutionConfig parse_config(
    std::string_view text,
    std::span<const std::pair<std::string, std::string>> overrides) {
    EvolutionConfig config = default_config();

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, eol - pos);
        ++line_no;
        pos = eol + 1;

        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("line " + std::to_string(line_no) +
                              ": expected 'key = value', got '" + std::string(line) + "'");
        apply_setting(config, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }

    for (const auto& [key, value] : overrides) apply_setting(config, key, value);

    if (auto problems = validate_config(config); !problems.empty()) {
        std::string msg = "invalid configuration: " + problems.front();
        for (std::size_t i = 1; i < problems.size(); ++i) msg += "; " + problems[i];
        throw ConfigError(msg);
    }
    return config;
}

} // namespace evoshapes
