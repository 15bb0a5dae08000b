#ifndef EVOSHAPES_CONFIG_HPP
#define EVOSHAPES_CONFIG_HPP

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "evoshapes/evolve.hpp"

namespace evoshapes {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// All defaults in one place: one parent, one child, 20 polygons with 3
// vertices, probability-mode mutation at 0.1, soft rate 0.1, no hybrid
// schedule, no restructure, no crossover, save every 1000th of 10000
// generations, seed 1.
EvolutionConfig default_config();

// Sets one configuration key from its text value. Throws ConfigError
// naming the key and its legal range on unknown keys, malformed values,
// and out-of-range values.
void apply_setting(EvolutionConfig& config, std::string_view key,
                   std::string_view value);

// Parses a flat `key = value` file (one setting per line, `#` comments).
// Unspecified keys keep their defaults; overrides win over file contents.
// The result is fully validated.
EvolutionConfig parse_config(
    std::string_view text,
    std::span<const std::pair<std::string, std::string>> overrides = {});

} // namespace evoshapes

#endif
