#ifndef EVOSHAPES_GENOME_IO_HPP
#define EVOSHAPES_GENOME_IO_HPP

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "evoshapes/gene.hpp"

namespace evoshapes {

// Malformed document: bad syntax, wrong types, unknown shape kind. The
// position is a byte offset for syntax errors and a JSON path otherwise.
class GenomeParseError : public std::runtime_error {
public:
    explicit GenomeParseError(const std::string& what) : std::runtime_error(what) {}
};

// Well-formed document whose content breaks a genome invariant.
class GenomeValidationError : public std::runtime_error {
public:
    GenomeValidationError(const std::string& what, std::vector<Violation> violations)
        : std::runtime_error(what), violations_(std::move(violations)) {}
    const std::vector<Violation>& violations() const { return violations_; }

private:
    std::vector<Violation> violations_;
};

// Genome file format, version 1: a JSON document with `version`, `canvas`
// {width, height} and `genes` (ordered array; array order is render order).
// Alpha survives the round trip exactly.
std::string serialize_genome(const Genome& genome);
Genome deserialize_genome(std::string_view text);

Genome load_genome(const std::filesystem::path& path);
void save_genome(const Genome& genome, const std::filesystem::path& path);

} // namespace evoshapes

#endif
