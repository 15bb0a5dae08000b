#ifndef EVOSHAPES_EVOLVE_HPP
#define EVOSHAPES_EVOLVE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "evoshapes/fitness.hpp"
#include "evoshapes/gene.hpp"
#include "evoshapes/image.hpp"
#include "evoshapes/mutation.hpp"

namespace evoshapes {

struct EvolutionConfig {
    int number_of_parents = 1;      // [1, 100]
    int children_per_parent = 1;    // [1, 100]
    GenomeComposition composition{20, 0, 0, 3};
    MutationConfig mutation{};
    bool crossover_enabled = false;
    int save_rate = 1000;
    int max_generations = 10000;
    std::uint64_t seed = 1;

    bool operator==(const EvolutionConfig&) const = default;
};

// Returns one message per violated configuration bound; empty when valid.
std::vector<std::string> validate_config(const EvolutionConfig& config);

struct Individual {
    Genome genome;
    FitnessScore score;
};

struct GenerationRecord {
    int generation = 0;
    std::uint64_t best_absolute = 0;
    double best_relative = 0.0;
    std::vector<std::uint64_t> parent_scores;
};

struct RunStats {
    std::vector<GenerationRecord> records;
    std::uint64_t child_evaluations = 0;
    double wall_seconds = 0.0;
    CanvasDims canvas{};
};

struct RunResult {
    RunStats stats;
    std::vector<Individual> population;
};

// Output callbacks; leave a member empty to skip that output.
struct RunSinks {
    // Called for every parent at each save point (generations divisible by
    // save_rate plus the final generation).
    std::function<void(int generation, int parent_index, const Genome& genome,
                       const ImageBuffer& rendered)>
        snapshot;
    // Called once per save point with that generation's record.
    std::function<void(const GenerationRecord&)> progress;
};

// Child gene i combines the main parent's geometry with the secondary
// parent's color and alpha. Throws std::invalid_argument when the genomes
// do not share canvas and composition.
Genome crossover(const Genome& main, const Genome& secondary);

// Crossover (when enabled and a second parent exists; the partner is
// redrawn uniformly per child) followed by mutation.
Genome produce_child(const Individual& parent, const std::vector<Individual>& population,
                     int parent_index, const EvolutionConfig& config, int generation,
                     RandomStream& rng);

// One synchronous generation: every parent breeds children_per_parent
// children from its own derived random stream; the best child (ties to the
// lowest child index) replaces the parent only when strictly better.
// `evaluations`, when given, accumulates the number of child renders.
std::vector<Individual> step(const std::vector<Individual>& population,
                             const ImageBuffer& target, const EvolutionConfig& config,
                             int generation, std::uint64_t* evaluations = nullptr);

// Full run: seeded random initialization, max_generations steps, snapshots
// at the save rate, one stats record per generation. Deterministic in
// (seed, config, target).
RunResult run(const EvolutionConfig& config, const ImageBuffer& target,
              const RunSinks& sinks = {});

} // namespace evoshapes

#endif
