#ifndef EVOSHAPES_MUTATION_HPP
#define EVOSHAPES_MUTATION_HPP

#include <vector>

#include "evoshapes/gene.hpp"
#include "evoshapes/rng.hpp"

namespace evoshapes {

struct MutationConfig {
    double mutation_probability = 0.1;
    double soft_mutation_rate = 0.1;
    int hybrid_soft_generations = 0;
    int hybrid_medium_generations = 0;
    bool chunk_mode = false;
    double genetic_restructure_rate = 0.0;
    bool gene_swap_enabled = false;

    bool operator==(const MutationConfig&) const = default;
};

enum class MutationOp { Soft, Medium };

// One parameter group per mutation event, chosen uniformly among color,
// alpha, one geometry point, and (circle/line only) the kind-specific
// scalar. Soft nudges the affected scalars by at most rate * span and
// clamps; medium redraws them over their full legal range.
Gene soft_mutate_gene(const Gene& gene, double rate, CanvasDims canvas,
                      RandomStream& rng);
Gene medium_mutate_gene(const Gene& gene, CanvasDims canvas, RandomStream& rng);

// Probability mode: each index independently with the given probability,
// no duplicates. Chunk mode: exactly max(1, round(probability * length))
// draws with replacement, so an index may receive several mutations.
std::vector<int> select_mutation_targets(int genome_length, double probability,
                                         bool chunk_mode, RandomStream& rng);

// Deterministic hybrid schedule over a 0-based generation index:
// hybrid_soft generations of Soft, then hybrid_medium of Medium, repeating.
// Both zero means always Soft; soft zero with medium nonzero means always
// Medium.
MutationOp operation_for_generation(int generation, const MutationConfig& config);

// Applies, in order: the early-run genetic restructure phase (while
// generation < max_generations / 10, each gene gets a medium mutation with
// probability genetic_restructure_rate), the scheduled operation on the
// selected targets, and the optional gene swap. The input is not modified.
Genome mutate_genome(const Genome& genome, const MutationConfig& config,
                     int generation, int max_generations, RandomStream& rng);

} // namespace evoshapes

#endif
