#include "evoshapes/evolve.hpp"

#include <chrono>
#include <stdexcept>
#include <string>

#include "evoshapes/raster.hpp"

namespace evoshapes {

std::vector<std::string> validate_config(const EvolutionConfig& config) {
    std::vector<std::string> out;
    auto check = [&out](bool ok, const char* msg) {
        if (!ok) out.emplace_back(msg);
    };
    check(config.number_of_parents >= 1 && config.number_of_parents <= 100,
          "number_of_parents: expected integer in [1, 100]");
    check(config.children_per_parent >= 1 && config.children_per_parent <= 100,
          "children_per_parent: expected integer in [1, 100]");
    check(config.composition.polygons >= 0, "polygons: expected integer >= 0");
    check(config.composition.circles >= 0, "circles: expected integer >= 0");
    check(config.composition.lines >= 0, "lines: expected integer >= 0");
    check(config.composition.total() >= 1,
          "polygons + circles + lines: genome needs at least one gene");
    check(config.composition.vertices_per_polygon >= 3,
          "vertices: expected integer >= 3");
    check(config.mutation.mutation_probability >= 0.0 &&
              config.mutation.mutation_probability <= 1.0,
          "mutation_probability: expected real in [0, 1]");
    check(config.mutation.soft_mutation_rate > 0.0 &&
              config.mutation.soft_mutation_rate <= 1.0,
          "soft_mutation_rate: expected real in (0, 1]");
    check(config.mutation.genetic_restructure_rate >= 0.0 &&
              config.mutation.genetic_restructure_rate <= 1.0,
          "genetic_restructure_rate: expected real in [0, 1]");
    check(config.mutation.hybrid_soft_generations >= 0,
          "hybrid_soft: expected integer >= 0");
    check(config.mutation.hybrid_medium_generations >= 0,
          "hybrid_medium: expected integer >= 0");
    check(config.save_rate >= 1, "save_rate: expected integer >= 1");
    check(config.max_generations >= 1, "max_generations: expected integer >= 1");
    return out;
}

Genome crossover(const Genome& main, const Genome& secondary) {
    if (main.canvas != secondary.canvas)
        throw std::invalid_argument("crossover: canvas mismatch");
    if (main.genes.size() != secondary.genes.size())
        throw std::invalid_argument("crossover: genome length mismatch");

    Genome child = main;
    for (std::size_t i = 0; i < child.genes.size(); ++i) {
        const Gene& other = secondary.genes[i];
        if (child.genes[i].geometry.index() != other.geometry.index())
            throw std::invalid_argument("crossover: gene kind mismatch at index " +
                                        std::to_string(i));
        if (const auto* poly = std::get_if<PolygonGeometry>(&child.genes[i].geometry);
            poly && poly->vertices.size() !=
                        std::get<PolygonGeometry>(other.geometry).vertices.size())
            throw std::invalid_argument("crossover: vertex count mismatch at index " +
                                        std::to_string(i));
        child.genes[i].color = other.color;
        child.genes[i].alpha = other.alpha;
    }
    return child;
}

Genome produce_child(const Individual& parent, const std::vector<Individual>& population,
                     int parent_index, const EvolutionConfig& config, int generation,
                     RandomStream& rng) {
    const int n = static_cast<int>(population.size());
    Genome base = parent.genome;
    if (config.crossover_enabled && n >= 2) {
        int other = rng.uniform_int(0, n - 2);
        if (other >= parent_index) ++other;
        base = crossover(parent.genome, population[other].genome);
    }
    // Mutation schedules are 0-based; the run's generation counter is 1-based.
    return mutate_genome(base, config.mutation, generation - 1,
                         config.max_generations, rng);
}

std::vector<Individual> step(const std::vector<Individual>& population,
                             const ImageBuffer& target, const EvolutionConfig& config,
                             int generation, std::uint64_t* evaluations) {
    std::vector<Individual> next;
    next.reserve(population.size());

    for (int p = 0; p < static_cast<int>(population.size()); ++p) {
        const Individual& parent = population[p];
        RandomStream rng = RandomStream::derive(
            config.seed, static_cast<std::uint64_t>(generation),
            static_cast<std::uint64_t>(p));

        Individual best;
        bool have_child = false;
        for (int c = 0; c < config.children_per_parent; ++c) {
            Genome child = produce_child(parent, population, p, config, generation, rng);
            FitnessScore s = score_image(render(child), target);
            if (evaluations) ++*evaluations;
            if (!have_child || s.absolute < best.score.absolute) {
                best = Individual{std::move(child), s};
                have_child = true;
            }
        }
        next.push_back(best.score.absolute < parent.score.absolute ? std::move(best)
                                                                   : parent);
    }
    return next;
}

RunResult run(const EvolutionConfig& config, const ImageBuffer& target,
              const RunSinks& sinks) {
    if (auto problems = validate_config(config); !problems.empty())
        throw std::invalid_argument("run: invalid configuration: " + problems.front());

    const auto t0 = std::chrono::steady_clock::now();
    const CanvasDims canvas = target.dims();

    RunResult result;
    result.stats.canvas = canvas;
    result.population.reserve(config.number_of_parents);
    for (int p = 0; p < config.number_of_parents; ++p) {
        RandomStream rng =
            RandomStream::derive(config.seed, 0, static_cast<std::uint64_t>(p));
        Genome genome = random_genome(config.composition, canvas, rng);
        FitnessScore s = score_image(render(genome), target);
        result.population.push_back(Individual{std::move(genome), s});
    }

    result.stats.records.reserve(config.max_generations);
    for (int g = 1; g <= config.max_generations; ++g) {
        result.population = step(result.population, target, config, g,
                                 &result.stats.child_evaluations);

        GenerationRecord rec;
        rec.generation = g;
        rec.parent_scores.reserve(result.population.size());
        rec.best_absolute = result.population.front().score.absolute;
        for (const Individual& ind : result.population) {
            rec.parent_scores.push_back(ind.score.absolute);
            rec.best_absolute = std::min(rec.best_absolute, ind.score.absolute);
        }
        rec.best_relative = relative_score(rec.best_absolute, canvas);
        result.stats.records.push_back(std::move(rec));

        if (g % config.save_rate == 0 || g == config.max_generations) {
            if (sinks.snapshot)
                for (int p = 0; p < static_cast<int>(result.population.size()); ++p)
                    sinks.snapshot(g, p, result.population[p].genome,
                                   render(result.population[p].genome));
            if (sinks.progress) sinks.progress(result.stats.records.back());
        }
    }

    result.stats.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

} // namespace evoshapes
