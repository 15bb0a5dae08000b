#include <doctest.h>

#include "evoshapes/evolve.hpp"
#include "evoshapes/genome_io.hpp"
#include "evoshapes/raster.hpp"
#include "evoshapes/rng.hpp"

using namespace evoshapes;

namespace {

const CanvasDims kCanvas{32, 32};

ImageBuffer gradient_target(CanvasDims dims = kCanvas) {
    ImageBuffer img(dims);
    for (int y = 0; y < dims.height; ++y)
        for (int x = 0; x < dims.width; ++x)
            img.at(x, y) = {static_cast<std::uint8_t>(255 * x / (dims.width - 1)),
                            static_cast<std::uint8_t>(255 * y / (dims.height - 1)),
                            64};
    return img;
}

EvolutionConfig tiny_config() {
    EvolutionConfig config;
    config.composition = {4, 2, 0, 3};
    config.max_generations = 50;
    config.save_rate = 25;
    config.seed = 7;
    return config;
}

} // namespace

TEST_CASE("crossover combines geometry from main with color from secondary") {
    RandomStream rng(1);
    const Genome main = random_genome({2, 1, 1, 3}, kCanvas, rng);
    const Genome secondary = random_genome({2, 1, 1, 3}, kCanvas, rng);

    const Genome child = crossover(main, secondary);
    REQUIRE(child.genes.size() == main.genes.size());
    for (std::size_t i = 0; i < child.genes.size(); ++i) {
        CHECK(child.genes[i].geometry == main.genes[i].geometry);
        CHECK(child.genes[i].color == secondary.genes[i].color);
        CHECK(child.genes[i].alpha == secondary.genes[i].alpha);
    }
}

TEST_CASE("self-crossover is the identity") {
    RandomStream rng(2);
    const Genome g = random_genome({3, 1, 1, 4}, kCanvas, rng);
    CHECK(crossover(g, g) == g);
}

TEST_CASE("crossover output is valid for random pairs") {
    RandomStream rng(3);
    for (int i = 0; i < 1000; ++i) {
        const CanvasDims canvas{rng.uniform_int(2, 24), rng.uniform_int(2, 24)};
        const GenomeComposition comp{rng.uniform_int(0, 2), rng.uniform_int(0, 2),
                                     rng.uniform_int(1, 2), rng.uniform_int(3, 5)};
        const Genome a = random_genome(comp, canvas, rng);
        const Genome b = random_genome(comp, canvas, rng);
        CHECK(validate_genome(crossover(a, b)).empty());
    }
}

TEST_CASE("crossover rejects mismatched genomes") {
    RandomStream rng(4);
    const Genome a = random_genome({2, 0, 0, 3}, kCanvas, rng);
    const Genome b = random_genome({1, 1, 0, 3}, kCanvas, rng);
    CHECK_THROWS_AS(crossover(a, b), std::invalid_argument);
    const Genome c = random_genome({2, 0, 0, 3}, {16, 16}, rng);
    CHECK_THROWS_AS(crossover(a, c), std::invalid_argument);
    const Genome d = random_genome({2, 0, 0, 5}, kCanvas, rng);
    CHECK_THROWS_AS(crossover(a, d), std::invalid_argument);
}

TEST_CASE("produce_child without crossover mutates the parent only") {
    RandomStream rng(5);
    EvolutionConfig config = tiny_config();
    const Genome parent_genome = random_genome(config.composition, kCanvas, rng);
    const Individual parent{parent_genome, {0, 0.0}};
    const std::vector<Individual> population{parent};

    RandomStream a(9);
    const Genome child = produce_child(parent, population, 0, config, 3, a);
    RandomStream b(9);
    const Genome expected = mutate_genome(parent_genome, config.mutation, 2,
                                          config.max_generations, b);
    CHECK(child == expected);
}

TEST_CASE("crossover with a single parent behaves as crossover off") {
    RandomStream rng(6);
    EvolutionConfig config = tiny_config();
    const Genome genome = random_genome(config.composition, kCanvas, rng);
    const Individual parent{genome, {0, 0.0}};
    const std::vector<Individual> population{parent};

    config.crossover_enabled = false;
    RandomStream a(11);
    const Genome off = produce_child(parent, population, 0, config, 5, a);
    config.crossover_enabled = true;
    RandomStream b(11);
    const Genome on = produce_child(parent, population, 0, config, 5, b);
    CHECK(off == on);
}

TEST_CASE("produce_child is deterministic with two parents and crossover") {
    RandomStream rng(7);
    EvolutionConfig config = tiny_config();
    config.number_of_parents = 2;
    config.crossover_enabled = true;
    const std::vector<Individual> population{
        {random_genome(config.composition, kCanvas, rng), {0, 0.0}},
        {random_genome(config.composition, kCanvas, rng), {0, 0.0}},
    };
    RandomStream a(13), b(13);
    CHECK(produce_child(population[0], population, 0, config, 2, a) ==
          produce_child(population[0], population, 0, config, 2, b));
}

TEST_CASE("step replaces a parent only with a strictly better child") {
    const ImageBuffer target = gradient_target();
    EvolutionConfig config = tiny_config();

    // A no-op mutation config produces children identical to their parent:
    // equal score, so the parent must be retained.
    config.mutation.mutation_probability = 0.0;
    RandomStream rng(8);
    Genome genome = random_genome(config.composition, kCanvas, rng);
    const FitnessScore s = score_image(render(genome), target);
    const std::vector<Individual> population{{genome, s}};
    const auto next = step(population, target, config, 1);
    REQUIRE(next.size() == 1);
    CHECK(next[0].genome == genome);
    CHECK(next[0].score == s);

    // With real mutation, every accepted replacement is strictly better.
    config.mutation.mutation_probability = 0.3;
    std::vector<Individual> pop = population;
    std::uint64_t prev = pop[0].score.absolute;
    for (int g = 1; g <= 200; ++g) {
        pop = step(pop, target, config, g);
        CHECK(pop[0].score.absolute <= prev);
        // The stored score always matches a fresh render.
        prev = pop[0].score.absolute;
    }
    CHECK(absolute_score(render(pop[0].genome), target) == prev);
}

TEST_CASE("a run performs exactly parents * children * generations evaluations") {
    const ImageBuffer target = gradient_target();
    EvolutionConfig config = tiny_config();
    config.number_of_parents = 2;
    config.children_per_parent = 3;
    config.max_generations = 5;
    const RunResult result = run(config, target);
    CHECK(result.stats.child_evaluations == 2ull * 3ull * 5ull);
    CHECK(result.stats.records.size() == 5);
}

TEST_CASE("run emits snapshots at the save rate and the final generation") {
    const ImageBuffer target = gradient_target();
    EvolutionConfig config = tiny_config();
    config.max_generations = 10;
    config.save_rate = 4;

    std::vector<std::pair<int, int>> snapshots;
    RunSinks sinks;
    sinks.snapshot = [&](int generation, int parent, const Genome& genome,
                         const ImageBuffer& rendered) {
        snapshots.emplace_back(generation, parent);
        CHECK(rendered == render(genome));
    };
    run(config, target, sinks);
    CHECK(snapshots == std::vector<std::pair<int, int>>{{4, 0}, {8, 0}, {10, 0}});
}

TEST_CASE("single step with save_rate 1 snapshots generation 1") {
    const ImageBuffer target = gradient_target();
    EvolutionConfig config = tiny_config();
    config.max_generations = 1;
    config.save_rate = 1;
    int calls = 0;
    RunSinks sinks;
    sinks.snapshot = [&](int generation, int, const Genome&, const ImageBuffer&) {
        CHECK(generation == 1);
        ++calls;
    };
    run(config, target, sinks);
    CHECK(calls == 1);
}

TEST_CASE("runs are deterministic in (seed, config, target)") {
    const ImageBuffer target = gradient_target();
    EvolutionConfig config = tiny_config();
    config.number_of_parents = 2;
    config.crossover_enabled = true;

    const RunResult a = run(config, target);
    const RunResult b = run(config, target);
    REQUIRE(a.population.size() == b.population.size());
    for (std::size_t i = 0; i < a.population.size(); ++i) {
        CHECK(a.population[i].genome == b.population[i].genome);
        CHECK(a.population[i].score == b.population[i].score);
        CHECK(serialize_genome(a.population[i].genome) ==
              serialize_genome(b.population[i].genome));
    }
    REQUIRE(a.stats.records.size() == b.stats.records.size());
    for (std::size_t g = 0; g < a.stats.records.size(); ++g) {
        CHECK(a.stats.records[g].best_absolute == b.stats.records[g].best_absolute);
        CHECK(a.stats.records[g].parent_scores == b.stats.records[g].parent_scores);
    }
}

TEST_CASE("best score never increases and snapshots rescore exactly") {
    const ImageBuffer target = gradient_target();
    EvolutionConfig config = tiny_config();
    config.max_generations = 120;
    config.save_rate = 30;

    std::vector<std::pair<int, Genome>> saved;
    RunSinks sinks;
    sinks.snapshot = [&](int generation, int, const Genome& genome, const ImageBuffer&) {
        saved.emplace_back(generation, genome);
    };
    const RunResult result = run(config, target, sinks);

    std::uint64_t prev = result.stats.records.front().best_absolute;
    for (const GenerationRecord& rec : result.stats.records) {
        CHECK(rec.best_absolute <= prev);
        prev = rec.best_absolute;
    }
    for (const auto& [generation, genome] : saved) {
        const std::uint64_t rescored = absolute_score(render(genome), target);
        CHECK(rescored == result.stats.records[generation - 1].parent_scores[0]);
    }
}

TEST_CASE("run validates its configuration") {
    const ImageBuffer target = gradient_target();
    EvolutionConfig config = tiny_config();
    config.number_of_parents = 0;
    CHECK_THROWS_AS(run(config, target), std::invalid_argument);
}
