#include "evoshapes/mutation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace evoshapes {

namespace {

enum Group { kColor = 0, kAlpha = 1, kPoint = 2, kScalar = 3 };

int group_count(const Gene& gene) {
    return gene.kind() == ShapeKind::Polygon ? 3 : 4;
}

// Bounded integer nudge: at most rate * span in magnitude, truncated toward
// zero so the soft-locality bound survives the integer cast.
int soft_delta(double rate, double span, RandomStream& rng) {
    return static_cast<int>(std::trunc(rng.uniform_real(-rate * span, rate * span)));
}

int clamp_add(int value, int delta, int lo, int hi) {
    return std::clamp(value + delta, lo, hi);
}

void soft_point(Point& p, double rate, CanvasDims canvas, RandomStream& rng) {
    p.x = clamp_add(p.x, soft_delta(rate, canvas.width, rng), 0, canvas.width - 1);
    p.y = clamp_add(p.y, soft_delta(rate, canvas.height, rng), 0, canvas.height - 1);
}

Point fresh_point(CanvasDims canvas, RandomStream& rng) {
    return Point{rng.uniform_int(0, canvas.width - 1),
                 rng.uniform_int(0, canvas.height - 1)};
}

Point* pick_point(Gene& gene, RandomStream& rng) {
    if (auto* poly = std::get_if<PolygonGeometry>(&gene.geometry)) {
        const int i = rng.uniform_int(0, static_cast<int>(poly->vertices.size()) - 1);
        return &poly->vertices[i];
    }
    if (auto* circle = std::get_if<CircleGeometry>(&gene.geometry))
        return &circle->center;
    auto& line = std::get<LineGeometry>(gene.geometry);
    return rng.uniform_int(0, 1) == 0 ? &line.a : &line.b;
}

} // namespace

Gene soft_mutate_gene(const Gene& gene, double rate, CanvasDims canvas,
                      RandomStream& rng) {
    if (!(rate > 0.0 && rate <= 1.0))
        throw std::invalid_argument("soft_mutate_gene: rate outside (0, 1]");

    Gene out = gene;
    switch (rng.uniform_int(0, group_count(out) - 1)) {
        case kColor:
            out.color.r = static_cast<std::uint8_t>(
                clamp_add(out.color.r, soft_delta(rate, 256.0, rng), 0, 255));
            out.color.g = static_cast<std::uint8_t>(
                clamp_add(out.color.g, soft_delta(rate, 256.0, rng), 0, 255));
            out.color.b = static_cast<std::uint8_t>(
                clamp_add(out.color.b, soft_delta(rate, 256.0, rng), 0, 255));
            break;
        case kAlpha:
            out.alpha = std::clamp(out.alpha + rng.uniform_real(-rate, rate), 0.0, 1.0);
            break;
        case kPoint:
            soft_point(*pick_point(out, rng), rate, canvas, rng);
            break;
        case kScalar:
            if (auto* circle = std::get_if<CircleGeometry>(&out.geometry)) {
                const int hi = max_radius(canvas);
                circle->radius = clamp_add(
                    circle->radius, soft_delta(rate, hi - 1, rng), 1, hi);
            } else {
                auto& line = std::get<LineGeometry>(out.geometry);
                const int hi = max_thickness(canvas);
                line.thickness = clamp_add(
                    line.thickness, soft_delta(rate, hi - 1, rng), 1, hi);
            }
            break;
    }
    return out;
}

Gene medium_mutate_gene(const Gene& gene, CanvasDims canvas, RandomStream& rng) {
    Gene out = gene;
    switch (rng.uniform_int(0, group_count(out) - 1)) {
        case kColor:
            out.color.r = static_cast<std::uint8_t>(rng.uniform_int(0, 255));
            out.color.g = static_cast<std::uint8_t>(rng.uniform_int(0, 255));
            out.color.b = static_cast<std::uint8_t>(rng.uniform_int(0, 255));
            break;
        case kAlpha:
            out.alpha = rng.uniform_double();
            break;
        case kPoint:
            *pick_point(out, rng) = fresh_point(canvas, rng);
            break;
        case kScalar:
            if (auto* circle = std::get_if<CircleGeometry>(&out.geometry))
                circle->radius = rng.uniform_int(1, max_radius(canvas));
            else
                std::get<LineGeometry>(out.geometry).thickness =
                    rng.uniform_int(1, max_thickness(canvas));
            break;
    }
    return out;
}

std::vector<int> select_mutation_targets(int genome_length, double probability,
                                         bool chunk_mode, RandomStream& rng) {
    if (genome_length < 1)
        throw std::invalid_argument("select_mutation_targets: empty genome");
    if (!(probability >= 0.0 && probability <= 1.0))
        throw std::invalid_argument("select_mutation_targets: probability outside [0, 1]");

    std::vector<int> targets;
    if (chunk_mode) {
        const long count =
            std::max(1l, std::lround(probability * genome_length));
        targets.reserve(static_cast<std::size_t>(count));
        for (long i = 0; i < count; ++i)
            targets.push_back(rng.uniform_int(0, genome_length - 1));
    } else {
        for (int i = 0; i < genome_length; ++i)
            if (rng.bernoulli(probability)) targets.push_back(i);
    }
    return targets;
}

MutationOp operation_for_generation(int generation, const MutationConfig& config) {
    if (generation < 0)
        throw std::invalid_argument("operation_for_generation: negative generation");
    const int soft = config.hybrid_soft_generations;
    const int medium = config.hybrid_medium_generations;
    if (medium == 0) return MutationOp::Soft;
    if (soft == 0) return MutationOp::Medium;
    return generation % (soft + medium) < soft ? MutationOp::Soft : MutationOp::Medium;
}

Genome mutate_genome(const Genome& genome, const MutationConfig& config,
                     int generation, int max_generations, RandomStream& rng) {
    Genome out = genome;

    // Early-run restructure: first tenth of the run, full-redraw mutations.
    if (config.genetic_restructure_rate > 0.0 &&
        static_cast<std::int64_t>(generation) * 10 < max_generations) {
        for (Gene& gene : out.genes)
            if (rng.bernoulli(config.genetic_restructure_rate))
                gene = medium_mutate_gene(gene, out.canvas, rng);
    }

    const MutationOp op = operation_for_generation(generation, config);
    for (int index : select_mutation_targets(static_cast<int>(out.genes.size()),
                                             config.mutation_probability,
                                             config.chunk_mode, rng)) {
        Gene& gene = out.genes[index];
        gene = op == MutationOp::Soft
                   ? soft_mutate_gene(gene, config.soft_mutation_rate, out.canvas, rng)
                   : medium_mutate_gene(gene, out.canvas, rng);
    }

    if (config.gene_swap_enabled && rng.bernoulli(config.mutation_probability)) {
        const int n = static_cast<int>(out.genes.size());
        const int i = rng.uniform_int(0, n - 1);
        const int j = rng.uniform_int(0, n - 1);
        if (i != j) std::swap(out.genes[i], out.genes[j]);
    }
    return out;
}

} // namespace evoshapes
