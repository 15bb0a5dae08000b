#include "evoshapes/gene.hpp"

#include <stdexcept>

namespace evoshapes {

const char* shape_kind_name(ShapeKind kind) {
    switch (kind) {
        case ShapeKind::Polygon: return "polygon";
        case ShapeKind::Circle: return "circle";
        case ShapeKind::Line: return "line";
    }
    return "?";
}

namespace {

Point random_point(CanvasDims canvas, RandomStream& rng) {
    Point p;
    p.x = rng.uniform_int(0, canvas.width - 1);
    p.y = rng.uniform_int(0, canvas.height - 1);
    return p;
}

} // namespace

Gene random_gene(ShapeKind kind, const GenomeComposition& composition,
                 CanvasDims canvas, RandomStream& rng) {
    if (!canvas.valid()) throw std::invalid_argument("random_gene: invalid canvas");

    Gene gene;
    gene.color.r = static_cast<std::uint8_t>(rng.uniform_int(0, 255));
    gene.color.g = static_cast<std::uint8_t>(rng.uniform_int(0, 255));
    gene.color.b = static_cast<std::uint8_t>(rng.uniform_int(0, 255));
    gene.alpha = rng.uniform_double();

    switch (kind) {
        case ShapeKind::Polygon: {
            PolygonGeometry poly;
            poly.vertices.reserve(composition.vertices_per_polygon);
            for (int i = 0; i < composition.vertices_per_polygon; ++i)
                poly.vertices.push_back(random_point(canvas, rng));
            gene.geometry = std::move(poly);
            break;
        }
        case ShapeKind::Circle: {
            CircleGeometry circle;
            circle.center = random_point(canvas, rng);
            circle.radius = rng.uniform_int(1, max_radius(canvas));
            gene.geometry = circle;
            break;
        }
        case ShapeKind::Line: {
            LineGeometry line;
            line.a = random_point(canvas, rng);
            line.b = random_point(canvas, rng);
            line.thickness = rng.uniform_int(1, max_thickness(canvas));
            gene.geometry = line;
            break;
        }
    }
    return gene;
}

Genome random_genome(const GenomeComposition& composition, CanvasDims canvas,
                     RandomStream& rng) {
    if (!composition.valid())
        throw std::invalid_argument("random_genome: composition must have at least "
                                    "one gene and >= 3 vertices per polygon");
    if (!canvas.valid()) throw std::invalid_argument("random_genome: invalid canvas");

    Genome genome;
    genome.canvas = canvas;
    genome.genes.reserve(composition.total());
    for (int i = 0; i < composition.polygons; ++i)
        genome.genes.push_back(random_gene(ShapeKind::Polygon, composition, canvas, rng));
    for (int i = 0; i < composition.circles; ++i)
        genome.genes.push_back(random_gene(ShapeKind::Circle, composition, canvas, rng));
    for (int i = 0; i < composition.lines; ++i)
        genome.genes.push_back(random_gene(ShapeKind::Line, composition, canvas, rng));
    return genome;
}

namespace {

void check_point(Point p, CanvasDims canvas, int gene_index, const std::string& field,
                 std::vector<Violation>& out) {
    if (p.x < 0 || p.x >= canvas.width)
        out.push_back({gene_index, field + ".x",
                       "x = " + std::to_string(p.x) + " outside [0, " +
                           std::to_string(canvas.width - 1) + "]"});
    if (p.y < 0 || p.y >= canvas.height)
        out.push_back({gene_index, field + ".y",
                       "y = " + std::to_string(p.y) + " outside [0, " +
                           std::to_string(canvas.height - 1) + "]"});
}

} // namespace

std::vector<Violation> validate_genome(const Genome& genome) {
    std::vector<Violation> out;
    if (genome.canvas.width < 1)
        out.push_back({-1, "canvas.width", "width must be >= 1"});
    if (genome.canvas.height < 1)
        out.push_back({-1, "canvas.height", "height must be >= 1"});
    if (!genome.canvas.valid()) return out;

    if (genome.genes.empty())
        out.push_back({-1, "genes", "genome must contain at least one gene"});

    const int rmax = max_radius(genome.canvas);
    const int tmax = max_thickness(genome.canvas);

    for (int i = 0; i < static_cast<int>(genome.genes.size()); ++i) {
        const Gene& gene = genome.genes[i];
        if (!(gene.alpha >= 0.0 && gene.alpha <= 1.0))
            out.push_back({i, "alpha",
                           "alpha = " + std::to_string(gene.alpha) + " outside [0, 1]"});

        if (const auto* poly = std::get_if<PolygonGeometry>(&gene.geometry)) {
            if (poly->vertices.size() < 3)
                out.push_back({i, "vertices", "polygon needs at least 3 vertices"});
            for (std::size_t v = 0; v < poly->vertices.size(); ++v)
                check_point(poly->vertices[v], genome.canvas, i,
                            "vertices[" + std::to_string(v) + "]", out);
        } else if (const auto* circle = std::get_if<CircleGeometry>(&gene.geometry)) {
            check_point(circle->center, genome.canvas, i, "center", out);
            if (circle->radius < 1 || circle->radius > rmax)
                out.push_back({i, "radius",
                               "radius = " + std::to_string(circle->radius) +
                                   " outside [1, " + std::to_string(rmax) + "]"});
        } else if (const auto* line = std::get_if<LineGeometry>(&gene.geometry)) {
            check_point(line->a, genome.canvas, i, "endpoints[0]", out);
            check_point(line->b, genome.canvas, i, "endpoints[1]", out);
            if (line->thickness < 1 || line->thickness > tmax)
                out.push_back({i, "thickness",
                               "thickness = " + std::to_string(line->thickness) +
                                   " outside [1, " + std::to_string(tmax) + "]"});
        }
    }
    return out;
}

GenomeComposition composition_of(const Genome& genome) {
    GenomeComposition comp;
    comp.vertices_per_polygon = 3;
    for (const Gene& gene : genome.genes) {
        switch (gene.kind()) {
            case ShapeKind::Polygon:
                if (comp.polygons == 0)
                    comp.vertices_per_polygon = static_cast<int>(
                        std::get<PolygonGeometry>(gene.geometry).vertices.size());
                ++comp.polygons;
                break;
            case ShapeKind::Circle: ++comp.circles; break;
            case ShapeKind::Line: ++comp.lines; break;
        }
    }
    return comp;
}

} // namespace evoshapes
