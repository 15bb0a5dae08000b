#ifndef EVOSHAPES_GENE_HPP
#define EVOSHAPES_GENE_HPP

#include <string>
#include <variant>
#include <vector>

#include "evoshapes/geometry.hpp"
#include "evoshapes/rng.hpp"

namespace evoshapes {

enum class ShapeKind { Polygon, Circle, Line };

const char* shape_kind_name(ShapeKind kind);

struct PolygonGeometry {
    std::vector<Point> vertices;
    bool operator==(const PolygonGeometry&) const = default;
};

struct CircleGeometry {
    Point center;
    int radius = 1;
    bool operator==(const CircleGeometry&) const = default;
};

struct LineGeometry {
    Point a;
    Point b;
    int thickness = 1;
    bool operator==(const LineGeometry&) const = default;
};

// One shape's heritable parameters. The geometry alternative determines the
// shape kind; variant index order matches ShapeKind.
struct Gene {
    Color color;
    double alpha = 0.0;
    std::variant<PolygonGeometry, CircleGeometry, LineGeometry> geometry;

    ShapeKind kind() const { return static_cast<ShapeKind>(geometry.index()); }
    bool operator==(const Gene&) const = default;
};

// Counts per shape kind, fixed for the lifetime of a run.
struct GenomeComposition {
    int polygons = 0;
    int circles = 0;
    int lines = 0;
    int vertices_per_polygon = 3;

    int total() const { return polygons + circles + lines; }
    bool valid() const {
        return polygons >= 0 && circles >= 0 && lines >= 0 && total() >= 1 &&
               vertices_per_polygon >= 3;
    }
    bool operator==(const GenomeComposition&) const = default;
};

// Ordered gene list plus the canvas it is defined on. Later genes render
// over earlier ones.
struct Genome {
    CanvasDims canvas;
    std::vector<Gene> genes;

    bool operator==(const Genome&) const = default;
};

struct Violation {
    int gene_index = -1; // -1 for genome-level violations
    std::string field;
    std::string message;
};

// Every parameter drawn uniformly from its legal range for the given canvas.
Gene random_gene(ShapeKind kind, const GenomeComposition& composition,
                 CanvasDims canvas, RandomStream& rng);

// Genes are generated polygons first, then circles, then lines, each block
// in generation order.
Genome random_genome(const GenomeComposition& composition, CanvasDims canvas,
                     RandomStream& rng);

// Empty result iff all invariants hold; violations are data, not errors.
std::vector<Violation> validate_genome(const Genome& genome);

// Counts the genome's kinds and reads the polygon vertex count (3 when the
// genome has no polygons).
GenomeComposition composition_of(const Genome& genome);

} // namespace evoshapes

#endif
