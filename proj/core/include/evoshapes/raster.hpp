#ifndef EVOSHAPES_RASTER_HPP
#define EVOSHAPES_RASTER_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "evoshapes/gene.hpp"
#include "evoshapes/geometry.hpp"
#include "evoshapes/image.hpp"

namespace evoshapes {

// A maximal run of covered pixels on one row; x range is inclusive.
struct RowSpan {
    int y = 0;
    int x0 = 0;
    int x1 = 0;
    bool operator==(const RowSpan&) const = default;
};

// Set of covered pixels, stored as canonical row spans (sorted by (y, x0),
// per row non-overlapping and non-adjacent). All pixels lie on the canvas.
class CoverageMask {
public:
    CoverageMask() = default;
    CoverageMask(CanvasDims dims, std::vector<RowSpan> spans);

    CanvasDims dims() const { return dims_; }
    const std::vector<RowSpan>& spans() const { return spans_; }

    bool contains(int x, int y) const;
    std::size_t pixel_count() const;

    template <typename F>
    void for_each_pixel(F&& f) const {
        for (const RowSpan& s : spans_)
            for (int x = s.x0; x <= s.x1; ++x) f(x, s.y);
    }

    bool operator==(const CoverageMask&) const = default;

private:
    CanvasDims dims_{};
    std::vector<RowSpan> spans_;
};

// Standard "over" operator against an opaque destination: each channel is
// round_half_away_from_zero(alpha*src + (1-alpha)*dst) in double precision,
// clamped to [0, 255].
Color blend_pixel(Color dst, Color src, double alpha);

// Pixel-center coverage: pixel (x, y) samples at (x+0.5, y+0.5). All three
// rasterizers are exact (integer arithmetic throughout) and clip to the
// canvas.

// Even-odd fill; centers exactly on an edge count as covered.
CoverageMask rasterize_polygon(std::span<const Point> vertices, CanvasDims dims);

// Covered iff distance from pixel center to the circle center <= radius + 0.5.
CoverageMask rasterize_circle(Point center, int radius, CanvasDims dims);

// Capsule with round caps: covered iff distance from pixel center to the
// closed segment [p0, p1] <= thickness / 2.
CoverageMask rasterize_line(Point p0, Point p1, int thickness, CanvasDims dims);

CoverageMask rasterize_gene(const Gene& gene, CanvasDims dims);

// Genotype-to-phenotype mapping: a black canvas, then each gene blended over
// it in genome order. Pure and deterministic.
ImageBuffer render(const Genome& genome);

} // namespace evoshapes

#endif
