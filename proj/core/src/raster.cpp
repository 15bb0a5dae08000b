#include "evoshapes/raster.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace evoshapes {

namespace {

// All coverage tests run in doubled integer coordinates: pixel (x, y) has
// its center at (2x+1, 2y+1), shape-defining points sit at (2px, 2py).
// Distances double as well. This keeps every comparison exact.

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    // b > 0
    return a >= 0 ? a / b : -((-a + b - 1) / b);
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    // b > 0
    return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

std::int64_t isqrt(std::int64_t v) {
    if (v < 0) return -1;
    auto m = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
    while (m > 0 && m * m > v) --m;
    while ((m + 1) * (m + 1) <= v) ++m;
    return m;
}

// Emits spans row-monotonically, clips to the canvas, and merges runs that
// touch or overlap so no pixel appears twice.
class SpanSink {
public:
    SpanSink(CanvasDims dims, std::vector<RowSpan>& out) : dims_(dims), out_(out) {}

    void emit(int y, std::int64_t x0, std::int64_t x1) {
        if (y < 0 || y >= dims_.height) return;
        x0 = std::max<std::int64_t>(x0, 0);
        x1 = std::min<std::int64_t>(x1, dims_.width - 1);
        if (x0 > x1) return;
        if (!out_.empty()) {
            RowSpan& last = out_.back();
            if (last.y == y && x0 <= static_cast<std::int64_t>(last.x1) + 1) {
                last.x1 = std::max(last.x1, static_cast<int>(x1));
                return;
            }
        }
        out_.push_back(RowSpan{y, static_cast<int>(x0), static_cast<int>(x1)});
    }

private:
    CanvasDims dims_;
    std::vector<RowSpan>& out_;
};

void require_on_canvas(Point p, CanvasDims dims, const char* what) {
    if (!on_canvas(p, dims))
        throw std::invalid_argument(std::string(what) + ": point off canvas");
}

// Scanline even-odd fill. A row's sample line Y = 2y+1 is odd while vertex
// coordinates are even, so it never passes through a vertex and every
// non-horizontal edge either properly crosses it or misses it. Crossing
// abscissae are kept as exact rationals num/den (den > 0).
void polygon_spans(std::span<const Point> verts, CanvasDims dims,
                   std::vector<RowSpan>& out) {
    const std::size_t n = verts.size();
    SpanSink sink(dims, out);

    int min_vy = verts[0].y, max_vy = verts[0].y;
    for (Point v : verts) {
        min_vy = std::min(min_vy, v.y);
        max_vy = std::max(max_vy, v.y);
    }

    struct Crossing {
        std::int64_t num, den;
    };
    std::vector<Crossing> crossings;

    const int y_begin = std::max(0, min_vy);
    const int y_end = std::min(dims.height - 1, max_vy - 1);
    for (int y = y_begin; y <= y_end; ++y) {
        const std::int64_t Y = 2 * static_cast<std::int64_t>(y) + 1;
        crossings.clear();
        for (std::size_t i = 0; i < n; ++i) {
            const Point a = verts[i];
            const Point b = verts[(i + 1) % n];
            const std::int64_t ay = 2 * static_cast<std::int64_t>(a.y);
            const std::int64_t by = 2 * static_cast<std::int64_t>(b.y);
            if ((ay < Y) == (by < Y)) continue;
            const std::int64_t ax = 2 * static_cast<std::int64_t>(a.x);
            const std::int64_t bx = 2 * static_cast<std::int64_t>(b.x);
            std::int64_t num = ax * (by - ay) + (Y - ay) * (bx - ax);
            std::int64_t den = by - ay;
            if (den < 0) {
                num = -num;
                den = -den;
            }
            crossings.push_back({num, den});
        }
        std::sort(crossings.begin(), crossings.end(),
                  [](const Crossing& l, const Crossing& r) {
                      return l.num * r.den < r.num * l.den;
                  });
        // Crossings pair up; centers between a pair are strictly inside and
        // centers exactly at a crossing lie on an edge, so spans include
        // both endpoints.
        for (std::size_t k = 0; k + 1 < crossings.size(); k += 2) {
            const Crossing s = crossings[k];
            const Crossing e = crossings[k + 1];
            const std::int64_t x_lo = ceil_div(s.num - s.den, 2 * s.den);
            const std::int64_t x_hi = floor_div(e.num - e.den, 2 * e.den);
            sink.emit(y, x_lo, x_hi);
        }
    }
}

void circle_spans(Point center, int radius, CanvasDims dims,
                  std::vector<RowSpan>& out) {
    SpanSink sink(dims, out);
    const std::int64_t cx2 = 2 * static_cast<std::int64_t>(center.x);
    const std::int64_t cy2 = 2 * static_cast<std::int64_t>(center.y);
    const std::int64_t rr = 2 * static_cast<std::int64_t>(radius) + 1;

    const int y_begin = std::max(0, center.y - radius - 1);
    const int y_end = std::min(dims.height - 1, center.y + radius);
    for (int y = y_begin; y <= y_end; ++y) {
        const std::int64_t dy = 2 * static_cast<std::int64_t>(y) + 1 - cy2;
        const std::int64_t k = rr * rr - dy * dy;
        if (k < 0) continue;
        const std::int64_t m = isqrt(k);
        sink.emit(y, ceil_div(cx2 - 1 - m, 2), floor_div(cx2 - 1 + m, 2));
    }
}

struct Capsule {
    std::int64_t ax, ay, bx, by; // doubled endpoints
    std::int64_t t;              // doubled radius = thickness

    bool covers(std::int64_t X, std::int64_t Y) const {
        const std::int64_t wx = X - ax, wy = Y - ay;
        const std::int64_t vx = bx - ax, vy = by - ay;
        const std::int64_t t2 = t * t;
        const std::int64_t vv = vx * vx + vy * vy;
        if (vv == 0) return wx * wx + wy * wy <= t2;
        const std::int64_t proj = wx * vx + wy * vy;
        if (proj <= 0) return wx * wx + wy * wy <= t2;
        if (proj >= vv) {
            const std::int64_t ux = X - bx, uy = Y - by;
            return ux * ux + uy * uy <= t2;
        }
        const __int128 lhs =
            static_cast<__int128>(wx * wx + wy * wy) * vv -
            static_cast<__int128>(proj) * proj;
        return lhs <= static_cast<__int128>(t2) * vv;
    }
};

// A capsule is convex, so its covered pixels on one row form a single run.
// A seed pixel is found near the projection of the row onto the segment,
// then both ends of the run are located by binary search on the exact test.
void line_spans(Point p0, Point p1, int thickness, CanvasDims dims,
                std::vector<RowSpan>& out) {
    SpanSink sink(dims, out);
    const Capsule cap{2 * static_cast<std::int64_t>(p0.x),
                      2 * static_cast<std::int64_t>(p0.y),
                      2 * static_cast<std::int64_t>(p1.x),
                      2 * static_cast<std::int64_t>(p1.y),
                      static_cast<std::int64_t>(thickness)};

    const int y_begin =
        std::max(0, std::min(p0.y, p1.y) - (thickness + 1) / 2 - 1);
    const int y_end =
        std::min(dims.height - 1, std::max(p0.y, p1.y) + (thickness + 1) / 2 + 1);
    const double vx = static_cast<double>(cap.bx - cap.ax);
    const double vy = static_cast<double>(cap.by - cap.ay);

    for (int y = y_begin; y <= y_end; ++y) {
        const std::int64_t Y = 2 * static_cast<std::int64_t>(y) + 1;
        double s = 0.0;
        if (vy != 0.0) s = std::clamp((static_cast<double>(Y) - cap.ay) / vy, 0.0, 1.0);
        const double x_near = (cap.ax + s * vx - 1.0) / 2.0;

        int seed = -1;
        const auto mid = static_cast<std::int64_t>(std::floor(x_near));
        for (std::int64_t c = mid - 1; c <= mid + 1; ++c) {
            const std::int64_t x = std::clamp<std::int64_t>(c, 0, dims.width - 1);
            if (cap.covers(2 * x + 1, Y)) {
                seed = static_cast<int>(x);
                break;
            }
        }
        if (seed < 0) continue;

        int lo = 0, hi = seed;
        while (lo < hi) {
            const int m = lo + (hi - lo) / 2;
            if (cap.covers(2 * static_cast<std::int64_t>(m) + 1, Y))
                hi = m;
            else
                lo = m + 1;
        }
        const int left = lo;
        lo = seed;
        hi = dims.width - 1;
        while (lo < hi) {
            const int m = lo + (hi - lo + 1) / 2;
            if (cap.covers(2 * static_cast<std::int64_t>(m) + 1, Y))
                lo = m;
            else
                hi = m - 1;
        }
        sink.emit(y, left, lo);
    }
}

void gene_spans(const Gene& gene, CanvasDims dims, std::vector<RowSpan>& out) {
    if (const auto* poly = std::get_if<PolygonGeometry>(&gene.geometry))
        polygon_spans(poly->vertices, dims, out);
    else if (const auto* circle = std::get_if<CircleGeometry>(&gene.geometry))
        circle_spans(circle->center, circle->radius, dims, out);
    else if (const auto* line = std::get_if<LineGeometry>(&gene.geometry))
        line_spans(line->a, line->b, line->thickness, dims, out);
}

int blend_channel(int dst, int src, double alpha) {
    const double v = alpha * src + (1.0 - alpha) * dst;
    return std::clamp<long>(std::lround(v), 0, 255);
}

} // namespace

CoverageMask::CoverageMask(CanvasDims dims, std::vector<RowSpan> spans)
    : dims_(dims), spans_(std::move(spans)) {
    std::sort(spans_.begin(), spans_.end(), [](const RowSpan& a, const RowSpan& b) {
        return a.y != b.y ? a.y < b.y : a.x0 < b.x0;
    });
    std::vector<RowSpan> merged;
    merged.reserve(spans_.size());
    for (const RowSpan& s : spans_) {
        if (!merged.empty() && merged.back().y == s.y &&
            s.x0 <= merged.back().x1 + 1)
            merged.back().x1 = std::max(merged.back().x1, s.x1);
        else
            merged.push_back(s);
    }
    spans_ = std::move(merged);
}

bool CoverageMask::contains(int x, int y) const {
    auto it = std::lower_bound(
        spans_.begin(), spans_.end(), y,
        [](const RowSpan& s, int row) { return s.y < row; });
    for (; it != spans_.end() && it->y == y; ++it)
        if (x >= it->x0 && x <= it->x1) return true;
    return false;
}

std::size_t CoverageMask::pixel_count() const {
    std::size_t count = 0;
    for (const RowSpan& s : spans_) count += static_cast<std::size_t>(s.x1 - s.x0 + 1);
    return count;
}

Color blend_pixel(Color dst, Color src, double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::invalid_argument("blend_pixel: alpha outside [0, 1]");
    return Color{static_cast<std::uint8_t>(blend_channel(dst.r, src.r, alpha)),
                 static_cast<std::uint8_t>(blend_channel(dst.g, src.g, alpha)),
                 static_cast<std::uint8_t>(blend_channel(dst.b, src.b, alpha))};
}

CoverageMask rasterize_polygon(std::span<const Point> vertices, CanvasDims dims) {
    if (!dims.valid()) throw std::invalid_argument("rasterize_polygon: invalid canvas");
    if (vertices.size() < 3)
        throw std::invalid_argument("rasterize_polygon: need at least 3 vertices");
    for (Point v : vertices) require_on_canvas(v, dims, "rasterize_polygon");
    std::vector<RowSpan> spans;
    polygon_spans(vertices, dims, spans);
    return CoverageMask(dims, std::move(spans));
}

CoverageMask rasterize_circle(Point center, int radius, CanvasDims dims) {
    if (!dims.valid()) throw std::invalid_argument("rasterize_circle: invalid canvas");
    if (radius < 1) throw std::invalid_argument("rasterize_circle: radius must be >= 1");
    require_on_canvas(center, dims, "rasterize_circle");
    std::vector<RowSpan> spans;
    circle_spans(center, radius, dims, spans);
    return CoverageMask(dims, std::move(spans));
}

CoverageMask rasterize_line(Point p0, Point p1, int thickness, CanvasDims dims) {
    if (!dims.valid()) throw std::invalid_argument("rasterize_line: invalid canvas");
    if (thickness < 1)
        throw std::invalid_argument("rasterize_line: thickness must be >= 1");
    require_on_canvas(p0, dims, "rasterize_line");
    require_on_canvas(p1, dims, "rasterize_line");
    std::vector<RowSpan> spans;
    line_spans(p0, p1, thickness, dims, spans);
    return CoverageMask(dims, std::move(spans));
}

CoverageMask rasterize_gene(const Gene& gene, CanvasDims dims) {
    if (const auto* poly = std::get_if<PolygonGeometry>(&gene.geometry))
        return rasterize_polygon(poly->vertices, dims);
    if (const auto* circle = std::get_if<CircleGeometry>(&gene.geometry))
        return rasterize_circle(circle->center, circle->radius, dims);
    const auto& line = std::get<LineGeometry>(gene.geometry);
    return rasterize_line(line.a, line.b, line.thickness, dims);
}

ImageBuffer render(const Genome& genome) {
    ImageBuffer image = ImageBuffer::black(genome.canvas);
    std::vector<RowSpan> spans;

    // Per-gene channel tables: src and alpha are constant while a gene is
    // drawn, so the 256 possible destination values are blended once.
    std::array<std::uint8_t, 256> lut_r, lut_g, lut_b;

    for (const Gene& gene : genome.genes) {
        spans.clear();
        gene_spans(gene, genome.canvas, spans);
        if (spans.empty()) continue;
        for (int v = 0; v < 256; ++v) {
            lut_r[v] = static_cast<std::uint8_t>(blend_channel(v, gene.color.r, gene.alpha));
            lut_g[v] = static_cast<std::uint8_t>(blend_channel(v, gene.color.g, gene.alpha));
            lut_b[v] = static_cast<std::uint8_t>(blend_channel(v, gene.color.b, gene.alpha));
        }
        for (const RowSpan& s : spans) {
            Color* px = &image.at(s.x0, s.y);
            for (int x = s.x0; x <= s.x1; ++x, ++px) {
                px->r = lut_r[px->r];
                px->g = lut_g[px->g];
                px->b = lut_b[px->b];
            }
        }
    }
    return image;
}

} // namespace evoshapes
