#ifndef EVOSHAPES_GEOMETRY_HPP
#define EVOSHAPES_GEOMETRY_HPP

#include <algorithm>
#include <compare>
#include <cstdint>

namespace evoshapes {

struct CanvasDims {
    int width = 0;
    int height = 0;

    bool valid() const { return width >= 1 && height >= 1; }
    std::int64_t pixel_count() const {
        return static_cast<std::int64_t>(width) * height;
    }
    bool operator==(const CanvasDims&) const = default;
};

struct Color {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    bool operator==(const Color&) const = default;
};

static_assert(sizeof(Color) == 3, "Color must be a packed RGB triple");

struct Point {
    int x = 0;
    int y = 0;

    bool operator==(const Point&) const = default;
};

inline bool on_canvas(Point p, CanvasDims dims) {
    return p.x >= 0 && p.x < dims.width && p.y >= 0 && p.y < dims.height;
}

// Largest legal circle radius: ceil(max(w, h) / 2).
inline int max_radius(CanvasDims dims) {
    return (std::max(dims.width, dims.height) + 1) / 2;
}

// Largest legal line thickness: floor(min(w, h) / 20), at least 1.
inline int max_thickness(CanvasDims dims) {
    return std::max(1, std::min(dims.width, dims.height) / 20);
}

} // namespace evoshapes

#endif
