#ifndef EVOSHAPES_IMAGE_HPP
#define EVOSHAPES_IMAGE_HPP

#include <cassert>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "evoshapes/geometry.hpp"

namespace evoshapes {

// Dense 24-bit RGB raster, row-major.
class ImageBuffer {
public:
    ImageBuffer() = default;

    explicit ImageBuffer(CanvasDims dims, Color fill = Color{0, 0, 0})
        : dims_(dims), pixels_(checked_size(dims), fill) {}

    static ImageBuffer black(CanvasDims dims) { return ImageBuffer(dims); }

    CanvasDims dims() const { return dims_; }
    int width() const { return dims_.width; }
    int height() const { return dims_.height; }

    Color& at(int x, int y) {
        assert(x >= 0 && x < dims_.width && y >= 0 && y < dims_.height);
        return pixels_[static_cast<std::size_t>(y) * dims_.width + x];
    }
    const Color& at(int x, int y) const {
        assert(x >= 0 && x < dims_.width && y >= 0 && y < dims_.height);
        return pixels_[static_cast<std::size_t>(y) * dims_.width + x];
    }

    std::span<Color> pixels() { return pixels_; }
    std::span<const Color> pixels() const { return pixels_; }

    std::span<Color> row(int y) {
        return {pixels_.data() + static_cast<std::size_t>(y) * dims_.width,
                static_cast<std::size_t>(dims_.width)};
    }
    std::span<const Color> row(int y) const {
        return {pixels_.data() + static_cast<std::size_t>(y) * dims_.width,
                static_cast<std::size_t>(dims_.width)};
    }

    // Raw interleaved RGB bytes, 3 * width * height of them.
    std::span<const std::uint8_t> bytes() const {
        return {reinterpret_cast<const std::uint8_t*>(pixels_.data()),
                pixels_.size() * sizeof(Color)};
    }

    bool operator==(const ImageBuffer&) const = default;

private:
    static std::size_t checked_size(CanvasDims dims) {
        if (!dims.valid())
            throw std::invalid_argument("ImageBuffer: width and height must be >= 1");
        return static_cast<std::size_t>(dims.width) * static_cast<std::size_t>(dims.height);
    }

    CanvasDims dims_{};
    std::vector<Color> pixels_;
};

} // namespace evoshapes

#endif
