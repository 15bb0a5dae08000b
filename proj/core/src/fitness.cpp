#include "evoshapes/fitness.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace evoshapes {

std::uint64_t worst_score(CanvasDims dims) {
    if (!dims.valid()) throw std::invalid_argument("worst_score: invalid dimensions");
    return 255ull * 3ull * static_cast<std::uint64_t>(dims.width) *
           static_cast<std::uint64_t>(dims.height);
}

std::uint64_t absolute_score(const ImageBuffer& rendered, const ImageBuffer& target) {
    if (rendered.dims() != target.dims())
        throw std::invalid_argument(
            "absolute_score: dimension mismatch, rendered " +
            std::to_string(rendered.width()) + "x" + std::to_string(rendered.height()) +
            " vs target " + std::to_string(target.width()) + "x" +
            std::to_string(target.height()));

    const auto a = rendered.bytes();
    const auto b = target.bytes();
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        sum += static_cast<std::uint64_t>(
            std::abs(static_cast<int>(a[i]) - static_cast<int>(b[i])));
    return sum;
}

double relative_score(std::uint64_t absolute, CanvasDims dims) {
    const std::uint64_t worst = worst_score(dims);
    if (absolute > worst)
        throw std::invalid_argument("relative_score: absolute score " +
                                    std::to_string(absolute) + " exceeds worst " +
                                    std::to_string(worst));
    return relative_score(static_cast<double>(absolute), dims);
}

double relative_score(double absolute, CanvasDims dims) {
    return 100.0 * (1.0 - absolute / static_cast<double>(worst_score(dims)));
}

FitnessScore score_image(const ImageBuffer& rendered, const ImageBuffer& target) {
    FitnessScore s;
    s.absolute = absolute_score(rendered, target);
    s.relative_percent = relative_score(s.absolute, rendered.dims());
    return s;
}

} // namespace evoshapes
