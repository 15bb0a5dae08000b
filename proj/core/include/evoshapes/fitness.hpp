#ifndef EVOSHAPES_FITNESS_HPP
#define EVOSHAPES_FITNESS_HPP

#include <cstdint>

#include "evoshapes/image.hpp"

namespace evoshapes {

struct FitnessScore {
    std::uint64_t absolute = 0;
    double relative_percent = 0.0;
    bool operator==(const FitnessScore&) const = default;
};

// Theoretical worst score: 255 * 3 * width * height.
std::uint64_t worst_score(CanvasDims dims);

// Sum over pixels and channels of |rendered - target|. Commutative.
// Throws std::invalid_argument on dimension mismatch, naming both sizes.
std::uint64_t absolute_score(const ImageBuffer& rendered, const ImageBuffer& target);

// 100 * (1 - absolute / worst), in double precision. Lower absolute means
// higher percent. Throws std::invalid_argument if absolute exceeds worst.
double relative_score(std::uint64_t absolute, CanvasDims dims);

// Same mapping for fractional scores (means of absolute scores).
double relative_score(double absolute, CanvasDims dims);

FitnessScore score_image(const ImageBuffer& rendered, const ImageBuffer& target);

} // namespace evoshapes

#endif
