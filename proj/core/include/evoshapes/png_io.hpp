#ifndef EVOSHAPES_PNG_IO_HPP
#define EVOSHAPES_PNG_IO_HPP

#include <filesystem>

#include "evoshapes/image.hpp"

namespace evoshapes {

// Loads any libpng-readable PNG as 8-bit RGB. Palette and grayscale images
// are expanded, 16-bit channels are reduced, and alpha is flattened over
// black.
ImageBuffer load_png(const std::filesystem::path& path);

// Writes 8-bit RGB, no alpha channel.
void save_png(const ImageBuffer& image, const std::filesystem::path& path);

} // namespace evoshapes

#endif
