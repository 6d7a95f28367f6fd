#pragma once

#include <filesystem>
#include <string>

#include "flowtex/image.hpp"

namespace flowtex {

// Binary P5, maxval 255: "P5\n<w> <h>\n255\n" followed by the raw pixels.
std::string encode_pgm(const GrayImage& image);
GrayImage decode_pgm(const std::string& bytes);

void write_pgm(const GrayImage& image, const std::filesystem::path& path);
GrayImage read_pgm(const std::filesystem::path& path);

// 8-bit grayscale PNG through libpng.
void write_png(const GrayImage& image, const std::filesystem::path& path);
GrayImage read_png(const std::filesystem::path& path);

}  // namespace flowtex
