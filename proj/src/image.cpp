#include "flowtex/image.hpp"

#include <algorithm>
#include <stdexcept>

namespace flowtex {
namespace {

void require_positive(int width, int height) {
    if (width < 1 || height < 1) {
        throw std::invalid_argument("image dimensions must be positive");
    }
}

}  // namespace

GrayImage::GrayImage(int width, int height, std::uint8_t fill)
    : width_(width), height_(height),
      pixels_(static_cast<std::size_t>(std::max(width, 0)) * static_cast<std::size_t>(std::max(height, 0)), fill) {
    require_positive(width, height);
}

GrayImage::GrayImage(int width, int height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
    require_positive(width, height);
    if (pixels_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
        throw std::invalid_argument("pixel buffer does not match image dimensions");
    }
}

std::uint8_t max_tone(const GrayImage& image) {
    const auto px = image.pixels();
    return px.empty() ? std::uint8_t{0} : *std::max_element(px.begin(), px.end());
}

}  // namespace flowtex
