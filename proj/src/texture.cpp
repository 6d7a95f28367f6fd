#include "flowtex/texture.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace flowtex {
namespace {

// Uniform integer in [0, n) from the top 53 bits of one draw.
int uniform_below(std::mt19937_64& gen, int n) {
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    return std::min(static_cast<int>(u * n), n - 1);
}

}  // namespace

GrayImage white_noise(int width, int height, std::uint64_t seed) {
    GrayImage image(width, height);
    std::mt19937_64 gen(seed);
    for (std::uint8_t& p : image.pixels()) {
        p = static_cast<std::uint8_t>(gen() >> 56);
    }
    return image;
}

GrayImage droplet_texture(int width, int height, double density, std::uint64_t seed, int radius) {
    if (!(density > 0.0) || !std::isfinite(density)) {
        throw std::invalid_argument("droplet density must be positive");
    }
    if (radius < 0) throw std::invalid_argument("droplet radius must be non-negative");
    GrayImage image(width, height, 0);
    std::mt19937_64 gen(seed);
    const auto count = std::llround(density * static_cast<double>(width) * height / 1000.0);
    const int r2 = radius * radius;
    for (long long i = 0; i < count; ++i) {
        const int cx = uniform_below(gen, width);
        const int cy = uniform_below(gen, height);
        for (int y = std::max(0, cy - radius); y <= std::min(height - 1, cy + radius); ++y) {
            for (int x = std::max(0, cx - radius); x <= std::min(width - 1, cx + radius); ++x) {
                if ((x - cx) * (x - cx) + (y - cy) * (y - cy) <= r2) image.at(x, y) = kDropletTone;
            }
        }
    }
    return image;
}

}  // namespace flowtex
