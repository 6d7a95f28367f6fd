#pragma once

#include <cstdint>

#include "flowtex/image.hpp"

namespace flowtex {

/// Independent uniform tones in [0, 255]. The generator is mt19937_64 and each
/// tone is the top byte of one draw, so images are identical across platforms.
GrayImage white_noise(int width, int height, std::uint64_t seed);

inline constexpr int kDropletRadius = 2;
inline constexpr std::uint8_t kDropletTone = 255;

/// Sparse bright discs on a black background. `density` is the expected
/// number of droplet centers per 1000 pixels; the count is rounded to the
/// nearest integer and centers are drawn uniformly over the frame.
GrayImage droplet_texture(int width, int height, double density, std::uint64_t seed,
                          int radius = kDropletRadius);

}  // namespace flowtex
