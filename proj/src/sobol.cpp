#include "flowtex/sobol.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace flowtex {
namespace {

using Directions = std::array<std::uint32_t, SobolSequence::kBits>;

Directions make_directions(int dim) {
    Directions v{};
    std::uint32_t m = 1;
    for (int k = 1; k <= SobolSequence::kBits; ++k) {
        if (dim == 2 && k > 1) {
            m = (m << 1) ^ m;  // x + 1
        }
        v[k - 1] = m << (SobolSequence::kBits - k);
    }
    return v;
}

const Directions kDim1 = make_directions(1);
const Directions kDim2 = make_directions(2);

constexpr double kScale = 1.0 / 4294967296.0;  // 2^-32

Point2 to_point(std::uint32_t x, std::uint32_t y) { return {x * kScale, y * kScale}; }

}  // namespace

SobolSequence::SobolSequence() = default;

const std::array<std::uint32_t, SobolSequence::kBits>& SobolSequence::directions(int dim) {
    if (dim == 1) return kDim1;
    if (dim == 2) return kDim2;
    throw std::invalid_argument("Sobol dimension must be 1 or 2");
}

Point2 SobolSequence::next() {
    if (index_ >= 0xffffffffULL) {
        throw std::length_error("Sobol sequence exhausted");
    }
    const int c = std::countr_one(static_cast<std::uint32_t>(index_));
    state_x_ ^= kDim1[c];
    state_y_ ^= kDim2[c];
    ++index_;
    return to_point(state_x_, state_y_);
}

Point2 SobolSequence::natural(std::uint32_t i) {
    std::uint32_t x = 0;
    std::uint32_t y = 0;
    for (int k = 0; i != 0; ++k, i >>= 1) {
        if (i & 1U) {
            x ^= kDim1[k];
            y ^= kDim2[k];
        }
    }
    return to_point(x, y);
}

Point2 SobolSequence::gray_order(std::uint32_t n) { return natural(n ^ (n >> 1)); }

std::vector<Point2> sobol_2d(std::size_t n) {
    std::vector<Point2> points;
    points.reserve(n);
    SobolSequence seq;
    for (std::size_t i = 0; i < n; ++i) points.push_back(seq.next());
    return points;
}

std::vector<Cell> seed_cells(int width, int height, double fraction) {
    if (!(fraction > 0.0 && fraction <= 1.0)) {
        throw std::invalid_argument("seed fraction must lie in (0, 1], got " + std::to_string(fraction));
    }
    if (width < 1 || height < 1) {
        throw std::invalid_argument("grid dimensions must be positive");
    }
    const std::size_t total = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    // The tolerance keeps products such as 0.3 * 10000 from rounding up past the exact count.
    auto target = static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(total) - 1e-9));
    target = std::clamp<std::size_t>(target, 1, total);

    std::vector<Cell> cells;
    cells.reserve(target);
    std::vector<bool> taken(total, false);
    SobolSequence seq;
    while (cells.size() < target) {
        const Point2 p = seq.next();
        const int cx = std::min(static_cast<int>(p.x * width), width - 1);
        const int cy = std::min(static_cast<int>(p.y * height), height - 1);
        const std::size_t i = static_cast<std::size_t>(cy) * width + cx;
        if (taken[i]) continue;
        taken[i] = true;
        cells.push_back({cx, cy});
    }
    return cells;
}

}  // namespace flowtex
