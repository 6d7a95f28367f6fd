#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "flowtex/field.hpp"

namespace flowtex {

/// Two-dimensional Sobol sequence.
///
/// Direction numbers (32-bit, v_k = m_k * 2^(32-k)):
///   dim 1: m_k = 1 for all k (van der Corput, base 2)
///   dim 2: primitive polynomial x + 1, m_1 = 1, recurrence m_k = 2 m_{k-1} xor m_{k-1}
///          giving m = 1, 3, 5, 15, 17, 51, ...
///
/// next() walks the sequence in the Antonov-Saleev Gray-code order, one xor per
/// point, skipping the all-zero point: (0.5, 0.5), (0.75, 0.25), (0.25, 0.75),
/// (0.375, 0.375), ... This is the ordering in which the sequence is usually
/// tabulated. natural(i) gives the point whose digits follow i directly.
class SobolSequence {
public:
    static constexpr int kBits = 32;

    SobolSequence();

    Point2 next();
    std::uint64_t index() const noexcept { return index_; }

    // Point for natural index i (i = 0 is the origin).
    static Point2 natural(std::uint32_t i);
    // Point that next() returns on its n-th call (n >= 1); equals natural(gray(n)).
    static Point2 gray_order(std::uint32_t n);

    static const std::array<std::uint32_t, kBits>& directions(int dim);

private:
    std::uint64_t index_ = 0;
    std::uint32_t state_x_ = 0;
    std::uint32_t state_y_ = 0;
};

// First n points emitted by SobolSequence::next().
std::vector<Point2> sobol_2d(std::size_t n);

/// First ceil(fraction * width * height) distinct cells hit by the Sobol
/// sequence scaled onto the grid, in order of first hit.
/// Throws std::invalid_argument unless fraction is in (0, 1].
std::vector<Cell> seed_cells(int width, int height, double fraction);

}  // namespace flowtex
