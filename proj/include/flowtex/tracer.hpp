#pragma once

#include <vector>

#include "flowtex/field.hpp"

namespace flowtex {

struct TraceParams {
    int length = 31;     // L, total streamline length in cells; odd
    double step = 0.5;   // integration step in cell units, (0, 1]
    double eps = 1e-12;  // magnitudes below this count as a vanished field

    // Throws std::invalid_argument naming the offending parameter.
    void validate() const;
};

// 1e-6 * M_max, floored at 1e-12.
double default_eps(const MagnitudeMap& mags);
double default_eps(const VectorField2D& field);

struct StreamlineCell {
    Cell cell;
    double offset = 0.0;  // signed arc length from the seed, in cells
};

/// Cells visited by the local streamline through `seed`, sorted by ascending
/// offset. The seed is present with offset 0. A cell may reappear only after
/// the path has left it (tight spirals); consecutive entries always differ.
struct Streamline {
    Cell seed;
    int length = 0;
    std::vector<StreamlineCell> cells;

    // Position of the seed entry in `cells`.
    std::size_t seed_index() const;
};

/// Traces the streamline through the center of `seed` in both senses.
///
/// Each leg advects a point with the RK2 midpoint rule on the normalized,
/// bilinearly sampled field, for an arc length of (L - 1) / 2 cells. A leg
/// stops early when the next position leaves [0, w-1] x [0, h-1], when the
/// interpolated magnitude there drops below eps, or when it would enter a cell
/// whose own vector is below eps. A visited cell is recorded once per
/// contiguous stay, with the offset of the sample closest to its center.
///
/// Throws std::out_of_range if the seed lies outside the grid.
Streamline trace(const VectorField2D& field, Cell seed, const TraceParams& params);

}  // namespace flowtex
