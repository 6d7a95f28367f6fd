#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace flowtex {

struct Vec2 {
    double vx = 0.0;
    double vy = 0.0;

    friend bool operator==(const Vec2&, const Vec2&) = default;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.vx + b.vx, a.vy + b.vy}; }
inline Vec2 operator-(Vec2 v) { return {-v.vx, -v.vy}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.vx, s * v.vy}; }

double norm(Vec2 v);

// Continuous position in cell coordinates. Cell (i, j) has its center at (i, j);
// x grows rightward, y grows downward (raster order).
struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

struct Cell {
    int x = 0;
    int y = 0;

    friend bool operator==(const Cell&, const Cell&) = default;
};

/// Row-major grid of 2-D vectors, one per texture pixel.
///
/// Construction validates the invariants (both dimensions >= 2, every
/// component finite); a constructed field is immutable and may be shared
/// across threads.
class VectorField2D {
public:
    VectorField2D(int width, int height, std::vector<Vec2> data);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    std::size_t size() const noexcept { return data_.size(); }

    const Vec2& at(int x, int y) const { return data_[index(x, y)]; }
    std::span<const Vec2> data() const noexcept { return data_; }

    bool contains(Cell c) const noexcept {
        return c.x >= 0 && c.y >= 0 && c.x < width_ && c.y < height_;
    }
    std::size_t index(int x, int y) const noexcept {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
               static_cast<std::size_t>(x);
    }

    // Every vector negated. Used to compare flow senses.
    VectorField2D reversed() const;

private:
    int width_;
    int height_;
    std::vector<Vec2> data_;
};

struct MagnitudeMap {
    int width = 0;
    int height = 0;
    std::vector<double> m;
    double m_max = 0.0;

    double at(int x, int y) const {
        return m[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) +
                 static_cast<std::size_t>(x)];
    }
};

MagnitudeMap magnitude_map(const VectorField2D& field);

/// Bilinear interpolation of the four cells surrounding (x, y).
/// Exact at integer coordinates. Throws std::out_of_range outside
/// [0, width-1] x [0, height-1].
Vec2 sample_bilinear(const VectorField2D& field, double x, double y);

// --- analytic fields ---------------------------------------------------------

enum class Rotation { Clockwise, CounterClockwise };

/// Unit-magnitude vortex about `center`.
///
/// Rotation is measured with the y axis pointing up: a clockwise vortex has
/// v = (0, -1) one cell to the right of its center. On a raster display (y
/// down) that vortex therefore appears counter-clockwise. A cell lying exactly
/// on the center carries v = (0, 0).
VectorField2D make_vortex(int width, int height, Point2 center,
                          Rotation rotation = Rotation::Clockwise);

/// Two superposed unit vortices, each attenuated by exp(-r^2 / falloff^2)
/// around its own center. A cell lying exactly on either center is a singular
/// point of the superposition and carries v = (0, 0).
VectorField2D make_two_vortices(int width, int height, Point2 first, Point2 second,
                                double falloff,
                                Rotation first_rotation = Rotation::Clockwise,
                                Rotation second_rotation = Rotation::Clockwise);

/// Periodic array of counter-rotating cells built from the stream function
///   psi = E(x, y) * (lambda / pi) * sin(pi x / lambda) * sin(pi y / lambda)
/// with v = (d psi / dy, -d psi / dx). Without the envelope (E = 1) this is
///   v = (sin(pi x/l) cos(pi y/l), -cos(pi x/l) sin(pi y/l)).
/// With `amplitude_gradient` the envelope is a Gaussian centred on the frame,
/// sigma = min(width, height) / 4; the field stays divergence free.
VectorField2D make_vortex_cells(int width, int height, double wavelength,
                                bool amplitude_gradient);

// Center of the envelope used by make_vortex_cells.
Point2 vortex_cells_envelope_peak(int width, int height);

}  // namespace flowtex
