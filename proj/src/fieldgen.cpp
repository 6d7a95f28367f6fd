#include "flowtex/field.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace flowtex {
namespace {

void require_grid(int width, int height) {
    if (width < 2 || height < 2) {
        throw std::invalid_argument("field dimensions must be at least 2x2, got " +
                                    std::to_string(width) + "x" + std::to_string(height));
    }
}

void require_inside(Point2 p, int width, int height, const char* what) {
    if (!(p.x >= 0.0 && p.y >= 0.0 && p.x <= width - 1 && p.y <= height - 1)) {
        throw std::invalid_argument(std::string(what) + " must lie inside the grid");
    }
}

// Unit tangent of a vortex about `center`; zero on the center itself.
Vec2 unit_vortex(double x, double y, Point2 center, Rotation rotation) {
    const double dx = x - center.x;
    const double dy = y - center.y;
    const double r = std::sqrt(dx * dx + dy * dy);
    if (r == 0.0) {
        return {};
    }
    if (rotation == Rotation::Clockwise) {
        return {dy / r, -dx / r};
    }
    return {-dy / r, dx / r};
}

}  // namespace

double norm(Vec2 v) { return std::sqrt(v.vx * v.vx + v.vy * v.vy); }

VectorField2D::VectorField2D(int width, int height, std::vector<Vec2> data)
    : width_(width), height_(height), data_(std::move(data)) {
    require_grid(width, height);
    if (data_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
        throw std::invalid_argument("field data length does not match " +
                                    std::to_string(width) + "x" + std::to_string(height));
    }
    for (const Vec2& v : data_) {
        if (!std::isfinite(v.vx) || !std::isfinite(v.vy)) {
            throw std::invalid_argument("field components must be finite");
        }
    }
}

VectorField2D VectorField2D::reversed() const {
    std::vector<Vec2> flipped(data_.size());
    std::transform(data_.begin(), data_.end(), flipped.begin(), [](Vec2 v) { return -v; });
    return VectorField2D(width_, height_, std::move(flipped));
}

MagnitudeMap magnitude_map(const VectorField2D& field) {
    MagnitudeMap mags;
    mags.width = field.width();
    mags.height = field.height();
    mags.m.reserve(field.size());
    for (const Vec2& v : field.data()) {
        const double m = norm(v);
        mags.m.push_back(m);
        mags.m_max = std::max(mags.m_max, m);
    }
    return mags;
}

Vec2 sample_bilinear(const VectorField2D& field, double x, double y) {
    const int w = field.width();
    const int h = field.height();
    if (!(x >= 0.0 && y >= 0.0 && x <= w - 1 && y <= h - 1)) {
        throw std::out_of_range("sample position outside the field");
    }
    const int x0 = std::min(static_cast<int>(x), w - 2);
    const int y0 = std::min(static_cast<int>(y), h - 2);
    const double fx = x - x0;
    const double fy = y - y0;

    const Vec2& a = field.at(x0, y0);
    const Vec2& b = field.at(x0 + 1, y0);
    const Vec2& c = field.at(x0, y0 + 1);
    const Vec2& d = field.at(x0 + 1, y0 + 1);
    const auto lerp2 = [&](double pa, double pb, double pc, double pd) {
        const double top = pa * (1.0 - fx) + pb * fx;
        const double bottom = pc * (1.0 - fx) + pd * fx;
        return top * (1.0 - fy) + bottom * fy;
    };
    return {lerp2(a.vx, b.vx, c.vx, d.vx), lerp2(a.vy, b.vy, c.vy, d.vy)};
}

VectorField2D make_vortex(int width, int height, Point2 center, Rotation rotation) {
    require_grid(width, height);
    require_inside(center, width, height, "vortex center");
    std::vector<Vec2> data;
    data.reserve(static_cast<std::size_t>(width) * height);
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            data.push_back(unit_vortex(x, y, center, rotation));
        }
    }
    return VectorField2D(width, height, std::move(data));
}

VectorField2D make_two_vortices(int width, int height, Point2 first, Point2 second,
                                double falloff, Rotation first_rotation,
                                Rotation second_rotation) {
    require_grid(width, height);
    require_inside(first, width, height, "first vortex center");
    require_inside(second, width, height, "second vortex center");
    if (first.x == second.x && first.y == second.y) {
        throw std::invalid_argument("vortex centers must be distinct");
    }
    if (!(falloff > 0.0)) {
        throw std::invalid_argument("falloff must be positive");
    }

    const double inv_f2 = std::isinf(falloff) ? 0.0 : 1.0 / (falloff * falloff);
    std::vector<Vec2> data;
    data.reserve(static_cast<std::size_t>(width) * height);
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            const bool singular = (x == first.x && y == first.y) || (x == second.x && y == second.y);
            if (singular) {
                data.push_back({});
                continue;
            }
            Vec2 v{};
            for (const auto& [c, rot] : {std::pair{first, first_rotation},
                                         std::pair{second, second_rotation}}) {
                const double dx = x - c.x;
                const double dy = y - c.y;
                const double decay = std::exp(-(dx * dx + dy * dy) * inv_f2);
                v = v + decay * unit_vortex(x, y, c, rot);
            }
            data.push_back(v);
        }
    }
    return VectorField2D(width, height, std::move(data));
}

Point2 vortex_cells_envelope_peak(int width, int height) {
    return {(width - 1) / 2.0, (height - 1) / 2.0};
}

VectorField2D make_vortex_cells(int width, int height, double wavelength,
                                bool amplitude_gradient) {
    require_grid(width, height);
    if (!(wavelength >= 4.0) || !std::isfinite(wavelength)) {
        throw std::invalid_argument("vortex cell wavelength must be at least 4 cells");
    }
    const double k = std::numbers::pi / wavelength;
    const Point2 peak = vortex_cells_envelope_peak(width, height);
    const double sigma = std::min(width, height) / 4.0;
    const double inv_s2 = 1.0 / (sigma * sigma);

    std::vector<Vec2> data;
    data.reserve(static_cast<std::size_t>(width) * height);
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            const double sx = std::sin(k * x);
            const double cx = std::cos(k * x);
            const double sy = std::sin(k * y);
            const double cy = std::cos(k * y);
            Vec2 v{sx * cy, -cx * sy};
            if (amplitude_gradient) {
                // psi = E * S; v = E * curl(S) + S * (dE/dy, -dE/dx)
                const double dx = x - peak.x;
                const double dy = y - peak.y;
                const double e = std::exp(-0.5 * (dx * dx + dy * dy) * inv_s2);
                const double s = sx * sy / k;
                v = Vec2{e * v.vx - s * e * dy * inv_s2, e * v.vy + s * e * dx * inv_s2};
            }
            data.push_back(v);
        }
    }
    return VectorField2D(width, height, std::move(data));
}

}  // namespace flowtex
