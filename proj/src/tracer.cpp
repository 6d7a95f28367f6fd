#include "flowtex/tracer.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace flowtex {
namespace {

struct Leg {
    std::vector<StreamlineCell> cells;  // in travel order, offsets unsigned
};

class LegIntegrator {
public:
    LegIntegrator(const VectorField2D& field, const TraceParams& params)
        : field_(field), params_(params), x_max_(field.width() - 1), y_max_(field.height() - 1) {}

    // Integrates away from the seed center. sign = +1 follows the field, -1 opposes it.
    Leg run(Cell seed, double sign) const {
        Leg leg;
        const int half = (params_.length - 1) / 2;
        Point2 p{static_cast<double>(seed.x), static_cast<double>(seed.y)};
        Cell current = seed;
        double best_dist = 0.0;
        bool recording = false;  // false while still inside the seed's initial stay

        for (long n = 1;; ++n) {
            const double before = std::min(static_cast<double>(n - 1) * params_.step,
                                           static_cast<double>(half));
            if (before >= half) break;
            const double traveled = std::min(static_cast<double>(n) * params_.step,
                                             static_cast<double>(half));
            const double h = sign * (traveled - before);

            const auto k1 = direction(p);
            if (!k1) break;
            const Point2 mid{p.x + 0.5 * h * k1->vx, p.y + 0.5 * h * k1->vy};
            if (!inside(mid)) break;
            const auto k2 = direction(mid);
            if (!k2) break;
            const Point2 next{p.x + h * k2->vx, p.y + h * k2->vy};
            if (!inside(next) || !direction(next)) break;
            p = next;

            const Cell c{static_cast<int>(std::floor(p.x + 0.5)),
                         static_cast<int>(std::floor(p.y + 0.5))};
            const double dist = std::hypot(p.x - c.x, p.y - c.y);
            if (!(c == current) && !(norm(field_.at(c.x, c.y)) >= params_.eps)) break;
            if (c == current) {
                if (recording && dist < best_dist) {
                    best_dist = dist;
                    leg.cells.back().offset = traveled;
                }
                continue;
            }
            leg.cells.push_back({c, traveled});
            current = c;
            best_dist = dist;
            recording = true;
        }
        return leg;
    }

    std::optional<Vec2> direction(Point2 p) const {
        const Vec2 v = sample_bilinear(field_, p.x, p.y);
        const double m = norm(v);
        if (!(m >= params_.eps)) return std::nullopt;
        return Vec2{v.vx / m, v.vy / m};
    }

private:
    bool inside(Point2 p) const {
        return p.x >= 0.0 && p.y >= 0.0 && p.x <= x_max_ && p.y <= y_max_;
    }

    const VectorField2D& field_;
    const TraceParams& params_;
    double x_max_;
    double y_max_;
};

}  // namespace

void TraceParams::validate() const {
    if (length < 1 || length % 2 == 0) {
        throw std::invalid_argument("L must be a positive odd integer, got " + std::to_string(length));
    }
    if (!(step > 0.0 && step <= 1.0)) {
        throw std::invalid_argument("step must lie in (0, 1], got " + std::to_string(step));
    }
    if (!(eps > 0.0) || !std::isfinite(eps)) {
        throw std::invalid_argument("eps must be positive and finite");
    }
}

double default_eps(const MagnitudeMap& mags) { return std::max(1e-6 * mags.m_max, 1e-12); }

double default_eps(const VectorField2D& field) { return default_eps(magnitude_map(field)); }

std::size_t Streamline::seed_index() const {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i].offset == 0.0) return i;
    }
    throw std::logic_error("streamline has no seed entry");
}

Streamline trace(const VectorField2D& field, Cell seed, const TraceParams& params) {
    params.validate();
    if (!field.contains(seed)) {
        throw std::out_of_range("seed cell (" + std::to_string(seed.x) + "," +
                                std::to_string(seed.y) + ") outside the field");
    }
    Streamline line{seed, params.length, {}};

    const LegIntegrator integrator(field, params);
    if (!integrator.direction({static_cast<double>(seed.x), static_cast<double>(seed.y)})) {
        line.cells.push_back({seed, 0.0});
        return line;
    }

    const Leg forward = integrator.run(seed, 1.0);
    const Leg backward = integrator.run(seed, -1.0);
    line.cells.reserve(forward.cells.size() + backward.cells.size() + 1);
    for (auto it = backward.cells.rbegin(); it != backward.cells.rend(); ++it) {
        line.cells.push_back({it->cell, -it->offset});
    }
    line.cells.push_back({seed, 0.0});
    line.cells.insert(line.cells.end(), forward.cells.begin(), forward.cells.end());
    return line;
}

}  // namespace flowtex
