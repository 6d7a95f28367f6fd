#include "flowtex/render_tosl.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "flowtex/errors.hpp"
#include "flowtex/sobol.hpp"

namespace flowtex {

double ToslConfig::effective_ramp_rate() const {
    return ramp_rate ? *ramp_rate : 255.0 / length;
}

void ToslConfig::validate() const {
    if (length < 1 || length % 2 == 0) {
        throw std::invalid_argument("L must be a positive odd integer, got " + std::to_string(length));
    }
    if (!(seed_fraction > 0.0 && seed_fraction <= 1.0)) {
        throw std::invalid_argument("seed fraction must lie in (0, 1]");
    }
    const double k = effective_ramp_rate();
    if (!(k > 0.0) || !std::isfinite(k)) {
        throw std::invalid_argument("ramp rate must be positive and finite");
    }
}

std::uint8_t wrap_tone(double tone, ToneWrap wrap) {
    const long long t = std::llround(tone);
    if (wrap == ToneWrap::Clamp) {
        return static_cast<std::uint8_t>(std::clamp<long long>(t, 0, 255));
    }
    return static_cast<std::uint8_t>(((t % 256) + 256) % 256);
}

ToslResult tosl_detailed(const VectorField2D& field, const ToslConfig& config,
                         const TraceParams& params) {
    config.validate();
    params.validate();
    if (config.length != params.length) {
        throw std::invalid_argument("TOSL length " + std::to_string(config.length) +
                                    " differs from streamline length " + std::to_string(params.length));
    }
    const MagnitudeMap mags = magnitude_map(field);
    if (!(mags.m_max > 0.0)) {
        throw DegenerateFieldError("field is identically zero: no streamlines exist");
    }

    const int width = field.width();
    const int height = field.height();
    const double k = config.effective_ramp_rate();
    const double k_per_magnitude = k / mags.m_max;

    const std::vector<Cell> subset = seed_cells(width, height, config.seed_fraction);
    std::vector<bool> in_subset(field.size(), false);
    for (const Cell& c : subset) in_subset[field.index(c.x, c.y)] = true;

    ToslResult result;
    result.image = GrayImage(width, height);
    result.owner.assign(field.size(), -1);
    std::mt19937_64 tones(config.tone_seed);

    auto render_from = [&](Cell seed, bool from_subset) {
        if (result.owner[field.index(seed.x, seed.y)] >= 0) return;
        const Streamline line = trace(field, seed, params);
        const auto g0 = static_cast<std::uint8_t>(tones() >> 56);
        const auto id = static_cast<std::int32_t>(result.strokes.size());
        result.strokes.push_back({seed, g0, from_subset});

        double g = g0;
        double previous = line.cells.front().offset;
        for (const StreamlineCell& c : line.cells) {
            g += k_per_magnitude * mags.at(c.cell.x, c.cell.y) * (c.offset - previous);
            previous = c.offset;
            const std::size_t i = field.index(c.cell.x, c.cell.y);
            if (result.owner[i] >= 0) continue;
            result.owner[i] = id;
            result.image.pixels()[i] = wrap_tone(g, config.wrap);
        }
    };

    for (const Cell& c : subset) render_from(c, true);
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            if (!in_subset[field.index(x, y)]) render_from({x, y}, false);
        }
    }
    return result;
}

GrayImage tosl(const VectorField2D& field, const ToslConfig& config, const TraceParams& params) {
    return tosl_detailed(field, config, params).image;
}

}  // namespace flowtex
