#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "flowtex/field.hpp"
#include "flowtex/image.hpp"
#include "flowtex/tracer.hpp"

namespace flowtex {

enum class ToneWrap { Modulo256, Clamp };

struct ToslConfig {
    int length = 31;
    double seed_fraction = 0.30;
    // Tones per cell at the field's maximum magnitude; defaults to 255 / L.
    std::optional<double> ramp_rate;
    std::uint64_t tone_seed = 0;
    ToneWrap wrap = ToneWrap::Modulo256;

    double effective_ramp_rate() const;
    void validate() const;
};

struct ToslStroke {
    Cell seed;
    std::uint8_t start_tone = 0;
    bool from_seed_subset = false;
};

struct ToslResult {
    GrayImage image;
    // owner[p] indexes `strokes`: the streamline that painted pixel p.
    std::vector<std::int32_t> owner;
    std::vector<ToslStroke> strokes;
};

/// Thick oriented streamlines.
///
/// Cells are visited in Sobol order for the first seed_fraction of the grid,
/// then row-major. Each still-unpainted cell starts a streamline: its upstream
/// end gets a pseudo-random start tone g0 and the tone grows along the flow by
/// k * (m / m_max) per cell of arc. Pixels keep the tone of the first
/// streamline that reaches them.
///
/// Throws DegenerateFieldError for an identically zero field and
/// std::invalid_argument for an invalid configuration or L mismatch.
ToslResult tosl_detailed(const VectorField2D& field, const ToslConfig& config,
                         const TraceParams& params);

GrayImage tosl(const VectorField2D& field, const ToslConfig& config,
               const TraceParams& params);

// The tone a streamline paints after accumulating `tone` (unrounded).
std::uint8_t wrap_tone(double tone, ToneWrap wrap);

}  // namespace flowtex
