#pragma once

#include "flowtex/field.hpp"
#include "flowtex/image.hpp"

namespace flowtex {

struct EnhanceParams {
    double alpha = 1.0;

    void validate() const;
};

/// Magnitude filter for a rendered streamline map:
///   out = round( in * (M / M_max)^alpha * 255 / H )
/// with H the brightest tone of `image`, clamped to [0, 255]. 0^0 is taken as 1.
///
/// Throws DegenerateImageError if H = 0, DegenerateFieldError if M_max = 0 and
/// std::invalid_argument on a dimension mismatch or invalid alpha.
GrayImage enhance_magnitude(const GrayImage& image, const MagnitudeMap& mags,
                            const EnhanceParams& params);

}  // namespace flowtex
