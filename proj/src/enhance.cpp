#include "flowtex/enhance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "flowtex/errors.hpp"

namespace flowtex {

void EnhanceParams::validate() const {
    if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
        throw std::invalid_argument("alpha must be finite and non-negative");
    }
}

GrayImage enhance_magnitude(const GrayImage& image, const MagnitudeMap& mags,
                            const EnhanceParams& params) {
    params.validate();
    if (image.width() != mags.width || image.height() != mags.height) {
        throw std::invalid_argument("image and magnitude map dimensions differ");
    }
    const std::uint8_t h = max_tone(image);
    if (h == 0) throw DegenerateImageError("image is all black (H = 0)");
    if (!(mags.m_max > 0.0)) throw DegenerateFieldError("field magnitude is zero everywhere (M_max = 0)");

    GrayImage out(image.width(), image.height());
    const auto in = image.pixels();
    auto px = out.pixels();
    for (std::size_t i = 0; i < in.size(); ++i) {
        const double factor = std::pow(mags.m[i] / mags.m_max, params.alpha);
        const double value = in[i] * factor * 255.0 / h;
        px[i] = static_cast<std::uint8_t>(std::clamp(std::round(value), 0.0, 255.0));
    }
    return out;
}

}  // namespace flowtex
