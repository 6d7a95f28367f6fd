#include "flowtex/render_lic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace flowtex {
namespace {

void render_rows(const VectorField2D& field, const GrayImage& input, const Kernel& kernel,
                 const TraceParams& params, int y_begin, int y_end, GrayImage& output) {
    for (int y = y_begin; y < y_end; ++y) {
        for (int x = 0; x < field.width(); ++x) {
            if (!(norm(field.at(x, y)) >= params.eps)) {
                output.at(x, y) = input.at(x, y);
                continue;
            }
            const Streamline line = trace(field, {x, y}, params);
            double weighted = 0.0;
            double total = 0.0;
            // Convolution: the cell at offset s contributes h(-s), so a ramp
            // brightens toward the downstream end of the smear.
            for (const StreamlineCell& c : line.cells) {
                const double h = kernel.weight(-c.offset);
                weighted += h * input.at(c.cell.x, c.cell.y);
                total += h;
            }
            const long tone = std::lround(weighted / total);
            output.at(x, y) = static_cast<std::uint8_t>(std::clamp<long>(tone, 0, 255));
        }
    }
}

}  // namespace

double Kernel::weight(double offset) const {
    if (shape == KernelShape::Box) return 1.0;
    return (offset + 0.5 * length + 1.0) / (length + 1.0);
}

GrayImage lic(const VectorField2D& field, const GrayImage& input, const Kernel& kernel,
              const TraceParams& params, const RenderOptions& options) {
    params.validate();
    if (input.width() != field.width() || input.height() != field.height()) {
        throw std::invalid_argument("input texture must match the field dimensions");
    }
    if (kernel.length != params.length) {
        throw std::invalid_argument("kernel length " + std::to_string(kernel.length) +
                                    " differs from streamline length " + std::to_string(params.length));
    }
    if (options.tiles < 1) throw std::invalid_argument("tile count must be positive");

    GrayImage output(field.width(), field.height());
    const int height = field.height();
    const int tiles = std::min(options.tiles, height);
    if (tiles == 1) {
        render_rows(field, input, kernel, params, 0, height, output);
        return output;
    }
    // Bands write disjoint rows of `output`.
    std::vector<std::jthread> workers;
    workers.reserve(tiles);
    for (int t = 0; t < tiles; ++t) {
        const int y0 = static_cast<int>(static_cast<long>(height) * t / tiles);
        const int y1 = static_cast<int>(static_cast<long>(height) * (t + 1) / tiles);
        workers.emplace_back([&, y0, y1] { render_rows(field, input, kernel, params, y0, y1, output); });
    }
    workers.clear();
    return output;
}

GrayImage olic(const VectorField2D& field, const GrayImage& droplets, const TraceParams& params,
               const RenderOptions& options) {
    return lic(field, droplets, Kernel{KernelShape::Ramp, params.length}, params, options);
}

}  // namespace flowtex
