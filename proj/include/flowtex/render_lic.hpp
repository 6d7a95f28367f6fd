#pragma once

#include "flowtex/field.hpp"
#include "flowtex/image.hpp"
#include "flowtex/tracer.hpp"

namespace flowtex {

enum class KernelShape { Box, Ramp };

/// Convolution weights over the signed arc offset s in [-L/2, L/2].
///   box:  h(s) = 1
///   ramp: h(s) = (s + L/2 + 1) / (L + 1)   (increases toward the flow)
struct Kernel {
    KernelShape shape = KernelShape::Box;
    int length = 31;

    double weight(double offset) const;
};

struct RenderOptions {
    // Number of horizontal bands rendered concurrently. The result does not
    // depend on it.
    int tiles = 1;
};

/// Line integral convolution. Every pixel is the weighted mean of the input
/// tones along its streamline, a cell at offset s weighing h(-s); the result is
/// rounded half away from zero. Pixels where the field vanishes keep their
/// input tone.
///
/// Throws std::invalid_argument on dimension or length mismatch.
GrayImage lic(const VectorField2D& field, const GrayImage& input, const Kernel& kernel,
              const TraceParams& params, const RenderOptions& options = {});

// LIC with the ramp kernel; intended for droplet textures.
GrayImage olic(const VectorField2D& field, const GrayImage& droplets,
               const TraceParams& params, const RenderOptions& options = {});

}  // namespace flowtex
