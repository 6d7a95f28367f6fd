#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flowtex/field.hpp"
#include "flowtex/field_io.hpp"

namespace flowtex {

enum class Algorithm { Lic, Olic, Tosl };
enum class ImageFormat { Pgm, Png };

// Exit codes of the command line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidParameter = 2;
inline constexpr int kExitDegenerate = 3;
inline constexpr int kExitIo = 4;

struct RenderJob {
    std::string field = "vortex";  // vortex | two-vortices | vortex-cells | file:PATH
    FieldFormat field_format = FieldFormat::TextGrid;
    Algorithm algorithm = Algorithm::Lic;
    int length = 31;
    std::optional<double> alpha = 1.0;  // nullopt skips the magnitude filter
    std::uint64_t seed = 0;
    int width = 512;
    int height = 512;
    std::filesystem::path out = "out.pgm";
    ImageFormat out_format = ImageFormat::Pgm;
    double seed_fraction = 0.30;
    std::optional<double> ramp_rate;  // TOSL; nullopt means 255 / L
    double step = 0.5;
    std::optional<double> eps;        // nullopt means 1e-6 * M_max
    int tiles = 1;
    double droplet_density = 4.0;     // OLIC droplets per 1000 pixels

    // Throws std::invalid_argument naming the offending flag.
    void validate() const;
};

// Sub-seeds derived from the master seed.
struct DerivedSeeds {
    std::uint64_t noise;
    std::uint64_t droplets;
    std::uint64_t tones;
};
DerivedSeeds derive_seeds(std::uint64_t master);

/// Builds a builtin field ("vortex", "two-vortices", "vortex-cells") at the
/// given size. Throws std::invalid_argument for an unknown name.
VectorField2D make_builtin_field(const std::string& name, int width, int height);

struct RenderOutcome {
    std::filesystem::path image_path;
    std::filesystem::path manifest_path;
    std::vector<std::pair<std::string, std::string>> manifest;
};

/// Runs the whole pipeline and writes the image plus "<out>.manifest".
/// Errors propagate as exceptions; run_cli maps them to exit codes.
RenderOutcome run(const RenderJob& job);

// "key=value\n" lines.
std::string format_manifest(const std::vector<std::pair<std::string, std::string>>& entries);

/// Command line entry point: `render ...` and `fieldgen ...`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace flowtex
