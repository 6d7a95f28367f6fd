#include "flowtex/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <regex>
#include <sstream>
#include <tuple>
#include <stdexcept>

#include "flowtex/enhance.hpp"
#include "flowtex/errors.hpp"
#include "flowtex/image_io.hpp"
#include "flowtex/render_lic.hpp"
#include "flowtex/render_tosl.hpp"
#include "flowtex/texture.hpp"

namespace flowtex {
namespace {

constexpr std::string_view kFilePrefix = "file:";

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::string fmt_double(double v) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

std::string_view to_string(Algorithm a) {
    switch (a) {
        case Algorithm::Lic: return "lic";
        case Algorithm::Olic: return "olic";
        case Algorithm::Tosl: return "tosl";
    }
    return "?";
}

std::string_view to_string(ImageFormat f) { return f == ImageFormat::Pgm ? "pgm" : "png"; }

std::pair<int, int> parse_size(const std::string& text) {
    static const std::regex pattern(R"(^([0-9]{1,6})x([0-9]{1,6})$)");
    std::smatch m;
    if (!std::regex_match(text, m, pattern)) {
        throw std::invalid_argument("--size must look like WxH, got '" + text + "'");
    }
    return {std::stoi(m[1].str()), std::stoi(m[2].str())};
}

bool is_file_source(const std::string& field) { return field.starts_with(kFilePrefix); }

}  // namespace

void RenderJob::validate() const {
    if (!is_file_source(field) && field != "vortex" && field != "two-vortices" &&
        field != "vortex-cells") {
        throw std::invalid_argument("--field: unknown field '" + field + "'");
    }
    if (is_file_source(field) && field.size() == kFilePrefix.size()) {
        throw std::invalid_argument("--field: file: needs a path");
    }
    if (length < 1 || length % 2 == 0) {
        throw std::invalid_argument("--L must be a positive odd integer, got " + std::to_string(length));
    }
    if (alpha && (!(*alpha >= 0.0) || !std::isfinite(*alpha))) {
        throw std::invalid_argument("--alpha must be finite and non-negative");
    }
    if (width < 2 || height < 2) throw std::invalid_argument("--size must be at least 2x2");
    if (!(seed_fraction > 0.0 && seed_fraction <= 1.0)) {
        throw std::invalid_argument("--seed-fraction must lie in (0, 1]");
    }
    if (ramp_rate && (!(*ramp_rate > 0.0) || !std::isfinite(*ramp_rate))) {
        throw std::invalid_argument("--ramp-rate must be positive");
    }
    if (!(step > 0.0 && step <= 1.0)) throw std::invalid_argument("--step must lie in (0, 1]");
    if (eps && (!(*eps > 0.0) || !std::isfinite(*eps))) {
        throw std::invalid_argument("--eps must be positive");
    }
    if (tiles < 1) throw std::invalid_argument("--tiles must be positive");
    if (!(droplet_density > 0.0) || !std::isfinite(droplet_density)) {
        throw std::invalid_argument("--droplet-density must be positive");
    }
    if (out.empty()) throw std::invalid_argument("--out must name a file");
}

DerivedSeeds derive_seeds(std::uint64_t master) {
    return {splitmix64(master ^ 0x6e6f697365ULL),      // "noise"
            splitmix64(master ^ 0x64726f70ULL),        // "drop"
            splitmix64(master ^ 0x746f6e6573ULL)};     // "tones"
}

VectorField2D make_builtin_field(const std::string& name, int width, int height) {
    const int side = std::min(width, height);
    if (name == "vortex") {
        return make_vortex(width, height, {static_cast<double>(width / 2), static_cast<double>(height / 2)});
    }
    if (name == "two-vortices") {
        const Point2 a{static_cast<double>(width / 3), static_cast<double>(height / 2)};
        const Point2 b{static_cast<double>(width - 1 - width / 3), static_cast<double>(height / 2)};
        return make_two_vortices(width, height, a, b, std::max(1.0, side / 5.0));
    }
    if (name == "vortex-cells") {
        return make_vortex_cells(width, height, std::max(4.0, side / 8.0), true);
    }
    throw std::invalid_argument("unknown builtin field '" + name + "'");
}

std::string format_manifest(const std::vector<std::pair<std::string, std::string>>& entries) {
    std::string text;
    for (const auto& [key, value] : entries) text += key + "=" + value + "\n";
    return text;
}

RenderOutcome run(const RenderJob& job) {
    job.validate();

    const VectorField2D field =
        is_file_source(job.field)
            ? load_field(std::filesystem::path(job.field.substr(kFilePrefix.size())), job.field_format)
            : make_builtin_field(job.field, job.width, job.height);
    const MagnitudeMap mags = magnitude_map(field);
    if (!(mags.m_max > 0.0)) {
        throw DegenerateFieldError("field is identically zero: no streamlines exist");
    }

    const DerivedSeeds seeds = derive_seeds(job.seed);
    TraceParams params{job.length, job.step, job.eps ? *job.eps : default_eps(mags)};
    params.validate();
    const RenderOptions options{job.tiles};

    GrayImage image;
    ToslConfig tosl_config{job.length, job.seed_fraction, job.ramp_rate, seeds.tones, ToneWrap::Modulo256};
    switch (job.algorithm) {
        case Algorithm::Lic:
            image = lic(field, white_noise(field.width(), field.height(), seeds.noise),
                        Kernel{KernelShape::Box, job.length}, params, options);
            break;
        case Algorithm::Olic:
            image = olic(field,
                         droplet_texture(field.width(), field.height(), job.droplet_density, seeds.droplets),
                         params, options);
            break;
        case Algorithm::Tosl:
            image = tosl(field, tosl_config, params);
            break;
    }
    if (job.alpha) image = enhance_magnitude(image, mags, EnhanceParams{*job.alpha});

    RenderOutcome outcome;
    outcome.image_path = job.out;
    outcome.manifest_path = std::filesystem::path(job.out).replace_extension(".manifest");
    outcome.manifest = {
        {"field", job.field},
        {"format", std::string(to_string(job.field_format))},
        {"algo", std::string(to_string(job.algorithm))},
        {"L", std::to_string(job.length)},
        {"alpha", job.alpha ? fmt_double(*job.alpha) : "none"},
        {"seed", std::to_string(job.seed)},
        {"size", std::to_string(field.width()) + "x" + std::to_string(field.height())},
        {"seed_fraction", fmt_double(job.seed_fraction)},
        {"ramp_rate", fmt_double(tosl_config.effective_ramp_rate())},
        {"step", fmt_double(params.step)},
        {"eps", fmt_double(params.eps)},
        {"tiles", std::to_string(job.tiles)},
        {"droplet_density", fmt_double(job.droplet_density)},
        {"out", job.out.string()},
        {"out_format", std::string(to_string(job.out_format))},
        {"noise_seed", std::to_string(seeds.noise)},
        {"droplet_seed", std::to_string(seeds.droplets)},
        {"tone_seed", std::to_string(seeds.tones)},
        {"m_max", fmt_double(mags.m_max)},
    };

    if (job.out_format == ImageFormat::Pgm) {
        write_pgm(image, outcome.image_path);
    } else {
        write_png(image, outcome.image_path);
    }
    std::ofstream manifest(outcome.manifest_path, std::ios::binary);
    manifest << format_manifest(outcome.manifest);
    if (!manifest.flush()) throw IoError("failed writing " + outcome.manifest_path.string());
    return outcome;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Dense streamline textures of 2-D vector fields"};
    app.require_subcommand(1);

    RenderJob job;
    std::string size = "512x512";
    std::string field_format = "text-grid";
    std::string out_format;
    std::string algo = "lic";

    auto* render = app.add_subcommand("render", "render a field to an image");
    render->add_option("--field", job.field, "vortex | two-vortices | vortex-cells | file:PATH")
        ->capture_default_str();
    render->add_option("--format", field_format, "input field format: text-grid | csv")
        ->check(CLI::IsMember({"text-grid", "csv"}))
        ->capture_default_str();
    render->add_option("--algo", algo, "lic | olic | tosl")
        ->check(CLI::IsMember({"lic", "olic", "tosl"}))
        ->capture_default_str();
    render->add_option("--L", job.length, "streamline length in cells (odd)")->capture_default_str();
    auto* alpha_opt = render->add_option("--alpha", "magnitude filter exponent; omit to skip the filter")
                          ->expected(0, 1)
                          ->default_str("1");
    render->add_option("--seed", job.seed, "master RNG seed")->capture_default_str();
    render->add_option("--size", size, "WxH (builtin fields)")->capture_default_str();
    render->add_option("--seed-fraction", job.seed_fraction, "TOSL Sobol seed fraction")
        ->capture_default_str();
    auto* ramp_opt = render->add_option("--ramp-rate", "TOSL tones per cell at M_max (default 255/L)");
    render->add_option("--step", job.step, "integration step in cells")->capture_default_str();
    auto* eps_opt = render->add_option("--eps", "vanishing-field threshold (default 1e-6 * M_max)");
    render->add_option("--tiles", job.tiles, "parallel bands for LIC/OLIC")->capture_default_str();
    render->add_option("--droplet-density", job.droplet_density, "OLIC droplets per 1000 pixels")
        ->capture_default_str();
    render->add_option("--out", job.out, "output image path")->required();
    render->add_option("--out-format", out_format, "pgm | png (default from extension)")
        ->check(CLI::IsMember({"pgm", "png"}));

    std::string gen_field = "vortex";
    std::string gen_size = "512x512";
    std::string gen_format = "text-grid";
    std::filesystem::path gen_out;
    auto* fieldgen = app.add_subcommand("fieldgen", "write a builtin field to a file");
    fieldgen->add_option("--field", gen_field, "vortex | two-vortices | vortex-cells")
        ->check(CLI::IsMember({"vortex", "two-vortices", "vortex-cells"}))
        ->capture_default_str();
    fieldgen->add_option("--size", gen_size, "WxH")->capture_default_str();
    fieldgen->add_option("--format", gen_format, "text-grid | csv")
        ->check(CLI::IsMember({"text-grid", "csv"}))
        ->capture_default_str();
    fieldgen->add_option("--out", gen_out, "output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream msg;
        const int code = app.exit(e, out, msg);
        err << msg.str();
        return code == 0 ? kExitOk : kExitInvalidParameter;
    }

    try {
        if (*fieldgen) {
            const auto [w, h] = parse_size(gen_size);
            const VectorField2D field = make_builtin_field(gen_field, w, h);
            save_field(gen_out, field, parse_field_format(gen_format));
            out << "wrote " << gen_out.string() << "\n";
            return kExitOk;
        }

        std::tie(job.width, job.height) = parse_size(size);
        job.field_format = parse_field_format(field_format);
        job.algorithm = algo == "lic" ? Algorithm::Lic : algo == "olic" ? Algorithm::Olic : Algorithm::Tosl;
        job.alpha = std::nullopt;
        if (alpha_opt->count() > 0) {
            job.alpha = alpha_opt->results().empty() ? 1.0 : alpha_opt->as<double>();
        }
        if (ramp_opt->count() > 0) job.ramp_rate = ramp_opt->as<double>();
        if (eps_opt->count() > 0) job.eps = eps_opt->as<double>();
        if (out_format.empty()) {
            out_format = job.out.extension() == ".png" ? "png" : "pgm";
        }
        job.out_format = out_format == "png" ? ImageFormat::Png : ImageFormat::Pgm;
        job.validate();
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidParameter;
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidParameter;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    }

    try {
        const RenderOutcome outcome = run(job);
        out << "wrote " << outcome.image_path.string() << " and " << outcome.manifest_path.string() << "\n";
        return kExitOk;
    } catch (const DegenerateFieldError& e) {
        err << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const DegenerateImageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidParameter;
    } catch (const std::exception& e) {
        // Unreadable or malformed input files and unwritable outputs.
        err << "error: " << e.what() << "\n";
        return kExitIo;
    }
}

}  // namespace flowtex
