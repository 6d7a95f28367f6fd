// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "flowtex/cli.hpp"
#include "flowtex/enhance.hpp"
#include "flowtex/field.hpp"
#include "flowtex/image_io.hpp"
#include "flowtex/render_lic.hpp"
#include "flowtex/render_tosl.hpp"
#include "flowtex/sobol.hpp"
#include "flowtex/texture.hpp"
#include "flowtex/tracer.hpp"

using namespace flowtex;

namespace {

struct Verdict {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, double a) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

VectorField2D uniform(int w, int h, Vec2 v) {
    return VectorField2D(w, h, std::vector<Vec2>(static_cast<std::size_t>(w) * h, v));
}

double pearson(const std::vector<double>& a, const std::vector<double>& b) {
    const double n = static_cast<double>(a.size());
    const double ma = std::accumulate(a.begin(), a.end(), 0.0) / n;
    const double mb = std::accumulate(b.begin(), b.end(), 0.0) / n;
    double sab = 0, saa = 0, sbb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        sab += (a[i] - ma) * (b[i] - mb);
        saa += (a[i] - ma) * (a[i] - ma);
        sbb += (b[i] - mb) * (b[i] - mb);
    }
    return sab / std::sqrt(saa * sbb);
}

// Balance of rising versus falling steps along +x, in [-1, 1]. Tones are
// compared on the circle when `cyclic` so a mod-256 wrap counts as a rise.
double ramp_direction(const GrayImage& img, bool cyclic) {
    long up = 0, down = 0;
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x + 1 < img.width(); ++x) {
            int d = int(img.at(x + 1, y)) - int(img.at(x, y));
            if (cyclic) d = ((d + 128) % 256 + 256) % 256 - 128;
            up += d > 0;
            down += d < 0;
        }
    }
    return up + down == 0 ? 0.0 : double(up - down) / double(up + down);
}

// 1. LIC on a uniform field equals a centered moving average.
Verdict lic_oracle() {
    const int n = 64, len = 13, half = len / 2;
    const auto noise = white_noise(n, n, 20240601);
    const auto out = lic(uniform(n, n, {1, 0}), noise, {KernelShape::Box, len}, {len, 0.5, 1e-12});
    int worst = 0;
    for (int y = 0; y < n; ++y) {
        for (int x = half; x < n - half; ++x) {
            int sum = 0;
            for (int k = -half; k <= half; ++k) sum += noise.at(x + k, y);
            const int expected = static_cast<int>(std::floor(sum / double(len) + 0.5));
            worst = std::max(worst, std::abs(expected - int(out.at(x, y))));
        }
    }
    return {worst <= 1, "max deviation " + std::to_string(worst) + " tones"};
}

// 2. Constant texture stays constant.
Verdict constant_texture() {
    const int n = 128;
    const auto field = make_vortex(n, n, {n / 2.0, n / 2.0}, Rotation::CounterClockwise);
    const auto out = lic(field, GrayImage(n, n, 128), {KernelShape::Box, 31}, {31, 0.5, default_eps(field)});
    int worst = 0;
    for (auto p : out.pixels()) worst = std::max(worst, std::abs(int(p) - 128));
    return {worst <= 1, "max deviation " + std::to_string(worst) + " tones"};
}

// 3. Magnitude filter against a table evaluated by hand.
Verdict enhance_table() {
    // rows: P_in = 200, 150, 60, 1 (H = 200); columns: M / M_max = 0, 0.25, 0.5, 1; alpha = 1
    const GrayImage img(4, 4, {200, 200, 200, 200, 150, 150, 150, 150, 60, 60, 60, 60, 1, 1, 1, 1});
    MagnitudeMap mags{4, 4, {}, 2.0};
    for (int r = 0; r < 4; ++r) mags.m.insert(mags.m.end(), {0.0, 0.5, 1.0, 2.0});
    const std::vector<std::uint8_t> hand{0, 64, 128, 255,  //
                                         0, 48, 96,  191,  //
                                         0, 19, 38,  77,   //
                                         0, 0,  1,   1};
    const auto out = enhance_magnitude(img, mags, {1.0});
    int mismatches = 0;
    for (std::size_t i = 0; i < hand.size(); ++i) mismatches += out.pixels()[i] != hand[i];

    // alpha = 0 and M = M_max everywhere both reduce to round(P * 255 / H)
    const std::vector<std::uint8_t> flat{255, 255, 255, 255, 191, 191, 191, 191,
                                         77,  77,  77,  77,  1,   1,   1,   1};
    const auto a0 = enhance_magnitude(img, mags, {0.0});
    MagnitudeMap full{4, 4, std::vector<double>(16, 2.0), 2.0};
    const auto saturated = enhance_magnitude(img, full, {2.7});
    for (std::size_t i = 0; i < flat.size(); ++i) {
        mismatches += a0.pixels()[i] != flat[i];
        mismatches += saturated.pixels()[i] != flat[i];
    }
    return {mismatches == 0, std::to_string(mismatches) + " of 48 cells differ"};
}

// 4. alpha = 0 always reaches 255.
Verdict enhance_normalization() {
    std::mt19937_64 gen(77);
    int failures = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int w = 2 + int(gen() % 63), h = 2 + int(gen() % 63);
        const int top = 1 + int(gen() % 255);
        GrayImage img(w, h);
        for (auto& p : img.pixels()) p = static_cast<std::uint8_t>(gen() % (top + 1));
        img.pixels()[gen() % img.size()] = static_cast<std::uint8_t>(std::max(1, top));
        MagnitudeMap mags{w, h, std::vector<double>(img.size()), 0.0};
        std::uniform_real_distribution<double> u(0.0, 5.0);
        for (auto& m : mags.m) mags.m_max = std::max(mags.m_max, m = u(gen));
        failures += max_tone(enhance_magnitude(img, mags, {0.0})) != 255;
    }
    return {failures == 0, std::to_string(failures) + " of 100 images miss 255"};
}

// 5. Tones rise by exactly k per cell along the flow.
Verdict tosl_ramp() {
    const int n = 128;
    ToslConfig cfg;
    cfg.ramp_rate = 2.0;
    cfg.wrap = ToneWrap::Modulo256;
    cfg.tone_seed = 5;
    const auto res = tosl_detailed(uniform(n, n, {1, 0}), cfg, {cfg.length, 0.5, 1e-12});
    long pairs = 0, bad = 0;
    for (int y = 0; y < n; ++y) {
        for (int x = 0; x + 1 < n; ++x) {
            const auto i = res.image.index(x, y);
            const auto j = res.image.index(x + 1, y);
            if (res.owner[i] != res.owner[j]) continue;
            ++pairs;
            bad += (int(res.image.pixels()[j]) - int(res.image.pixels()[i]) + 256) % 256 != 2;
        }
    }
    return {pairs > 0 && bad == 0,
            std::to_string(bad) + " of " + std::to_string(pairs) + " same-streamline steps differ from 2"};
}

// 6. Oriented renderers reveal the flow sense, LIC does not.
Verdict orientation_sense() {
    const int n = 128;
    const auto fwd = uniform(n, n, {1, 0});
    const auto back = fwd.reversed();
    const TraceParams tp{31, 0.5, 1e-12};

    ToslConfig cfg;
    cfg.tone_seed = 3;
    const double t_fwd = ramp_direction(tosl(fwd, cfg, tp), true);
    const double t_back = ramp_direction(tosl(back, cfg, tp), true);

    const auto drops = droplet_texture(n, n, 4.0, 11, kDropletRadius);
    const double o_fwd = ramp_direction(olic(fwd, drops, tp), false);
    const double o_back = ramp_direction(olic(back, drops, tp), false);

    const auto noise = white_noise(n, n, 11);
    const bool lic_same = lic(fwd, noise, {KernelShape::Box, 31}, tp) == lic(back, noise, {KernelShape::Box, 31}, tp);

    const bool pass = t_fwd > 0 && t_back < 0 && o_fwd > 0 && o_back < 0 && lic_same;
    std::ostringstream s;
    s << "tosl " << fmt("%+.3f", t_fwd) << "/" << fmt("%+.3f", t_back) << ", olic " << fmt("%+.3f", o_fwd)
      << "/" << fmt("%+.3f", o_back) << ", lic " << (lic_same ? "identical" : "differs");
    return {pass, s.str()};
}

// Digits of the natural-order Sobol point i built directly from the generator
// matrices: identity for dimension 1, Pascal's triangle mod 2 for dimension 2.
Point2 sobol_direct(std::uint32_t i) {
    double x = 0, y = 0;
    for (int j = 0; j < 32; ++j) {
        const int xj = (i >> j) & 1;
        int yj = 0;
        for (int k = j; k < 32; ++k) {
            // C(k, j) is odd iff j is a bit-subset of k
            if (((i >> k) & 1) && ((j & k) == j)) yj ^= 1;
        }
        x += xj * std::ldexp(1.0, -(j + 1));
        y += yj * std::ldexp(1.0, -(j + 1));
    }
    return {x, y};
}

// 7. Seed fraction count and the first Sobol points.
Verdict seed_fraction() {
    const auto cells = seed_cells(100, 100, 0.30);
    std::vector<int> idx;
    for (auto c : cells) idx.push_back(c.y * 100 + c.x);
    std::sort(idx.begin(), idx.end());
    const bool distinct = std::adjacent_find(idx.begin(), idx.end()) == idx.end();

    const auto pts = sobol_2d(3);
    bool sobol_ok = pts.size() == 3;
    for (std::uint32_t n = 1; n <= 3 && sobol_ok; ++n) {
        const auto want = sobol_direct(n ^ (n >> 1));
        sobol_ok = pts[n - 1].x == want.x && pts[n - 1].y == want.y;
    }
    std::ostringstream s;
    s << cells.size() << " cells" << (distinct ? " distinct" : " with duplicates") << ", first points ";
    for (auto p : pts) s << "(" << p.x << "," << p.y << ")";
    return {cells.size() == 3000 && distinct && sobol_ok, s.str()};
}

std::vector<double> block_means(const std::vector<double>& v, int w, int h, int b) {
    std::vector<double> out;
    for (int by = 0; by + b <= h; by += b) {
        for (int bx = 0; bx + b <= w; bx += b) {
            double s = 0;
            for (int y = by; y < by + b; ++y)
                for (int x = bx; x < bx + b; ++x) s += v[static_cast<std::size_t>(y) * w + x];
            out.push_back(s / (b * b));
        }
    }
    return out;
}

// 8. The magnitude filter makes brightness follow field strength.
Verdict magnitude_rendering() {
    const int n = 256;
    const auto field = make_builtin_field("two-vortices", n, n);
    const auto mags = magnitude_map(field);
    ToslConfig cfg;
    cfg.tone_seed = derive_seeds(0).tones;
    const auto plain = tosl(field, cfg, {cfg.length, 0.5, default_eps(mags)});
    const auto enhanced = enhance_magnitude(plain, mags, {1.0});

    const auto to_d = [](const GrayImage& g) { return std::vector<double>(g.pixels().begin(), g.pixels().end()); };
    const auto m_blocks = block_means(mags.m, n, n, 8);
    const double r_enh = pearson(block_means(to_d(enhanced), n, n, 8), m_blocks);
    const double r_plain = pearson(block_means(to_d(plain), n, n, 8), m_blocks);
    return {r_enh > 0.8 && std::abs(r_plain) < 0.3,
            "r(enhanced) " + fmt("%.3f", r_enh) + ", r(plain) " + fmt("%.3f", r_plain)};
}

// Lag along the flow at which the tone autocorrelation first drops below 1/e.
double streak_length(const VectorField2D& field, const GrayImage& img, int max_lag) {
    const TraceParams tp{2 * max_lag + 1, 0.5, default_eps(field)};
    std::vector<std::vector<double>> a(max_lag + 1), b(max_lag + 1);
    std::mt19937_64 gen(9);
    for (int s = 0; s < 3000; ++s) {
        const Cell seed{int(gen() % img.width()), int(gen() % img.height())};
        const auto line = trace(field, seed, tp);
        const double base = img.at(seed.x, seed.y);
        int lag = 1;
        for (std::size_t k = line.seed_index() + 1; k < line.cells.size() && lag <= max_lag; ++k) {
            // first cell at or beyond each integer lag
            while (lag <= max_lag && line.cells[k].offset >= lag - 1e-9) {
                a[lag].push_back(base);
                b[lag].push_back(img.at(line.cells[k].cell.x, line.cells[k].cell.y));
                ++lag;
            }
        }
    }
    double prev = 1.0;
    for (int lag = 1; lag <= max_lag; ++lag) {
        const double r = pearson(a[lag], b[lag]);
        if (r < std::exp(-1.0)) return lag - 1 + (prev - std::exp(-1.0)) / (prev - r);
        prev = r;
    }
    return max_lag;
}

// 9. Longer streamlines give longer streaks.
Verdict streak_monotonicity() {
    const int n = 512;
    const auto field = make_builtin_field("vortex-cells", n, n);
    double prev = 0;
    bool increasing = true;
    std::ostringstream s;
    for (int len : {31, 71, 101}) {
        ToslConfig cfg;
        cfg.length = len;
        cfg.tone_seed = 21;
        const auto img = tosl(field, cfg, {len, 0.5, default_eps(field)});
        const double l = streak_length(field, img, 150);
        increasing = increasing && l > prev;
        prev = l;
        s << "L=" << len << ": " << fmt("%.2f", l) << " ";
    }
    return {increasing, s.str() + "cells"};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// 10. Same job, same bytes, whatever the tiling.
Verdict determinism() {
    const auto dir = std::filesystem::temp_directory_path() / "flowtex_acceptance";
    std::filesystem::create_directories(dir);
    RenderJob job;
    job.field = "two-vortices";
    job.width = 200;
    job.height = 150;
    job.seed = 1234;
    job.alpha = 1.0;
    std::string reference;
    int differing = 0, runs = 0;
    for (Algorithm algo : {Algorithm::Lic, Algorithm::Olic}) {
        job.algorithm = algo;
        reference.clear();
        for (int tiles : {1, 1, 2, 8}) {
            job.tiles = tiles;
            job.out = dir / ("det_" + std::to_string(runs++) + ".pgm");
            run(job);
            const auto bytes = slurp(job.out);
            if (reference.empty()) reference = bytes;
            differing += bytes != reference;
        }
    }
    job.algorithm = Algorithm::Tosl;
    job.out = dir / "det_tosl_a.pgm";
    run(job);
    const auto a = slurp(job.out);
    job.out = dir / "det_tosl_b.pgm";
    run(job);
    differing += slurp(job.out) != a;
    return {differing == 0, std::to_string(differing) + " of " + std::to_string(runs + 1) + " renders differ"};
}

// 11. Full-size LIC on one thread.
Verdict performance() {
    const int n = 512;
    const auto t0 = std::chrono::steady_clock::now();
    const auto field = make_builtin_field("vortex", n, n);
    const auto img = lic(field, white_noise(n, n, 1), {KernelShape::Box, 31}, {31, 0.5, default_eps(field)}, {1});
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return {secs < 10.0 && img.width() == n, fmt("%.2f s", secs)};
}

struct Criterion {
    const char* name;
    std::function<Verdict()> check;
    double time_limit;  // seconds; <= 0 for none
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"lic-moving-average-oracle", lic_oracle, 1.0},
        {"constant-texture-invariance", constant_texture, 1.0},
        {"magnitude-filter-table", enhance_table, 0.1},
        {"magnitude-filter-normalization", enhance_normalization, 0.0},
        {"tosl-linear-ramp", tosl_ramp, 2.0},
        {"orientation-sense", orientation_sense, 0.0},
        {"seed-fraction-and-sobol", seed_fraction, 0.0},
        {"magnitude-rendering", magnitude_rendering, 5.0},
        {"streak-length-monotonicity", streak_monotonicity, 0.0},
        {"determinism-and-tiling", determinism, 0.0},
        {"lic-performance-512", performance, 10.0},
    };
    int failed = 0;
    int number = 0;
    for (const auto& c : criteria) {
        ++number;
        const auto t0 = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.check();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.time_limit > 0 && secs >= c.time_limit) {
            v.pass = false;
            v.detail += fmt(" (over the %.1f s limit)", c.time_limit);
        }
        failed += !v.pass;
        std::printf("%s  %2d %-32s %s [%.3f s]\n", v.pass ? "PASS" : "FAIL", number, c.name, v.detail.c_str(),
                    secs);
    }
    std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
