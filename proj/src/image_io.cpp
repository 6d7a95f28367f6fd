#include "flowtex/image_io.hpp"

#include <png.h>

#include <cctype>
#include <fstream>
#include <iterator>
#include <string>

#include "flowtex/errors.hpp"

namespace flowtex {
namespace {

// Next whitespace-delimited header token, skipping '#' comments.
std::string header_token(const std::string& bytes, std::size_t& pos) {
    for (;;) {
        while (pos < bytes.size() && std::isspace(static_cast<unsigned char>(bytes[pos]))) ++pos;
        if (pos < bytes.size() && bytes[pos] == '#') {
            while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
            continue;
        }
        break;
    }
    const std::size_t start = pos;
    while (pos < bytes.size() && !std::isspace(static_cast<unsigned char>(bytes[pos]))) ++pos;
    return bytes.substr(start, pos - start);
}

int header_int(const std::string& bytes, std::size_t& pos, const char* what) {
    const std::string token = header_token(bytes, pos);
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos ||
        token.size() > 9) {
        throw IoError(std::string("PGM: bad ") + what + " '" + token + "'");
    }
    return std::stoi(token);
}

}  // namespace

std::string encode_pgm(const GrayImage& image) {
    std::string bytes = "P5\n" + std::to_string(image.width()) + " " +
                        std::to_string(image.height()) + "\n255\n";
    const auto px = image.pixels();
    bytes.append(reinterpret_cast<const char*>(px.data()), px.size());
    return bytes;
}

GrayImage decode_pgm(const std::string& bytes) {
    std::size_t pos = 0;
    if (header_token(bytes, pos) != "P5") throw IoError("PGM: expected binary P5 magic");
    const int width = header_int(bytes, pos, "width");
    const int height = header_int(bytes, pos, "height");
    const int maxval = header_int(bytes, pos, "maxval");
    if (maxval != 255) throw IoError("PGM: only maxval 255 is supported");
    if (width < 1 || height < 1) throw IoError("PGM: dimensions must be positive");
    ++pos;  // single whitespace byte before the raster
    const std::size_t count = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    if (bytes.size() < pos || bytes.size() - pos != count) {
        throw IoError("PGM: raster size does not match the header");
    }
    std::vector<std::uint8_t> pixels(bytes.begin() + static_cast<std::ptrdiff_t>(pos), bytes.end());
    return GrayImage(width, height, std::move(pixels));
}

void write_pgm(const GrayImage& image, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot create " + path.string());
    const std::string bytes = encode_pgm(image);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out.flush()) throw IoError("failed writing " + path.string());
}

GrayImage read_pgm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return decode_pgm(bytes);
}

void write_png(const GrayImage& image, const std::filesystem::path& path) {
    png_image png{};
    png.version = PNG_IMAGE_VERSION;
    png.width = static_cast<png_uint_32>(image.width());
    png.height = static_cast<png_uint_32>(image.height());
    png.format = PNG_FORMAT_GRAY;
    const std::string file = path.string();
    if (!png_image_write_to_file(&png, file.c_str(), 0, image.pixels().data(), 0, nullptr)) {
        const std::string message = png.message;
        png_image_free(&png);
        throw IoError("cannot write PNG " + file + ": " + message);
    }
}

GrayImage read_png(const std::filesystem::path& path) {
    png_image png{};
    png.version = PNG_IMAGE_VERSION;
    const std::string file = path.string();
    if (!png_image_begin_read_from_file(&png, file.c_str())) {
        throw IoError("cannot read PNG " + file + ": " + png.message);
    }
    png.format = PNG_FORMAT_GRAY;
    std::vector<std::uint8_t> pixels(PNG_IMAGE_SIZE(png));
    if (!png_image_finish_read(&png, nullptr, pixels.data(), 0, nullptr)) {
        const std::string message = png.message;
        png_image_free(&png);
        throw IoError("cannot decode PNG " + file + ": " + message);
    }
    return GrayImage(static_cast<int>(png.width), static_cast<int>(png.height), std::move(pixels));
}

}  // namespace flowtex
