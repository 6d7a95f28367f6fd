#include "flowtex/field_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "flowtex/errors.hpp"

namespace flowtex {
namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> tokens;
    if (sep == ' ') {
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
            const std::size_t start = i;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
            if (i > start) tokens.push_back(line.substr(start, i - start));
        }
        return tokens;
    }
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == sep) {
            tokens.push_back(line.substr(start, i - start));
            start = i + 1;
        }
    }
    return tokens;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

template <typename T>
T parse_number(std::string_view token, std::size_t line, const char* what) {
    T value{};
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (!token.empty() && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc{} || ptr != last) {
        throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(token) + "'");
    }
    return value;
}

double parse_component(std::string_view token, std::size_t line) {
    const double v = parse_number<double>(token, line, "a number");
    if (!std::isfinite(v)) {
        throw ValidationError("line " + std::to_string(line) + ": non-finite component '" +
                              std::string(token) + "'");
    }
    return v;
}

void append_double(std::string& out, double v) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, ptr);
}

// Iterates content lines, skipping comments and blank lines.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    std::optional<std::string_view> next() {
        while (std::getline(in_, buffer_)) {
            ++line_;
            const std::string_view s = trim(buffer_);
            if (s.empty() || s.front() == '#') continue;
            return s;
        }
        ++line_;
        return std::nullopt;
    }
    std::size_t line() const noexcept { return line_; }

private:
    std::istream& in_;
    std::string buffer_;
    std::size_t line_ = 0;
};

VectorField2D read_text_grid(std::istream& in) {
    LineReader reader(in);
    const auto header = reader.next();
    if (!header) throw ParseError(reader.line(), "missing '<width> <height>' header");
    const auto dims = split(*header, ' ');
    if (dims.size() != 2) throw ParseError(reader.line(), "header must be '<width> <height>'");
    const int width = parse_number<int>(dims[0], reader.line(), "an integer width");
    const int height = parse_number<int>(dims[1], reader.line(), "an integer height");
    if (width < 2 || height < 2) {
        throw ParseError(reader.line(), "field dimensions must be at least 2x2");
    }

    const std::size_t count = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    std::vector<Vec2> data;
    data.reserve(std::min<std::size_t>(count, std::size_t{1} << 24));
    while (data.size() < count) {
        const auto row = reader.next();
        if (!row) {
            throw ParseError(reader.line(), "expected " + std::to_string(count) + " vector rows, got " +
                                                std::to_string(data.size()));
        }
        const auto tokens = split(*row, ' ');
        if (tokens.size() != 2) {
            throw ParseError(reader.line(), "expected '<vx> <vy>', got " +
                                                std::to_string(tokens.size()) + " tokens");
        }
        data.push_back({parse_component(tokens[0], reader.line()),
                        parse_component(tokens[1], reader.line())});
    }
    if (reader.next()) throw ParseError(reader.line(), "unexpected data after the last row");
    return VectorField2D(width, height, std::move(data));
}

VectorField2D read_csv(std::istream& in) {
    LineReader reader(in);
    const auto header = reader.next();
    if (!header || *header != "x,y,vx,vy") {
        throw ParseError(reader.line(), "expected header 'x,y,vx,vy'");
    }
    struct Row {
        int x, y;
        Vec2 v;
        std::size_t line;
    };
    std::vector<Row> rows;
    int width = 0;
    int height = 0;
    while (const auto line = reader.next()) {
        const auto tokens = split(*line, ',');
        if (tokens.size() != 4) {
            throw ParseError(reader.line(), "expected 4 comma-separated values, got " +
                                                std::to_string(tokens.size()));
        }
        Row r{parse_number<int>(trim(tokens[0]), reader.line(), "an integer x"),
              parse_number<int>(trim(tokens[1]), reader.line(), "an integer y"),
              {parse_component(trim(tokens[2]), reader.line()),
               parse_component(trim(tokens[3]), reader.line())},
              reader.line()};
        if (r.x < 0 || r.y < 0) throw ParseError(reader.line(), "negative cell coordinate");
        width = std::max(width, r.x + 1);
        height = std::max(height, r.y + 1);
        rows.push_back(r);
    }
    if (width < 2 || height < 2) {
        throw ParseError(reader.line(), "field dimensions must be at least 2x2");
    }
    const std::size_t count = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    std::vector<Vec2> data(count);
    std::vector<bool> seen(count, false);
    for (const Row& r : rows) {
        const std::size_t i = static_cast<std::size_t>(r.y) * width + r.x;
        if (seen[i]) {
            throw ParseError(r.line, "duplicate cell (" + std::to_string(r.x) + "," +
                                         std::to_string(r.y) + ")");
        }
        seen[i] = true;
        data[i] = r.v;
    }
    if (rows.size() != count) {
        throw ParseError(reader.line(), "expected " + std::to_string(count) + " cells, got " +
                                            std::to_string(rows.size()));
    }
    return VectorField2D(width, height, std::move(data));
}

}  // namespace

FieldFormat parse_field_format(std::string_view name) {
    if (name == "text-grid") return FieldFormat::TextGrid;
    if (name == "csv") return FieldFormat::Csv;
    throw std::invalid_argument("unknown field format '" + std::string(name) + "'");
}

std::string_view to_string(FieldFormat format) {
    return format == FieldFormat::TextGrid ? "text-grid" : "csv";
}

VectorField2D read_field(std::istream& in, FieldFormat format) {
    return format == FieldFormat::TextGrid ? read_text_grid(in) : read_csv(in);
}

void write_field(std::ostream& out, const VectorField2D& field, FieldFormat format) {
    std::string text;
    if (format == FieldFormat::TextGrid) {
        text += std::to_string(field.width()) + " " + std::to_string(field.height()) + "\n";
        for (const Vec2& v : field.data()) {
            append_double(text, v.vx);
            text += ' ';
            append_double(text, v.vy);
            text += '\n';
        }
    } else {
        text += "x,y,vx,vy\n";
        for (int y = 0; y < field.height(); ++y) {
            for (int x = 0; x < field.width(); ++x) {
                const Vec2& v = field.at(x, y);
                text += std::to_string(x) + "," + std::to_string(y) + ",";
                append_double(text, v.vx);
                text += ',';
                append_double(text, v.vy);
                text += '\n';
            }
        }
    }
    out << text;
}

VectorField2D load_field(const std::filesystem::path& path, FieldFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open field file " + path.string());
    return read_field(in, format);
}

void save_field(const std::filesystem::path& path, const VectorField2D& field, FieldFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot create field file " + path.string());
    write_field(out, field, format);
    if (!out.flush()) throw IoError("failed writing field file " + path.string());
}

}  // namespace flowtex
