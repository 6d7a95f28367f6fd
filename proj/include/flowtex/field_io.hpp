#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "flowtex/field.hpp"

namespace flowtex {

// text-grid: "<width> <height>" then width*height "<vx> <vy>" rows, row-major;
// '#' starts a comment line.
// csv: header "x,y,vx,vy", one row per cell in any order, each cell exactly once.
enum class FieldFormat { TextGrid, Csv };

FieldFormat parse_field_format(std::string_view name);
std::string_view to_string(FieldFormat format);

VectorField2D read_field(std::istream& in, FieldFormat format);
void write_field(std::ostream& out, const VectorField2D& field, FieldFormat format);

VectorField2D load_field(const std::filesystem::path& path, FieldFormat format);
void save_field(const std::filesystem::path& path, const VectorField2D& field,
                FieldFormat format);

}  // namespace flowtex
