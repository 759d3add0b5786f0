#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "vcmax/basis.hpp"
#include "vcmax/set_system.hpp"

namespace vcmax {

/// Points file: header "k=<k>", then one point per line as comma-separated
/// rationals or decimals ("1/3, 0.25").  '#' lines and blanks are skipped.
std::vector<Point> read_points(std::istream& in);
void write_points(std::ostream& out, const std::vector<Point>& points);

// Path helpers; throw InvalidInputError when a file cannot be opened.
std::vector<Point> read_points_file(const std::string& path);
void write_points_file(const std::string& path, const std::vector<Point>& points);
FunctionBasis read_basis_path(const std::string& path);
SetSystem read_set_system_file(const std::string& path);
void write_set_system_file(const std::string& path, const SetSystem& s);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace vcmax
