#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "polyrecon/model.hpp"

namespace polyrecon {

/// Shortest round-trip-safe rendering with 17 significant digits; independent
/// of the C++ locale.
std::string format_real(double value);

/// Parses a finite decimal literal. Throws ParseError.
double parse_real(std::string_view token);

// POLY:   "POLY <n>" then n lines "<x> <y>".
// ANGLES: "PRA <n>" then, per vertex, "V <i> <deg>" and a line of deg-1 angles.
// GRAPH:  "VG <n>" then "E <i> <j>" per edge, i < j, sorted.
void write_poly(std::ostream& out, const Polygon& p);
Polygon read_poly(std::istream& in);
void write_angles(std::ostream& out, const AngleData& data);
AngleData read_angles(std::istream& in);
void write_graph(std::ostream& out, const VisibilityGraph& g);
VisibilityGraph read_graph(std::istream& in);

Polygon load_poly(const std::filesystem::path& path);
AngleData load_angles(const std::filesystem::path& path);
VisibilityGraph load_graph(const std::filesystem::path& path);
void save_poly(const std::filesystem::path& path, const Polygon& p);
void save_angles(const std::filesystem::path& path, const AngleData& data);
void save_graph(const std::filesystem::path& path, const VisibilityGraph& g);

/// Raised when a file cannot be opened or written.
class FileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace polyrecon
