#include "polyrecon/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <system_error>

#include "polyrecon/errors.hpp"

namespace polyrecon {
namespace {

class Tokens {
 public:
  explicit Tokens(std::istream& in) : in_(in) {}

  bool next(std::string& token) { return static_cast<bool>(in_ >> token); }

  std::string require(std::string_view what) {
    std::string token;
    if (!next(token)) throw ParseError("unexpected end of input, expected " + std::string(what));
    return token;
  }

  void expect(std::string_view keyword) {
    const std::string token = require(keyword);
    if (token != keyword) {
      throw ParseError("expected '" + std::string(keyword) + "', found '" + token + "'");
    }
  }

  long long integer(std::string_view what) {
    const std::string token = require(what);
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw ParseError("expected integer " + std::string(what) + ", found '" + token + "'");
    }
    return value;
  }

  double real(std::string_view what) {
    const std::string token = require(what);
    return parse_real(token);
  }

 private:
  std::istream& in_;
};

int vertex_count(Tokens& tokens, std::string_view keyword) {
  tokens.expect(keyword);
  const long long n = tokens.integer("vertex count");
  if (n < 0 || n > std::numeric_limits<int>::max()) throw ParseError("vertex count out of range");
  return static_cast<int>(n);
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot open " + path.string());
  return in;
}

template <typename Write>
void save(const std::filesystem::path& path, Write&& write) {
  std::ofstream out(path);
  if (!out) throw FileError("cannot write " + path.string());
  write(out);
  out.flush();
  if (!out) throw FileError("failed writing " + path.string());
}

}  // namespace

std::string format_real(double value) {
  char buf[64];
  const auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  if (ec != std::errc{}) throw std::logic_error("to_chars failed");
  return std::string(buf, ptr);
}

double parse_real(std::string_view token) {
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last || !std::isfinite(value)) {
    throw ParseError("expected a finite decimal number, found '" + std::string(token) + "'");
  }
  return value;
}

void write_poly(std::ostream& out, const Polygon& p) {
  out << "POLY " << p.size() << '\n';
  for (const Point& v : p.vertices) {
    out << format_real(v.x) << ' ' << format_real(v.y) << '\n';
  }
}

Polygon read_poly(std::istream& in) {
  Tokens tokens(in);
  const int n = vertex_count(tokens, "POLY");
  Polygon p;
  p.vertices.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double x = tokens.real("x coordinate");
    const double y = tokens.real("y coordinate");
    p.vertices.push_back({x, y});
  }
  std::string extra;
  if (tokens.next(extra)) throw ParseError("trailing data after polygon: '" + extra + "'");
  return p;
}

void write_angles(std::ostream& out, const AngleData& data) {
  out << "PRA " << data.size() << '\n';
  for (int i = 0; i < data.size(); ++i) {
    const VertexAngles& v = data.vertices[static_cast<std::size_t>(i)];
    out << "V " << i << ' ' << v.degree << '\n';
    for (std::size_t t = 0; t < v.gaps.size(); ++t) {
      if (t > 0) out << ' ';
      out << format_real(v.gaps[t]);
    }
    out << '\n';
  }
}

AngleData read_angles(std::istream& in) {
  Tokens tokens(in);
  const int n = vertex_count(tokens, "PRA");
  AngleData data;
  data.vertices.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    tokens.expect("V");
    if (tokens.integer("vertex index") != i) {
      throw ParseError("vertex blocks must appear in order; expected V " + std::to_string(i));
    }
    const long long deg = tokens.integer("degree");
    if (deg < 1 || deg > n) throw ParseError("degree " + std::to_string(deg) + " out of range");
    VertexAngles& v = data.vertices[static_cast<std::size_t>(i)];
    v.degree = static_cast<int>(deg);
    v.gaps.reserve(static_cast<std::size_t>(deg - 1));
    for (long long t = 0; t + 1 < deg; ++t) v.gaps.push_back(tokens.real("angle"));
  }
  std::string extra;
  if (tokens.next(extra)) throw ParseError("trailing data after angles: '" + extra + "'");
  return data;
}

void write_graph(std::ostream& out, const VisibilityGraph& g) {
  out << "VG " << g.vertex_count() << '\n';
  for (const auto& [i, j] : g.edges()) out << "E " << i << ' ' << j << '\n';
}

VisibilityGraph read_graph(std::istream& in) {
  Tokens tokens(in);
  const int n = vertex_count(tokens, "VG");
  VisibilityGraph g(n);
  std::string token;
  while (tokens.next(token)) {
    if (token != "E") throw ParseError("expected 'E', found '" + token + "'");
    const long long i = tokens.integer("edge endpoint");
    const long long j = tokens.integer("edge endpoint");
    if (i < 0 || j < 0 || i >= n || j >= n || i == j) {
      throw ParseError("edge (" + std::to_string(i) + ", " + std::to_string(j) + ") invalid");
    }
    g.add_edge(static_cast<int>(i), static_cast<int>(j));
  }
  return g;
}

Polygon load_poly(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_poly(in);
}

AngleData load_angles(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_angles(in);
}

VisibilityGraph load_graph(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_graph(in);
}

void save_poly(const std::filesystem::path& path, const Polygon& p) {
  save(path, [&](std::ostream& out) { write_poly(out, p); });
}

void save_angles(const std::filesystem::path& path, const AngleData& data) {
  save(path, [&](std::ostream& out) { write_angles(out, data); });
}

void save_graph(const std::filesystem::path& path, const VisibilityGraph& g) {
  save(path, [&](std::ostream& out) { write_graph(out, g); });
}

}  // namespace polyrecon
