#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace colorcode {

enum class Color : std::uint8_t { Red = 0, Green = 1, Blue = 2 };

inline constexpr std::array<Color, 3> kAllColors = {Color::Red, Color::Green, Color::Blue};

constexpr int color_index(Color c) { return static_cast<int>(c); }
constexpr Color color_from_index(int i) { return static_cast<Color>(((i % 3) + 3) % 3); }

std::string_view color_name(Color c);   // "red", "green", "blue"
char color_letter(Color c);             // 'r', 'g', 'b'
Color parse_color(std::string_view s);  // accepts names and single letters

enum class GeometryKind : std::uint8_t { Torus, Planar };

struct Geometry {
  GeometryKind kind = GeometryKind::Torus;
  int bricks_x = 0;
  int rows = 0;
  bool operator==(const Geometry&) const = default;
};

struct Vertex {
  int x = 0;
  int y = 0;
};

struct Edge {
  int v1 = 0;
  int v2 = 0;
  Color color = Color::Red;
};

struct Face {
  std::vector<int> vertices;  // boundary cycle, 6 entries on a legal lattice
  Color color = Color::Red;
  int brick_i = 0;
  int brick_j = 0;
};

// Immutable colored trivalent lattice. Adjacency tables are derived once in the constructor.
class ColoredLattice {
 public:
  ColoredLattice(Geometry geometry, std::vector<Vertex> vertices, std::vector<Edge> edges,
                 std::vector<Face> faces);

  const Geometry& geometry() const { return geometry_; }
  bool is_torus() const { return geometry_.kind == GeometryKind::Torus; }

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_faces() const { return static_cast<int>(faces_.size()); }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Face>& faces() const { return faces_; }
  const Vertex& vertex(int v) const { return vertices_.at(static_cast<std::size_t>(v)); }
  const Edge& edge(int e) const { return edges_.at(static_cast<std::size_t>(e)); }
  const Face& face(int f) const { return faces_.at(static_cast<std::size_t>(f)); }

  std::span<const int> faces_of_vertex(int v) const { return vertex_faces_[static_cast<std::size_t>(v)]; }
  std::span<const int> edges_of_vertex(int v) const { return vertex_edges_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(vertex_edges_[static_cast<std::size_t>(v)].size()); }

  std::optional<int> edge_between(int u, int v) const;
  // Faces sharing at least one boundary edge with f, ascending.
  std::span<const int> face_neighbors(int f) const { return face_neighbors_[static_cast<std::size_t>(f)]; }
  bool face_contains(int f, int v) const;
  // The face of color c incident to v, if any.
  std::optional<int> face_of_color_at(int v, Color c) const;
  std::optional<int> face_at_brick(int i, int j) const;

  // Planar drawing position of a face center in half-brick units (unwrapped brick-wall embedding).
  std::array<double, 2> face_center(int f) const;

 private:
  Geometry geometry_;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<Face> faces_;
  std::vector<std::vector<int>> vertex_faces_;
  std::vector<std::vector<int>> vertex_edges_;
  std::vector<std::vector<int>> face_neighbors_;
};

// Brick-wall torus; bricks_x and rows must both be positive multiples of 6.
ColoredLattice build_torus(int bricks_x, int rows);
// Same embedding with only the structural minimum enforced (bricks_x % 3 == 0, rows even).
// Used for micro fixtures that are too small for the size formula; callers must validate.
ColoredLattice build_torus_relaxed(int bricks_x, int rows);
// Open-boundary patch of complete bricks; bricks_x >= 2 and rows >= 2.
ColoredLattice build_planar(int bricks_x, int rows);

enum class ViolationKind : std::uint8_t {
  Degree,          // vertex degree != 3 (on a torus, or in the interior of a patch)
  FaceSize,        // face does not have 6 distinct vertices
  FaceBoundary,    // consecutive face vertices not joined by an edge
  ImproperColoring,
  EdgeColor,
  Counting,        // torus count identities F = V/2, E = 3V/2
};

std::string_view violation_kind_name(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<int> indices;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  std::vector<Violation> boundary_notes;  // planar boundary vertices of degree < 3

  bool ok() const { return violations.empty(); }
  int count(ViolationKind kind) const;
};

ValidationReport validate(const ColoredLattice& lattice);

// A link of the same-color face graph: the c-edge `edge` joins `from_vertex` (on the source face)
// to `to_vertex` (on `face`).
struct ColorLink {
  int face = 0;
  int edge = 0;
  int from_vertex = 0;
  int to_vertex = 0;
};

struct ColorFaceGraph {
  Color color = Color::Red;
  std::vector<int> nodes;                        // faces of this color, ascending
  std::vector<std::vector<ColorLink>> adjacency;  // indexed by face id; empty for other colors
};

ColorFaceGraph same_color_face_graph(const ColoredLattice& lattice, Color c);

// A finite edge-connected set of faces.
class Region {
 public:
  Region() = default;
  Region(const ColoredLattice& lattice, std::vector<int> faces);

  const std::vector<int>& faces() const { return faces_; }
  bool contains(int f) const;
  bool empty() const { return faces_.empty(); }
  std::size_t size() const { return faces_.size(); }

  // Vertices all of whose incident faces lie in the region.
  std::vector<int> interior_vertices(const ColoredLattice& lattice) const;
  // Faces outside the region that share an edge with it.
  std::vector<int> boundary_ring(const ColoredLattice& lattice) const;

 private:
  std::vector<int> faces_;  // sorted, unique
};

// Faces within `radius` face-adjacency steps of `center`.
Region disk_region(const ColoredLattice& lattice, int center, int radius);

}  // namespace colorcode
