#include "colorcode/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <utility>

#include "colorcode/errors.hpp"

namespace colorcode {

namespace {

int floor_mod(int a, int m) { return ((a % m) + m) % m; }

// Color of the brick whose left side sits at half-brick offset x0.
Color brick_color(int x0) { return color_from_index(floor_mod(x0, 3)); }

int brick_offset(int i, int j) { return 2 * i + floor_mod(j, 2); }

// Color of an edge of the infinite brick wall, given unwrapped endpoint coordinates. An edge
// carries the one color not used by the two bricks it borders.
Color wall_edge_color(Vertex a, Vertex b) {
  if (a.y == b.y) {
    const int x = std::min(a.x, b.x);
    const int y = a.y;
    const int above = floor_mod(x - y, 2) == 0 ? x : x - 1;
    const int below = floor_mod(x - y + 1, 2) == 0 ? x : x - 1;
    return color_from_index(3 - color_index(brick_color(above)) - color_index(brick_color(below)));
  }
  return color_from_index(a.x - 1);
}

std::array<Vertex, 6> brick_cycle(int x0, int j) {
  return {Vertex{x0, j}, Vertex{x0 + 1, j}, Vertex{x0 + 2, j},
          Vertex{x0 + 2, j + 1}, Vertex{x0 + 1, j + 1}, Vertex{x0, j + 1}};
}

struct BrickCell {
  int i;
  int j;
};

// Assembles a lattice from complete bricks. `wrap` maps unwrapped coordinates onto the stored
// vertex coordinates (identity for planar patches).
template <typename Wrap>
ColoredLattice assemble(Geometry geometry, const std::vector<BrickCell>& bricks, Wrap wrap) {
  std::set<std::pair<int, int>> coords;  // (y, x) for row-major ordering
  for (const BrickCell& b : bricks) {
    for (Vertex v : brick_cycle(brick_offset(b.i, b.j), b.j)) {
      const Vertex w = wrap(v);
      coords.insert({w.y, w.x});
    }
  }
  std::vector<Vertex> vertices;
  std::map<std::pair<int, int>, int> id_of;
  for (const auto& [y, x] : coords) {
    id_of[{y, x}] = static_cast<int>(vertices.size());
    vertices.push_back({x, y});
  }
  auto vertex_id = [&](Vertex v) {
    const Vertex w = wrap(v);
    return id_of.at({w.y, w.x});
  };

  std::vector<Face> faces;
  std::map<std::pair<int, int>, Color> edge_colors;
  for (const BrickCell& b : bricks) {
    const int x0 = brick_offset(b.i, b.j);
    const auto cycle = brick_cycle(x0, b.j);
    Face face;
    face.color = brick_color(x0);
    face.brick_i = b.i;
    face.brick_j = b.j;
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const Vertex a = cycle[k];
      const Vertex c = cycle[(k + 1) % cycle.size()];
      face.vertices.push_back(vertex_id(a));
      const int u = vertex_id(a);
      const int v = vertex_id(c);
      edge_colors.emplace(std::minmax(u, v), wall_edge_color(a, c));
    }
    faces.push_back(std::move(face));
  }

  std::vector<Edge> edges;
  edges.reserve(edge_colors.size());
  for (const auto& [key, color] : edge_colors) edges.push_back({key.first, key.second, color});
  return ColoredLattice(geometry, std::move(vertices), std::move(edges), std::move(faces));
}

ColoredLattice torus_impl(int bricks_x, int rows) {
  const int width = 2 * bricks_x;
  std::vector<BrickCell> bricks;
  for (int j = 0; j < rows; ++j) {
    for (int i = 0; i < bricks_x; ++i) bricks.push_back({i, j});
  }
  return assemble(Geometry{GeometryKind::Torus, bricks_x, rows}, bricks, [&](Vertex v) {
    return Vertex{floor_mod(v.x, width), floor_mod(v.y, rows)};
  });
}

}  // namespace

std::string_view color_name(Color c) {
  switch (c) {
    case Color::Red:
      return "red";
    case Color::Green:
      return "green";
    case Color::Blue:
      return "blue";
  }
  return "?";
}

char color_letter(Color c) { return color_name(c)[0]; }

Color parse_color(std::string_view s) {
  if (s == "red" || s == "r" || s == "Red" || s == "R") return Color::Red;
  if (s == "green" || s == "g" || s == "Green" || s == "G") return Color::Green;
  if (s == "blue" || s == "b" || s == "Blue" || s == "B") return Color::Blue;
  throw ParseError("unknown color '" + std::string(s) + "'");
}

ColoredLattice::ColoredLattice(Geometry geometry, std::vector<Vertex> vertices, std::vector<Edge> edges,
                               std::vector<Face> faces)
    : geometry_(geometry),
      vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      faces_(std::move(faces)),
      vertex_faces_(vertices_.size()),
      vertex_edges_(vertices_.size()),
      face_neighbors_(faces_.size()) {
  const int n = num_vertices();
  auto check_vertex = [n](int v) {
    if (v < 0 || v >= n) throw InvalidLattice("vertex index " + std::to_string(v) + " out of range");
  };
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    check_vertex(edges_[e].v1);
    check_vertex(edges_[e].v2);
    if (edges_[e].v1 == edges_[e].v2) throw InvalidLattice("edge " + std::to_string(e) + " is a loop");
    vertex_edges_[static_cast<std::size_t>(edges_[e].v1)].push_back(static_cast<int>(e));
    vertex_edges_[static_cast<std::size_t>(edges_[e].v2)].push_back(static_cast<int>(e));
  }
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    for (int v : faces_[f].vertices) {
      check_vertex(v);
      auto& list = vertex_faces_[static_cast<std::size_t>(v)];
      if (list.empty() || list.back() != static_cast<int>(f)) list.push_back(static_cast<int>(f));
    }
  }
  for (auto& list : vertex_faces_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    const auto& cycle = faces_[f].vertices;
    std::set<int> neighbors;
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int u = cycle[k];
      const int v = cycle[(k + 1) % cycle.size()];
      for (int g : vertex_faces_[static_cast<std::size_t>(u)]) {
        if (g != static_cast<int>(f) && face_contains(g, v)) neighbors.insert(g);
      }
    }
    face_neighbors_[f].assign(neighbors.begin(), neighbors.end());
  }
}

std::optional<int> ColoredLattice::edge_between(int u, int v) const {
  for (int e : vertex_edges_.at(static_cast<std::size_t>(u))) {
    const Edge& ed = edges_[static_cast<std::size_t>(e)];
    if ((ed.v1 == u && ed.v2 == v) || (ed.v1 == v && ed.v2 == u)) return e;
  }
  return std::nullopt;
}

bool ColoredLattice::face_contains(int f, int v) const {
  const auto& list = vertex_faces_.at(static_cast<std::size_t>(v));
  return std::binary_search(list.begin(), list.end(), f);
}

std::optional<int> ColoredLattice::face_of_color_at(int v, Color c) const {
  for (int f : vertex_faces_.at(static_cast<std::size_t>(v))) {
    if (faces_[static_cast<std::size_t>(f)].color == c) return f;
  }
  return std::nullopt;
}

std::optional<int> ColoredLattice::face_at_brick(int i, int j) const {
  if (is_torus()) {
    i = floor_mod(i, geometry_.bricks_x);
    j = floor_mod(j, geometry_.rows);
  }
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    if (faces_[f].brick_i == i && faces_[f].brick_j == j) return static_cast<int>(f);
  }
  return std::nullopt;
}

std::array<double, 2> ColoredLattice::face_center(int f) const {
  const Face& face = faces_.at(static_cast<std::size_t>(f));
  return {static_cast<double>(brick_offset(face.brick_i, face.brick_j)) + 1.0, face.brick_j + 0.5};
}

ColoredLattice build_torus(int bricks_x, int rows) {
  if (bricks_x <= 0 || rows <= 0 || bricks_x % 6 != 0 || rows % 6 != 0) {
    throw SizeConstraintViolation("torus needs bricks_x and rows to be positive multiples of 6, got " +
                                  std::to_string(bricks_x) + "x" + std::to_string(rows));
  }
  return torus_impl(bricks_x, rows);
}

ColoredLattice build_torus_relaxed(int bricks_x, int rows) {
  if (bricks_x <= 0 || rows <= 0 || bricks_x % 3 != 0 || rows % 2 != 0) {
    throw SizeConstraintViolation("relaxed torus needs bricks_x % 3 == 0 and even rows, got " +
                                  std::to_string(bricks_x) + "x" + std::to_string(rows));
  }
  return torus_impl(bricks_x, rows);
}

ColoredLattice build_planar(int bricks_x, int rows) {
  if (bricks_x < 2 || rows < 2) {
    throw SizeConstraintViolation("planar patch needs at least 2x2 bricks, got " + std::to_string(bricks_x) +
                                  "x" + std::to_string(rows));
  }
  std::vector<BrickCell> bricks;
  for (int j = 0; j < rows; ++j) {
    for (int i = 0; i < bricks_x; ++i) bricks.push_back({i, j});
  }
  return assemble(Geometry{GeometryKind::Planar, bricks_x, rows}, bricks, [](Vertex v) { return v; });
}

std::string_view violation_kind_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::Degree:
      return "degree";
    case ViolationKind::FaceSize:
      return "face-size";
    case ViolationKind::FaceBoundary:
      return "face-boundary";
    case ViolationKind::ImproperColoring:
      return "improper-coloring";
    case ViolationKind::EdgeColor:
      return "edge-color";
    case ViolationKind::Counting:
      return "counting";
  }
  return "?";
}

int ValidationReport::count(ViolationKind kind) const {
  return static_cast<int>(std::count_if(violations.begin(), violations.end(),
                                        [kind](const Violation& v) { return v.kind == kind; }));
}

ValidationReport validate(const ColoredLattice& lattice) {
  ValidationReport report;
  const bool planar = lattice.geometry().kind == GeometryKind::Planar;

  for (int v = 0; v < lattice.num_vertices(); ++v) {
    const int deg = lattice.degree(v);
    if (deg == 3) continue;
    Violation violation{ViolationKind::Degree, {v},
                        "vertex " + std::to_string(v) + " has degree " + std::to_string(deg)};
    if (planar && deg < 3) {
      report.boundary_notes.push_back(std::move(violation));
    } else {
      report.violations.push_back(std::move(violation));
    }
  }

  for (int f = 0; f < lattice.num_faces(); ++f) {
    const auto& cycle = lattice.face(f).vertices;
    std::set<int> distinct(cycle.begin(), cycle.end());
    if (cycle.size() != 6 || distinct.size() != 6) {
      report.violations.push_back({ViolationKind::FaceSize, {f},
                                   "face " + std::to_string(f) + " has " + std::to_string(distinct.size()) +
                                       " distinct vertices"});
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int u = cycle[k];
      const int v = cycle[(k + 1) % cycle.size()];
      if (!lattice.edge_between(u, v)) {
        report.violations.push_back({ViolationKind::FaceBoundary, {f, u, v},
                                     "face " + std::to_string(f) + " boundary " + std::to_string(u) + "-" +
                                         std::to_string(v) + " is not an edge"});
      }
    }
  }

  // Same-colored adjacent faces, grouped into connected conflict clusters.
  {
    std::vector<int> component(static_cast<std::size_t>(lattice.num_faces()), -1);
    for (int f = 0; f < lattice.num_faces(); ++f) {
      if (component[static_cast<std::size_t>(f)] >= 0) continue;
      std::vector<int> members;
      std::queue<int> queue;
      queue.push(f);
      component[static_cast<std::size_t>(f)] = f;
      while (!queue.empty()) {
        const int g = queue.front();
        queue.pop();
        members.push_back(g);
        for (int h : lattice.face_neighbors(g)) {
          if (lattice.face(h).color == lattice.face(g).color && component[static_cast<std::size_t>(h)] < 0) {
            component[static_cast<std::size_t>(h)] = f;
            queue.push(h);
          }
        }
      }
      if (members.size() > 1) {
        std::sort(members.begin(), members.end());
        report.violations.push_back({ViolationKind::ImproperColoring, members,
                                     std::to_string(members.size()) + " adjacent faces share color " +
                                         std::string(color_name(lattice.face(f).color))});
      }
    }
  }

  for (int e = 0; e < lattice.num_edges(); ++e) {
    const Edge& edge = lattice.edge(e);
    std::vector<int> bordering;
    std::vector<int> at_v1;
    std::vector<int> at_v2;
    for (int f : lattice.faces_of_vertex(edge.v1)) {
      if (lattice.face_contains(f, edge.v2)) {
        bordering.push_back(f);
      } else {
        at_v1.push_back(f);
      }
    }
    for (int f : lattice.faces_of_vertex(edge.v2)) {
      if (!lattice.face_contains(f, edge.v1)) at_v2.push_back(f);
    }
    bool bad = false;
    for (int f : bordering) bad = bad || lattice.face(f).color == edge.color;
    for (const auto* ends : {&at_v1, &at_v2}) {
      if (ends->size() > 1) bad = true;
      for (int f : *ends) bad = bad || lattice.face(f).color != edge.color;
    }
    if (bad) {
      report.violations.push_back({ViolationKind::EdgeColor, {e},
                                   "edge " + std::to_string(e) + " colored " +
                                       std::string(color_name(edge.color)) +
                                       " does not match the faces it connects"});
    }
  }

  if (lattice.is_torus()) {
    const int v = lattice.num_vertices();
    if (2 * lattice.num_faces() != v || 2 * lattice.num_edges() != 3 * v) {
      report.violations.push_back({ViolationKind::Counting, {},
                                   "torus counts V=" + std::to_string(v) + " E=" +
                                       std::to_string(lattice.num_edges()) + " F=" +
                                       std::to_string(lattice.num_faces()) + " violate F=V/2, E=3V/2"});
    }
  }
  return report;
}

ColorFaceGraph same_color_face_graph(const ColoredLattice& lattice, Color c) {
  ColorFaceGraph graph;
  graph.color = c;
  graph.adjacency.resize(static_cast<std::size_t>(lattice.num_faces()));
  for (int f = 0; f < lattice.num_faces(); ++f) {
    if (lattice.face(f).color == c) graph.nodes.push_back(f);
  }
  for (int e = 0; e < lattice.num_edges(); ++e) {
    const Edge& edge = lattice.edge(e);
    if (edge.color != c) continue;
    const auto fu = lattice.face_of_color_at(edge.v1, c);
    const auto fv = lattice.face_of_color_at(edge.v2, c);
    if (!fu || !fv || *fu == *fv) continue;
    graph.adjacency[static_cast<std::size_t>(*fu)].push_back({*fv, e, edge.v1, edge.v2});
    graph.adjacency[static_cast<std::size_t>(*fv)].push_back({*fu, e, edge.v2, edge.v1});
  }
  for (auto& links : graph.adjacency) {
    std::sort(links.begin(), links.end(), [](const ColorLink& a, const ColorLink& b) {
      return std::tie(a.face, a.edge) < std::tie(b.face, b.edge);
    });
  }
  return graph;
}

Region::Region(const ColoredLattice& lattice, std::vector<int> faces) : faces_(std::move(faces)) {
  std::sort(faces_.begin(), faces_.end());
  faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
  for (int f : faces_) {
    if (f < 0 || f >= lattice.num_faces()) throw InvalidRegion("face " + std::to_string(f) + " out of range");
  }
  if (faces_.empty()) return;
  std::set<int> seen{faces_.front()};
  std::queue<int> queue;
  queue.push(faces_.front());
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop();
    for (int g : lattice.face_neighbors(f)) {
      if (contains(g) && seen.insert(g).second) queue.push(g);
    }
  }
  if (seen.size() != faces_.size()) throw InvalidRegion("region faces are not edge-connected");
}

bool Region::contains(int f) const { return std::binary_search(faces_.begin(), faces_.end(), f); }

std::vector<int> Region::interior_vertices(const ColoredLattice& lattice) const {
  std::set<int> out;
  for (int f : faces_) {
    for (int v : lattice.face(f).vertices) {
      const auto incident = lattice.faces_of_vertex(v);
      if (std::all_of(incident.begin(), incident.end(), [this](int g) { return contains(g); })) out.insert(v);
    }
  }
  return {out.begin(), out.end()};
}

std::vector<int> Region::boundary_ring(const ColoredLattice& lattice) const {
  std::set<int> out;
  for (int f : faces_) {
    for (int g : lattice.face_neighbors(f)) {
      if (!contains(g)) out.insert(g);
    }
  }
  return {out.begin(), out.end()};
}

Region disk_region(const ColoredLattice& lattice, int center, int radius) {
  if (center < 0 || center >= lattice.num_faces()) throw InvalidRegion("disk center out of range");
  std::vector<int> dist(static_cast<std::size_t>(lattice.num_faces()), -1);
  std::vector<int> faces;
  std::queue<int> queue;
  dist[static_cast<std::size_t>(center)] = 0;
  queue.push(center);
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop();
    faces.push_back(f);
    if (dist[static_cast<std::size_t>(f)] == radius) continue;
    for (int g : lattice.face_neighbors(f)) {
      if (dist[static_cast<std::size_t>(g)] < 0) {
        dist[static_cast<std::size_t>(g)] = dist[static_cast<std::size_t>(f)] + 1;
        queue.push(g);
      }
    }
  }
  return Region(lattice, std::move(faces));
}

}  // namespace colorcode
