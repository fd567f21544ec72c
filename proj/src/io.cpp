#include "colorcode/io.hpp"

#include <fstream>
#include <sstream>

#include "colorcode/errors.hpp"

namespace colorcode {

namespace {

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

Json lattice_to_json(const ColoredLattice& lattice) {
  const Geometry& g = lattice.geometry();
  Json out;
  out["geometry"] = {{"kind", lattice.is_torus() ? "torus" : "planar"}, {"bricks_x", g.bricks_x}, {"rows", g.rows}};
  Json vertices = Json::array();
  for (int v = 0; v < lattice.num_vertices(); ++v) {
    vertices.push_back({{"id", v}, {"x", lattice.vertex(v).x}, {"y", lattice.vertex(v).y}});
  }
  Json edges = Json::array();
  for (int e = 0; e < lattice.num_edges(); ++e) {
    const Edge& edge = lattice.edge(e);
    edges.push_back({{"id", e}, {"v1", edge.v1}, {"v2", edge.v2}, {"color", color_name(edge.color)}});
  }
  Json faces = Json::array();
  for (int f = 0; f < lattice.num_faces(); ++f) {
    const Face& face = lattice.face(f);
    faces.push_back({{"id", f},
                     {"vertices", face.vertices},
                     {"color", color_name(face.color)},
                     {"brick", {face.brick_i, face.brick_j}}});
  }
  out["vertices"] = std::move(vertices);
  out["edges"] = std::move(edges);
  out["faces"] = std::move(faces);
  return out;
}

ColoredLattice lattice_from_json(const Json& j) {
  const Json geometry_json = field<Json>(j, "geometry");
  Geometry geometry;
  const auto kind = field<std::string>(geometry_json, "kind");
  if (kind == "torus") {
    geometry.kind = GeometryKind::Torus;
  } else if (kind == "planar") {
    geometry.kind = GeometryKind::Planar;
  } else {
    throw ParseError("unknown geometry kind '" + kind + "'");
  }
  geometry.bricks_x = field<int>(geometry_json, "bricks_x");
  geometry.rows = field<int>(geometry_json, "rows");

  auto checked_id = [](const Json& item, std::size_t expected) {
    if (field<std::size_t>(item, "id") != expected) throw ParseError("ids must be consecutive from 0");
  };
  std::vector<Vertex> vertices;
  for (const Json& item : field<Json>(j, "vertices")) {
    checked_id(item, vertices.size());
    vertices.push_back({field<int>(item, "x"), field<int>(item, "y")});
  }
  const auto num_vertices = static_cast<int>(vertices.size());
  auto checked_vertex = [num_vertices](int v) {
    if (v < 0 || v >= num_vertices) throw ParseError("vertex id " + std::to_string(v) + " out of range");
    return v;
  };
  std::vector<Edge> edges;
  for (const Json& item : field<Json>(j, "edges")) {
    checked_id(item, edges.size());
    edges.push_back({checked_vertex(field<int>(item, "v1")), checked_vertex(field<int>(item, "v2")),
                     parse_color(field<std::string>(item, "color"))});
  }
  std::vector<Face> faces;
  for (const Json& item : field<Json>(j, "faces")) {
    checked_id(item, faces.size());
    Face face;
    face.vertices = field<std::vector<int>>(item, "vertices");
    for (int v : face.vertices) checked_vertex(v);
    face.color = parse_color(field<std::string>(item, "color"));
    const auto brick = field<std::vector<int>>(item, "brick");
    if (brick.size() != 2) throw ParseError("brick must be [i, j]");
    face.brick_i = brick[0];
    face.brick_j = brick[1];
    faces.push_back(std::move(face));
  }
  return ColoredLattice(geometry, std::move(vertices), std::move(edges), std::move(faces));
}

Json operator_to_json(const PauliOperator& p) {
  return {{"n", p.num_qubits()}, {"phase", p.phase()}, {"x", p.x_part().to_hex()}, {"z", p.z_part().to_hex()}};
}

PauliOperator operator_from_json(const Json& j) {
  const auto n = field<std::size_t>(j, "n");
  return PauliOperator(BitVector::from_hex(field<std::string>(j, "x"), n),
                       BitVector::from_hex(field<std::string>(j, "z"), n), field<int>(j, "phase"));
}

Json string_to_json(const ColorString& s) {
  return {{"color", color_name(s.color)}, {"faces", s.faces}, {"vertices", s.vertices}, {"closed", s.closed}};
}

ColorString string_from_json(const ColoredLattice& lattice, const Json& j) {
  const Color color = parse_color(field<std::string>(j, "color"));
  const auto faces = field<std::vector<int>>(j, "faces");
  for (int f : faces) {
    if (f < 0 || f >= lattice.num_faces()) throw ParseError("face id " + std::to_string(f) + " out of range");
  }
  ColorString s = string_through(lattice, color, faces);
  if (j.contains("vertices")) {
    const auto vertices = field<std::vector<int>>(j, "vertices");
    if (vertices != s.vertices) {
      // Accept any valid choice of edges between the listed faces.
      if (vertices.size() != s.vertices.size()) throw ParseError("string vertex list has the wrong length");
      for (std::size_t k = 0; k + 1 < vertices.size(); k += 2) {
        const auto e = lattice.edge_between(vertices[k], vertices[k + 1]);
        if (!e || lattice.edge(*e).color != color || !lattice.face_contains(faces[k / 2], vertices[k]) ||
            !lattice.face_contains(faces[k / 2 + 1], vertices[k + 1])) {
          throw ParseError("string vertices do not join consecutive faces by a " + std::string(color_name(color)) +
                           " edge");
        }
      }
      s.vertices = vertices;
    }
  }
  if (j.contains("closed")) s.closed = field<bool>(j, "closed");
  if (s.closed && s.start() != s.end()) throw ParseError("closed string must end where it starts");
  return s;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path.string());
  out << text;
}

}  // namespace colorcode
