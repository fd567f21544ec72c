#include "colorcode/strings.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "colorcode/errors.hpp"

namespace colorcode {

namespace {

void require_color(const ColoredLattice& lattice, int f, Color color) {
  if (f < 0 || f >= lattice.num_faces()) throw IndexOutOfRange("face " + std::to_string(f) + " out of range");
  if (lattice.face(f).color != color) {
    throw ColorMismatch("face " + std::to_string(f) + " is " + std::string(color_name(lattice.face(f).color)) +
                        ", expected " + std::string(color_name(color)));
  }
}

// The two faces of a vertex that are not of `color`.
std::vector<int> other_faces(const ColoredLattice& lattice, int v, Color color) {
  std::vector<int> out;
  for (int f : lattice.faces_of_vertex(v)) {
    if (lattice.face(f).color != color) out.push_back(f);
  }
  return out;
}

std::optional<int> color_partner(const ColoredLattice& lattice, int v, Color color) {
  for (int e : lattice.edges_of_vertex(v)) {
    const Edge& edge = lattice.edge(e);
    if (edge.color == color) return edge.v1 == v ? edge.v2 : edge.v1;
  }
  return std::nullopt;
}

struct LoopAttempt {
  bool ok = false;
  ColorString loop;
};

// Boundary of the face set `inside` as a single closed `color` string, if it is one.
LoopAttempt trace_boundary(const ColoredLattice& lattice, const std::vector<char>& inside, Color color) {
  LoopAttempt out;
  std::vector<int> on_loop;
  std::vector<char> marked(static_cast<std::size_t>(lattice.num_vertices()), 0);
  for (int v = 0; v < lattice.num_vertices(); ++v) {
    const auto others = other_faces(lattice, v, color);
    if (others.size() != 2) return out;
    if (inside[static_cast<std::size_t>(others[0])] != inside[static_cast<std::size_t>(others[1])]) {
      marked[static_cast<std::size_t>(v)] = 1;
      on_loop.push_back(v);
    }
  }
  if (on_loop.empty()) return out;

  // Each loop face must be crossed exactly once: two marked vertices.
  std::map<int, std::vector<int>> per_face;
  for (int v : on_loop) {
    const auto f = lattice.face_of_color_at(v, color);
    if (!f) return out;
    per_face[*f].push_back(v);
  }
  for (const auto& [f, vs] : per_face) {
    if (vs.size() != 2) return out;
  }

  const int start_face = per_face.begin()->first;
  ColorString loop;
  loop.color = color;
  loop.closed = true;
  loop.faces.push_back(start_face);
  int current = per_face.at(start_face)[0];
  const int stop = per_face.at(start_face)[1];
  std::size_t visited = 0;
  while (true) {
    const auto partner = color_partner(lattice, current, color);
    if (!partner || !marked[static_cast<std::size_t>(*partner)]) return out;
    const int next_face = *lattice.face_of_color_at(*partner, color);
    loop.vertices.push_back(current);
    loop.vertices.push_back(*partner);
    loop.faces.push_back(next_face);
    visited += 2;
    if (*partner == stop) break;
    const auto& pair = per_face.at(next_face);
    current = pair[0] == *partner ? pair[1] : pair[0];
    if (visited > on_loop.size()) return out;
  }
  if (visited != on_loop.size()) return out;  // several disjoint cycles
  out.ok = true;
  out.loop = std::move(loop);
  return out;
}

}  // namespace

ColorString string_from_links(const ColoredLattice& lattice, Color color, int start,
                              const std::vector<ColorLink>& links) {
  require_color(lattice, start, color);
  ColorString s;
  s.color = color;
  s.faces.push_back(start);
  for (const ColorLink& link : links) {
    const Edge& edge = lattice.edge(link.edge);
    if (edge.color != color) throw ColorMismatch("link edge has the wrong color");
    if (!lattice.face_contains(s.faces.back(), link.from_vertex) || !lattice.face_contains(link.face, link.to_vertex)) {
      throw InvalidLattice("link does not join consecutive faces");
    }
    s.vertices.push_back(link.from_vertex);
    s.vertices.push_back(link.to_vertex);
    s.faces.push_back(link.face);
  }
  s.closed = s.faces.size() > 1 && s.faces.front() == s.faces.back();
  return s;
}

ColorString string_through(const ColoredLattice& lattice, Color color, const std::vector<int>& faces) {
  if (faces.empty()) throw InvalidRegion("a string needs at least one face");
  const ColorFaceGraph graph = same_color_face_graph(lattice, color);
  std::vector<ColorLink> links;
  for (std::size_t k = 0; k + 1 < faces.size(); ++k) {
    require_color(lattice, faces[k], color);
    const auto& adjacency = graph.adjacency[static_cast<std::size_t>(faces[k])];
    const auto it = std::find_if(adjacency.begin(), adjacency.end(),
                                 [&](const ColorLink& l) { return l.face == faces[k + 1]; });
    if (it == adjacency.end()) {
      throw NoPath("faces " + std::to_string(faces[k]) + " and " + std::to_string(faces[k + 1]) +
                   " are not joined by a " + std::string(color_name(color)) + " edge");
    }
    links.push_back(*it);
  }
  return string_from_links(lattice, color, faces.front(), links);
}

ColorString find_string(const ColoredLattice& lattice, Color color, int start, int end) {
  return find_string(lattice, same_color_face_graph(lattice, color), start, end);
}

ColorString find_string(const ColoredLattice& lattice, const ColorFaceGraph& graph, int start, int end) {
  require_color(lattice, start, graph.color);
  require_color(lattice, end, graph.color);
  std::vector<std::optional<ColorLink>> parent(static_cast<std::size_t>(lattice.num_faces()));
  std::vector<int> previous(static_cast<std::size_t>(lattice.num_faces()), -1);
  std::vector<char> seen(static_cast<std::size_t>(lattice.num_faces()), 0);
  std::queue<int> queue;
  queue.push(start);
  seen[static_cast<std::size_t>(start)] = 1;
  while (!queue.empty() && !seen[static_cast<std::size_t>(end)]) {
    const int f = queue.front();
    queue.pop();
    for (const ColorLink& link : graph.adjacency[static_cast<std::size_t>(f)]) {
      if (seen[static_cast<std::size_t>(link.face)]) continue;
      seen[static_cast<std::size_t>(link.face)] = 1;
      parent[static_cast<std::size_t>(link.face)] = link;
      previous[static_cast<std::size_t>(link.face)] = f;
      queue.push(link.face);
    }
  }
  if (!seen[static_cast<std::size_t>(end)]) {
    throw NoPath("no " + std::string(color_name(graph.color)) + " path from face " + std::to_string(start) +
                 " to face " + std::to_string(end));
  }
  std::vector<ColorLink> links;
  for (int f = end; f != start; f = previous[static_cast<std::size_t>(f)]) {
    links.push_back(*parent[static_cast<std::size_t>(f)]);
  }
  std::reverse(links.begin(), links.end());
  return string_from_links(lattice, graph.color, start, links);
}

ColorString concat(const ColorString& a, const ColorString& b) {
  if (a.color != b.color) throw ColorMismatch("cannot join strings of different colors");
  if (a.end() != b.start()) throw InvalidRegion("strings do not share an endpoint face");
  ColorString out = a;
  out.faces.insert(out.faces.end(), b.faces.begin() + 1, b.faces.end());
  out.vertices.insert(out.vertices.end(), b.vertices.begin(), b.vertices.end());
  out.closed = out.faces.size() > 1 && out.faces.front() == out.faces.back();
  return out;
}

ColorString reversed(const ColorString& s) {
  ColorString out = s;
  std::reverse(out.faces.begin(), out.faces.end());
  std::reverse(out.vertices.begin(), out.vertices.end());
  return out;
}

PauliOperator string_operator(const ColorString& s, PauliKind kind, std::size_t num_qubits) {
  if (kind == PauliKind::Y) {
    return multiply(PauliOperator::on_support(s.vertices, PauliKind::X, num_qubits),
                    PauliOperator::on_support(s.vertices, PauliKind::Z, num_qubits));
  }
  return PauliOperator::on_support(s.vertices, kind, num_qubits);
}

std::optional<DeformationWitness> deformation_witness(const StabilizerGroup& group, const ColorString& s1,
                                                      const ColorString& s2, PauliKind kind,
                                                      std::size_t num_qubits) {
  if (s1.color != s2.color) throw ColorMismatch("deformation needs strings of one color");
  const PauliOperator op1 = string_operator(s1, kind, num_qubits);
  const PauliOperator op2 = string_operator(s2, kind, num_qubits);
  const Membership m = group.membership(multiply(inverse(op2), op1));
  if (!m.member) return std::nullopt;
  return DeformationWitness{m.sign_phase, m.generators};
}

WindingLoop find_winding_loop(const ColoredLattice& lattice, const Region& region, Color color) {
  if (region.empty()) throw NotEnclosable("empty region");
  const auto num_faces = static_cast<std::size_t>(lattice.num_faces());
  std::size_t non_color_total = 0;
  for (const Face& f : lattice.faces()) non_color_total += f.color != color ? 1 : 0;

  std::vector<char> seed(num_faces, 0);
  for (int f : region.faces()) {
    if (lattice.face(f).color != color) {
      seed[static_cast<std::size_t>(f)] = 1;
    } else {
      for (int g : lattice.face_neighbors(f)) seed[static_cast<std::size_t>(g)] = 1;
    }
  }

  // Grow the inside set by face distance until its boundary is a single simple loop.
  std::vector<char> grown = seed;
  for (int radius = 0;; ++radius) {
    if (radius > 0) {
      std::vector<char> next = grown;
      for (std::size_t f = 0; f < num_faces; ++f) {
        if (!grown[f]) continue;
        for (int g : lattice.face_neighbors(static_cast<int>(f))) {
          if (lattice.face(g).color != color) next[static_cast<std::size_t>(g)] = 1;
        }
      }
      grown = std::move(next);
    }
    std::vector<char> inside = grown;
    // Fill any loop face whose ring is fragmented (crossed more than once).
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t h = 0; h < num_faces; ++h) {
        if (lattice.face(static_cast<int>(h)).color != color) continue;
        int crossings = 0;
        for (int v : lattice.face(static_cast<int>(h)).vertices) {
          const auto others = other_faces(lattice, v, color);
          if (others.size() == 2 &&
              inside[static_cast<std::size_t>(others[0])] != inside[static_cast<std::size_t>(others[1])]) {
            ++crossings;
          }
        }
        if (crossings > 2) {
          for (int g : lattice.face_neighbors(static_cast<int>(h))) {
            if (!inside[static_cast<std::size_t>(g)]) {
              inside[static_cast<std::size_t>(g)] = 1;
              changed = true;
            }
          }
        }
      }
    }
    std::size_t count = 0;
    for (std::size_t f = 0; f < num_faces; ++f) count += inside[f] ? 1 : 0;
    if (2 * count >= non_color_total) {
      throw NotEnclosable("no contractible " + std::string(color_name(color)) + " loop encloses the region");
    }
    // Planar patches: the inside set must stay clear of the outer boundary.
    bool touches_boundary = false;
    for (std::size_t f = 0; f < num_faces && !touches_boundary; ++f) {
      if (!inside[f]) continue;
      touches_boundary = lattice.face_neighbors(static_cast<int>(f)).size() < 6;
      for (int g : lattice.face_neighbors(static_cast<int>(f))) {
        touches_boundary = touches_boundary || lattice.face_neighbors(g).size() < 6;
      }
    }
    if (touches_boundary) {
      throw NotEnclosable("region is too close to the patch boundary for a " + std::string(color_name(color)) +
                          " loop");
    }
    LoopAttempt attempt = trace_boundary(lattice, inside, color);
    if (!attempt.ok) continue;

    WindingLoop out;
    out.loop = std::move(attempt.loop);
    std::vector<char> enclosed = inside;
    for (std::size_t h = 0; h < num_faces; ++h) {
      if (lattice.face(static_cast<int>(h)).color != color) continue;
      const auto ring = lattice.face_neighbors(static_cast<int>(h));
      if (std::all_of(ring.begin(), ring.end(), [&](int g) { return inside[static_cast<std::size_t>(g)] != 0; })) {
        enclosed[h] = 1;
      }
    }
    bool covers = true;
    for (int f : region.faces()) covers = covers && enclosed[static_cast<std::size_t>(f)];
    if (!covers) continue;
    for (std::size_t f = 0; f < num_faces; ++f) {
      if (inside[f]) out.inside.push_back(static_cast<int>(f));
      if (enclosed[f]) out.enclosed.push_back(static_cast<int>(f));
    }
    return out;
  }
}

ColorString winding_loop(const ColoredLattice& lattice, const Region& region, Color color) {
  return find_winding_loop(lattice, region, color).loop;
}

}  // namespace colorcode
