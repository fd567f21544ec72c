#include "colorcode/sampling.hpp"

#include "colorcode/errors.hpp"

namespace colorcode {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

int face_at_offset(const ColoredLattice& lattice, int x0, int row) {
  const auto f = lattice.face_at_brick((x0 - (row & 1)) / 2, row);
  if (!f) throw GeometryUnrealizable("cycle leaves the lattice");
  return *f;
}

int offset_of(const ColoredLattice& lattice, int f) {
  const Face& face = lattice.face(f);
  return 2 * face.brick_i + (face.brick_j & 1);
}

ColorString cycle(const ColoredLattice& lattice, int start, int steps, int dx, int dy_even, int dy_odd) {
  if (!lattice.is_torus()) throw GeometryUnrealizable("winding cycles need a torus");
  int x0 = offset_of(lattice, start);
  int row = lattice.face(start).brick_j;
  std::vector<int> faces{start};
  for (int s = 0; s < steps; ++s) {
    x0 += dx;
    row += (s % 2 == 0) ? dy_even : dy_odd;
    const int width = 2 * lattice.geometry().bricks_x;
    const int rows = lattice.geometry().rows;
    x0 = ((x0 % width) + width) % width;
    row = ((row % rows) + rows) % rows;
    faces.push_back(face_at_offset(lattice, x0, row));
  }
  if (faces.back() != start) throw GeometryUnrealizable("cycle does not close");
  return string_through(lattice, lattice.face(start).color, faces);
}

}  // namespace

PauliKind random_kind(Rng& rng) { return kAllKinds[uniform(rng, 0, 2)]; }

Color random_color(Rng& rng) { return color_from_index(uniform(rng, 0, 2)); }

int random_face_of_color(const ColoredLattice& lattice, Color c, Rng& rng) {
  while (true) {
    const int f = uniform(rng, 0, lattice.num_faces() - 1);
    if (lattice.face(f).color == c) return f;
  }
}

PauliOperator random_pauli(std::size_t n, Rng& rng) {
  BitVector x(n);
  BitVector z(n);
  for (std::size_t v = 0; v < n; ++v) {
    x.set(v, uniform(rng, 0, 1) == 1);
    z.set(v, uniform(rng, 0, 1) == 1);
  }
  return PauliOperator(std::move(x), std::move(z), uniform(rng, 0, 3));
}

PauliOperator random_group_element(const StabilizerGroup& group, Rng& rng) {
  std::vector<int> chosen;
  for (std::size_t g = 0; g < group.num_generators(); ++g) {
    if (uniform(rng, 0, 1) == 1) chosen.push_back(static_cast<int>(g));
  }
  return group.product(chosen).scaled(uniform(rng, 0, 3));
}

ColorString random_open_string(const ColoredLattice& lattice, Rng& rng, Color c) {
  const int a = random_face_of_color(lattice, c, rng);
  int b = a;
  while (b == a) b = random_face_of_color(lattice, c, rng);
  return find_string(lattice, c, a, b);
}

ColorString random_contractible_loop(const ColoredLattice& lattice, Rng& rng, Color c, int max_radius) {
  const int center = uniform(rng, 0, lattice.num_faces() - 1);
  return winding_loop(lattice, disk_region(lattice, center, uniform(rng, 0, max_radius)), c);
}

std::pair<ColorString, ColorString> random_homotopic_pair(const ColoredLattice& lattice, Rng& rng, Color c,
                                                          int max_total) {
  const ColorFaceGraph graph = same_color_face_graph(lattice, c);
  while (true) {
    const int start = random_face_of_color(lattice, c, rng);
    const int steps = uniform(rng, 1, std::max(1, max_total - 1));
    std::vector<int> faces{start};
    for (int s = 0; s < steps; ++s) {
      const auto& links = graph.adjacency[static_cast<std::size_t>(faces.back())];
      int next = faces.back();
      while (next == faces.back() || (faces.size() > 1 && next == faces[faces.size() - 2])) {
        next = links[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(links.size()) - 1))].face;
      }
      faces.push_back(next);
    }
    if (faces.back() == start) continue;
    ColorString walk = string_through(lattice, c, faces);
    ColorString shortest = find_string(lattice, graph, start, faces.back());
    if (walk.steps() + shortest.steps() > static_cast<std::size_t>(max_total)) continue;
    return {std::move(walk), std::move(shortest)};
  }
}

ColorString vertical_cycle(const ColoredLattice& lattice, int start) {
  return cycle(lattice, start, lattice.geometry().rows / 2, 0, 2, 2);
}

ColorString horizontal_cycle(const ColoredLattice& lattice, int start) {
  return cycle(lattice, start, 2 * lattice.geometry().bricks_x / 3, 3, 1, -1);
}

}  // namespace colorcode
