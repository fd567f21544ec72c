#include <gtest/gtest.h>

#include <queue>

#include "colorcode/errors.hpp"
#include "colorcode/io.hpp"
#include "colorcode/sampling.hpp"
#include "colorcode/strings.hpp"

using namespace colorcode;

namespace {

int bfs_distance(const ColorFaceGraph& g, int a, int b) {
  std::vector<int> dist(g.adjacency.size(), -1);
  std::queue<int> q;
  dist[static_cast<std::size_t>(a)] = 0;
  q.push(a);
  while (!q.empty()) {
    const int f = q.front();
    q.pop();
    for (const ColorLink& l : g.adjacency[static_cast<std::size_t>(f)]) {
      if (dist[static_cast<std::size_t>(l.face)] < 0) {
        dist[static_cast<std::size_t>(l.face)] = dist[static_cast<std::size_t>(f)] + 1;
        q.push(l.face);
      }
    }
  }
  return dist[static_cast<std::size_t>(b)];
}

void expect_well_formed(const ColoredLattice& lat, const ColorString& s) {
  ASSERT_EQ(s.vertices.size(), 2 * s.steps());
  for (std::size_t k = 0; k < s.steps(); ++k) {
    const auto e = lat.edge_between(s.vertices[2 * k], s.vertices[2 * k + 1]);
    ASSERT_TRUE(e.has_value());
    EXPECT_EQ(lat.edge(*e).color, s.color);
    EXPECT_TRUE(lat.face_contains(s.faces[k], s.vertices[2 * k]));
    EXPECT_TRUE(lat.face_contains(s.faces[k + 1], s.vertices[2 * k + 1]));
  }
  for (int f : s.faces) EXPECT_EQ(lat.face(f).color, s.color);
}

}  // namespace

TEST(Strings, FindStringBasics) {
  const auto lat = build_torus(6, 6);
  const int red = same_color_face_graph(lat, Color::Red).nodes.front();
  const auto null = find_string(lat, Color::Red, red, red);
  EXPECT_EQ(null.steps(), 0U);
  EXPECT_TRUE(string_operator(null, PauliKind::X, 72).is_identity_up_to_phase());

  const auto graph = same_color_face_graph(lat, Color::Red);
  const int neighbour = graph.adjacency[static_cast<std::size_t>(red)].front().face;
  const auto step = find_string(lat, Color::Red, red, neighbour);
  EXPECT_EQ(step.faces.size(), 2U);
  EXPECT_EQ(step.vertices.size(), 2U);
  expect_well_formed(lat, step);

  const int green = same_color_face_graph(lat, Color::Green).nodes.front();
  EXPECT_THROW(find_string(lat, Color::Red, red, green), ColorMismatch);
}

TEST(Strings, PathLengthIsBfsDistance) {
  const auto lat = build_torus(12, 12);
  const auto graph = same_color_face_graph(lat, Color::Green);
  for (std::size_t i = 0; i < graph.nodes.size(); i += 5) {
    const int a = graph.nodes.front();
    const int b = graph.nodes[i];
    const auto s = find_string(lat, graph, a, b);
    EXPECT_EQ(static_cast<int>(s.steps()), bfs_distance(graph, a, b));
    expect_well_formed(lat, s);
  }
}

TEST(Strings, NoPathOnDisconnectedPatch) {
  const auto lat = build_planar(2, 2);
  const auto graph = same_color_face_graph(lat, Color::Red);
  bool tried = false;
  for (int a : graph.nodes) {
    for (int b : graph.nodes) {
      if (a != b && bfs_distance(graph, a, b) < 0) {
        EXPECT_THROW(find_string(lat, graph, a, b), NoPath);
        tried = true;
      }
    }
  }
  if (!tried) GTEST_SKIP() << "every red pair is connected on this patch";
}

TEST(Strings, YTypeIsLiteralProduct) {
  const auto lat = build_torus(6, 6);
  Rng rng(1);
  const auto s = random_open_string(lat, rng, Color::Blue);
  const std::size_t n = 72;
  EXPECT_EQ(string_operator(s, PauliKind::Y, n),
            multiply(string_operator(s, PauliKind::X, n), string_operator(s, PauliKind::Z, n)));
  EXPECT_EQ(string_operator(s, PauliKind::X, n).weight(), s.vertices.size());
}

TEST(Strings, EightVertexGreenString) {
  // Four steps give a support of eight vertices.
  const auto lat = build_torus(12, 12);
  const auto graph = same_color_face_graph(lat, Color::Green);
  const int a = graph.nodes.front();
  int b = -1;
  for (int f : graph.nodes) {
    if (bfs_distance(graph, a, f) == 4) {
      b = f;
      break;
    }
  }
  ASSERT_GE(b, 0);
  const auto s = find_string(lat, graph, a, b);
  const auto op = string_operator(s, PauliKind::X, 288);
  EXPECT_EQ(op.weight(), 8U);
  EXPECT_TRUE(op.z_part().none());
}

TEST(Strings, EndpointLaw) {
  const auto lat = build_torus(12, 12);
  const auto group = face_stabilizers(lat);
  Rng rng(2);
  for (int t = 0; t < 60; ++t) {
    const Color c = color_from_index(t);
    const PauliKind k = kAllKinds[(t / 3) % 3];
    const auto s = random_open_string(lat, rng, c);
    const Syndrome syn = group.syndrome(string_operator(s, k, group.num_qubits()));
    ASSERT_EQ(syn.size(), 2U);
    for (const auto& fs : syn) {
      EXPECT_TRUE(fs.face == s.start() || fs.face == s.end());
      EXPECT_EQ(fs.violates_k, k != PauliKind::X);
      EXPECT_EQ(fs.violates_j, k != PauliKind::Z);
    }
  }
}

TEST(Strings, SameColorStringsCommuteAndLoopsOfDistinctColorsCommute) {
  const auto lat = build_torus(12, 12);
  const std::size_t n = 288;
  Rng rng(4);
  for (int t = 0; t < 40; ++t) {
    const Color c = random_color(rng);
    const auto a = string_operator(random_open_string(lat, rng, c), random_kind(rng), n);
    const auto b = string_operator(random_open_string(lat, rng, c), random_kind(rng), n);
    EXPECT_TRUE(commutes(a, b));
    const auto la = string_operator(random_contractible_loop(lat, rng, Color::Red), random_kind(rng), n);
    const auto lb = string_operator(random_contractible_loop(lat, rng, Color::Blue), random_kind(rng), n);
    EXPECT_TRUE(commutes(la, lb));
  }
}

TEST(Strings, DeformationWitnesses) {
  const auto lat = build_torus(12, 12);
  const auto group = face_stabilizers(lat);
  const std::size_t n = group.num_qubits();
  Rng rng(6);
  const auto s = random_open_string(lat, rng, Color::Red);
  const auto same = deformation_witness(group, s, s, PauliKind::X, n);
  ASSERT_TRUE(same.has_value());
  EXPECT_TRUE(same->generators.empty());
  EXPECT_EQ(same->sign_phase, 0);

  for (int t = 0; t < 30; ++t) {
    const auto [s1, s2] = random_homotopic_pair(lat, rng, Color::Red);
    const auto w = deformation_witness(group, s1, s2, PauliKind::X, n);
    ASSERT_TRUE(w.has_value());
    for (int g : w->generators) {
      // Only X-type operators on faces of the other two colors.
      ASSERT_LT(static_cast<std::size_t>(g), group.num_faces());
      EXPECT_NE(lat.face(group.stabilizer_faces()[static_cast<std::size_t>(g)]).color, Color::Red);
    }
    EXPECT_EQ(multiply(string_operator(s2, PauliKind::X, n), group.product(w->generators)).scaled(w->sign_phase),
              string_operator(s1, PauliKind::X, n));
  }
}

TEST(Strings, WindingPairsAreNotHomotopic) {
  const auto lat = build_torus(12, 12);
  const auto group = face_stabilizers(lat);
  Rng rng(8);
  for (int t = 0; t < 6; ++t) {
    const int start = random_face_of_color(lat, color_from_index(t), rng);
    const auto v = vertical_cycle(lat, start);
    const auto h = horizontal_cycle(lat, start);
    EXPECT_TRUE(v.closed && h.closed);
    EXPECT_FALSE(deformation_witness(group, v, h, kAllKinds[t % 3], group.num_qubits()).has_value());
    // A non-contractible loop is not a stabilizer product.
    EXPECT_TRUE(group.omega0(string_operator(v, PauliKind::X, group.num_qubits())).zero);
  }
}

TEST(Strings, DeformationPreservesConjugatedExpectations) {
  const auto lat = build_torus(12, 12);
  const auto group = face_stabilizers(lat);
  const std::size_t n = group.num_qubits();
  Rng rng(9);
  for (int t = 0; t < 20; ++t) {
    const auto [s1, s2] = random_homotopic_pair(lat, rng, Color::Green);
    const PauliKind k = random_kind(rng);
    const auto w = deformation_witness(group, s1, s2, k, n);
    ASSERT_TRUE(w.has_value());
    const auto o1 = string_operator(s1, k, n);
    const auto o2 = string_operator(s2, k, n);
    // Probe: a random group element, which commutes with the witness product.
    for (int p = 0; p < 5; ++p) {
      auto a = random_group_element(group, rng);
      if (p % 2) a = multiply(a, string_operator(random_open_string(lat, rng, Color::Green), k, n));
      const auto c1 = multiply(multiply(adjoint(o1), a), o1);
      const auto c2 = multiply(multiply(adjoint(o2), a), o2);
      EXPECT_EQ(group.omega0(c1), group.omega0(c2));
    }
  }
}

TEST(Strings, WindingLoops) {
  const auto lat = build_torus(12, 12);
  const auto group = face_stabilizers(lat);
  int green = -1;
  for (int f = 0; f < lat.num_faces() && green < 0; ++f) {
    if (lat.face(f).color == Color::Green) green = f;
  }
  const Region single(lat, {green});
  const auto w = find_winding_loop(lat, single, Color::Red);
  EXPECT_TRUE(w.loop.closed);
  EXPECT_EQ(w.loop.steps(), 3U);  // the three red faces around a green face
  EXPECT_TRUE(std::find(w.enclosed.begin(), w.enclosed.end(), green) != w.enclosed.end());
  for (PauliKind k : kAllKinds) {
    const auto op = string_operator(w.loop, k, group.num_qubits());
    EXPECT_TRUE(group.syndrome(op).empty());
    EXPECT_EQ(group.omega0(op), UnitValue::Unit(0));
  }
  std::vector<int> everything(static_cast<std::size_t>(lat.num_faces()));
  for (int f = 0; f < lat.num_faces(); ++f) everything[static_cast<std::size_t>(f)] = f;
  EXPECT_THROW(winding_loop(lat, Region(lat, everything), Color::Red), NotEnclosable);
}

TEST(Strings, JsonRoundTrip) {
  const auto lat = build_torus(6, 6);
  Rng rng(10);
  const auto s = random_open_string(lat, rng, Color::Green);
  EXPECT_EQ(string_from_json(lat, string_to_json(s)), s);
  Json bad = string_to_json(s);
  bad["faces"] = std::vector<int>{s.start(), s.start()};
  EXPECT_THROW(string_from_json(lat, bad), Error);
}
