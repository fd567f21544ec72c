#include <gtest/gtest.h>

#include "colorcode/errors.hpp"
#include "colorcode/oracle.hpp"
#include "colorcode/sampling.hpp"
#include "colorcode/stabilizer.hpp"
#include "colorcode/strings.hpp"

using namespace colorcode;

TEST(Stabilizer, Torus6x6GeneratorsAndRank) {
  const auto group = face_stabilizers(build_torus(6, 6));
  EXPECT_EQ(group.num_qubits(), 72U);
  EXPECT_EQ(group.num_generators(), 72U);
  EXPECT_EQ(group.rank(), 68U);
  for (const auto& g : group.generators()) {
    EXPECT_EQ(g.weight(), 6U);
    EXPECT_EQ(g.phase(), 0);
    EXPECT_EQ(multiply(g, g), PauliOperator::identity(72));
  }
}

TEST(Stabilizer, GroundSpaceDimension) {
  for (auto [bx, rows] : {std::pair{6, 6}, std::pair{12, 6}, std::pair{6, 12}, std::pair{12, 12}}) {
    const auto group = face_stabilizers(build_torus(bx, rows));
    EXPECT_EQ(group.rank(), 2 * group.num_faces() - 4);
    EXPECT_EQ(ground_space_dim(group), 16U);
    EXPECT_EQ(logical_qubits(group), 4);
  }
}

TEST(Stabilizer, PlanarPatchUsesOnlyFullFaces) {
  const auto lat = build_planar(4, 4);
  const auto group = face_stabilizers(lat);
  for (int f : group.stabilizer_faces()) EXPECT_EQ(lat.face(f).vertices.size(), 6U);
  // Reported, not checked against a genus formula.
  EXPECT_GE(ground_space_dim(group), 1U);
}

TEST(Stabilizer, MembershipSigns) {
  const auto group = face_stabilizers(build_torus(6, 6));
  const std::size_t n = group.num_qubits();
  const auto k0 = group.generators()[static_cast<std::size_t>(group.k_index(0))];
  const auto j0 = group.generators()[static_cast<std::size_t>(group.j_index(0))];
  auto m = group.membership(k0);
  EXPECT_TRUE(m.member);
  EXPECT_EQ(m.sign_phase, 0);
  m = group.membership(multiply(k0, j0).scaled(2));
  EXPECT_TRUE(m.member);
  EXPECT_EQ(m.sign_phase, 2);
  EXPECT_FALSE(group.membership(PauliOperator::single(0, PauliKind::X, n)).member);
  EXPECT_THROW(group.membership(PauliOperator(5)), DimensionMismatch);
}

TEST(Stabilizer, MembershipSignIsMultiplicative) {
  const auto group = face_stabilizers(build_torus(6, 6));
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    const auto p = random_group_element(group, rng);
    const auto q = random_group_element(group, rng);
    const auto mp = group.membership(p);
    const auto mq = group.membership(q);
    const auto mpq = group.membership(multiply(p, q));
    ASSERT_TRUE(mp.member && mq.member && mpq.member);
    EXPECT_EQ((mp.sign_phase + mq.sign_phase) % 4, mpq.sign_phase);
    EXPECT_EQ(multiply(group.product(mp.generators), PauliOperator::identity(group.num_qubits()).scaled(mp.sign_phase)), p);
  }
}

TEST(Stabilizer, Omega0OnGeneratorsAndSingles) {
  const auto group = face_stabilizers(build_torus(6, 6));
  for (const auto& g : group.generators()) EXPECT_EQ(group.omega0(g), UnitValue::Unit(0));
  for (std::size_t v = 0; v < group.num_qubits(); ++v) {
    for (PauliKind k : kAllKinds) EXPECT_TRUE(group.omega0(PauliOperator::single(v, k, group.num_qubits())).zero);
  }
  EXPECT_EQ(group.omega0(group.generators()[0].scaled(1)), UnitValue::Unit(1));
  EXPECT_EQ(to_string(UnitValue::Unit(3)), "-i");
  EXPECT_EQ(to_string(UnitValue::Zero()), "0");
}

TEST(Stabilizer, SyndromeExamples) {
  const auto lat = build_torus(6, 6);
  const auto group = face_stabilizers(lat);
  const std::size_t n = group.num_qubits();
  EXPECT_TRUE(group.syndrome(PauliOperator::identity(n)).empty());
  EXPECT_TRUE(group.syndrome(group.generators()[3]).empty());
  const auto s = find_string(lat, Color::Red, group.stabilizer_faces()[0], group.stabilizer_faces()[0]);
  EXPECT_TRUE(s.steps() == 0);
  int red_a = -1;
  int red_b = -1;
  for (int f = 0; f < lat.num_faces(); ++f) {
    if (lat.face(f).color != Color::Red) continue;
    if (red_a < 0) {
      red_a = f;
    } else {
      red_b = f;
    }
  }
  const auto str = find_string(lat, Color::Red, red_a, red_b);
  const Syndrome syn = group.syndrome(string_operator(str, PauliKind::X, n));
  ASSERT_EQ(syn.size(), 2U);
  EXPECT_EQ(syn[0], (FaceSyndrome{red_a, false, true}));
  EXPECT_EQ(syn[1], (FaceSyndrome{red_b, false, true}));
}

TEST(Stabilizer, NonzeroOmegaImpliesEmptySyndrome) {
  const auto group = face_stabilizers(build_torus(6, 6));
  Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    PauliOperator p = t % 2 ? random_group_element(group, rng) : random_pauli(group.num_qubits(), rng);
    if (!group.omega0(p).zero) EXPECT_TRUE(group.syndrome(p).empty());
  }
}

TEST(Stabilizer, FifteenLogicalCosets) {
  const auto group = face_stabilizers(build_torus(6, 6));
  const auto logicals = group.logical_basis();
  ASSERT_EQ(logicals.size(), 8U);
  // Phaseless products of the X-type (or Z-type) logical representatives: 16 cosets, 15 nontrivial.
  std::vector<PauliOperator> x_type;
  std::vector<PauliOperator> z_type;
  for (const auto& l : logicals) {
    EXPECT_TRUE(group.syndrome(l).empty());
    EXPECT_TRUE(group.omega0(l).zero);
    (l.z_part().none() ? x_type : z_type).push_back(l);
  }
  ASSERT_EQ(x_type.size(), 4U);
  ASSERT_EQ(z_type.size(), 4U);
  for (const auto* family : {&x_type, &z_type}) {
    int nontrivial = 0;
    for (int mask = 1; mask < 16; ++mask) {
      PauliOperator p = PauliOperator::identity(group.num_qubits());
      for (int i = 0; i < 4; ++i) {
        if (mask >> i & 1) p = multiply(p, (*family)[static_cast<std::size_t>(i)]);
      }
      if (group.syndrome(p).empty() && group.omega0(p).zero) ++nontrivial;
    }
    EXPECT_EQ(nontrivial, 15);
  }
}

TEST(Stabilizer, MicroTorusAgreesWithDenseTrace) {
  const auto group = face_stabilizers(build_torus_relaxed(3, 2));
  EXPECT_EQ(group.num_qubits(), 12U);
  EXPECT_EQ(ground_space_dim(group), 16U);
  EXPECT_EQ(dense_ground_dimension(group), 16U);
}

TEST(Stabilizer, NonTracialityWitnessAlgebra) {
  // A red X loop and two green Z strings closing up through it: the loop anticommutes with each string.
  const auto lat = build_torus(12, 12);
  const auto group = face_stabilizers(lat);
  const std::size_t n = group.num_qubits();
  const int center = *lat.face_at_brick(6, 6);
  int green = center;
  for (int f : lat.face_neighbors(center)) {
    if (lat.face(f).color == Color::Green) green = f;
  }
  if (lat.face(center).color == Color::Green) green = center;
  ASSERT_EQ(lat.face(green).color, Color::Green);
  const auto loop = string_operator(winding_loop(lat, disk_region(lat, green, 0), Color::Red), PauliKind::X, n);
  const auto graph = same_color_face_graph(lat, Color::Green);
  const int next = graph.adjacency[static_cast<std::size_t>(green)][0].face;
  const int other = graph.adjacency[static_cast<std::size_t>(next)][0].face == green
                        ? graph.adjacency[static_cast<std::size_t>(next)][1].face
                        : graph.adjacency[static_cast<std::size_t>(next)][0].face;
  const auto s1 = string_operator(string_through(lat, Color::Green, {green, next}), PauliKind::Z, n);
  const auto s2 = string_operator(concat(string_through(lat, Color::Green, {next, other}),
                                         find_string(lat, Color::Green, other, green)),
                                  PauliKind::Z, n);
  EXPECT_FALSE(commutes(loop, s1));
  EXPECT_FALSE(commutes(loop, s2));
  const auto ordered = multiply(multiply(loop, s1), s2);
  EXPECT_EQ(group.omega0(ordered), UnitValue::Unit(0));
  EXPECT_EQ(multiply(multiply(s2, loop), s1), ordered.scaled(2));
}
