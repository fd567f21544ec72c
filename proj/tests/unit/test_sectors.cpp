#include <gtest/gtest.h>

#include <set>

#include "colorcode/category.hpp"
#include "colorcode/errors.hpp"
#include "colorcode/sampling.hpp"
#include "colorcode/sectors.hpp"
#include "colorcode/tables.hpp"

using namespace colorcode;

namespace {

struct Torus12 {
  ColoredLattice lattice = build_torus(12, 12);
  StabilizerGroup group = face_stabilizers(lattice);
};

const Torus12& torus() {
  static const Torus12 t;
  return t;
}

const SectorLab& lab() {
  static const SectorLab l(torus().lattice, torus().group);
  return l;
}

const BraidingGeometry& braiding() {
  static const BraidingGeometry g(torus().lattice);
  return g;
}

SectorLabel L(const char* name) { return parse_label(name); }

}  // namespace

TEST(Sectors, VacuumSignature) {
  const auto sig = lab().signature(PauliOperator::identity(torus().group.num_qubits()));
  EXPECT_TRUE(sig.is_vacuum());
  EXPECT_EQ(lab().classify(sig), SectorLabel::One);
}

TEST(Sectors, RedXEndpointFlipsOtherColorsOtherKinds) {
  const auto sig = lab().reference_signature(L("rx"));
  for (Color c : kAllColors) {
    for (PauliKind k : kAllKinds) {
      const bool flipped = c != Color::Red && k != PauliKind::X;
      EXPECT_EQ(sig.at(c, k), flipped ? -1 : 1) << color_name(c) << kind_letter(k);
    }
  }
}

TEST(Sectors, SixteenDistinctSignatures) {
  std::set<DetectorSignature> seen;
  for (SectorLabel a : all_labels()) {
    seen.insert(lab().reference_signature(a));
    EXPECT_EQ(lab().classify(lab().reference_signature(a)), a);
  }
  EXPECT_EQ(seen.size(), 16U);
  DetectorSignature odd;
  odd.signs[0] = -1;
  EXPECT_THROW(lab().classify(odd), UnrealizableSignature);
}

TEST(Sectors, SignaturesFormAGroup) {
  for (SectorLabel a : all_labels()) {
    for (SectorLabel b : all_labels()) {
      const auto product = lab().reference_signature(a) * lab().reference_signature(b);
      EXPECT_EQ(lab().classify(product), category_fuse(a, b));
    }
  }
}

TEST(Sectors, CompositeEndpointClassifiesAsFermion) {
  const auto p = multiply(lab().reference(L("rx")), lab().reference(L("bz")));
  EXPECT_EQ(lab().classify(lab().signature(p)), L("f1"));
}

TEST(Sectors, EvenCrossingsAreInvisible) {
  // A string through the whole detector region has both endpoints outside every loop.
  const auto& lat = torus().lattice;
  const std::size_t n = torus().group.num_qubits();
  const int center = lab().region().faces().front();
  const auto graph = same_color_face_graph(lat, Color::Red);
  int a = -1;
  for (int f : graph.nodes) {
    if (lat.face(f).brick_i == lat.face(center).brick_i - 4 || a < 0) a = f;
  }
  const auto s = find_string(lat, Color::Red, lab().reference_string(Color::Red).end(),
                             lab().reference_string(Color::Red).end());
  EXPECT_TRUE(lab().signature(string_operator(s, PauliKind::X, n)).is_vacuum());
  const auto ref = lab().reference_string(Color::Red);
  const auto loop = concat(ref, reversed(ref));
  EXPECT_TRUE(lab().signature(string_operator(loop, PauliKind::Z, n)).is_vacuum());
}

TEST(Sectors, ExcitationBetweenRegionAndLoopsIsRejected) {
  const auto& lat = torus().lattice;
  const std::size_t n = torus().group.num_qubits();
  int inside = -1;
  for (int f : lab().loop(Color::Blue).enclosed) {
    if (!lab().region().contains(f) && lat.face(f).color == Color::Red) inside = f;
  }
  ASSERT_GE(inside, 0);
  const auto s = find_string(lat, Color::Red, inside, lab().reference_string(Color::Red).end());
  EXPECT_THROW(lab().signature(string_operator(s, PauliKind::X, n)), GeometryUnrealizable);
}

TEST(Sectors, SectorLocalityUnderDeformation) {
  // Moving the far endpoint of a reference string leaves the signature unchanged.
  const auto& lat = torus().lattice;
  const std::size_t n = torus().group.num_qubits();
  for (Color c : kAllColors) {
    const auto ref = lab().reference_string(c);
    const auto graph = same_color_face_graph(lat, c);
    for (const ColorLink& link : graph.adjacency[static_cast<std::size_t>(ref.end())]) {
      const auto moved = concat(ref, string_through(lat, c, {ref.end(), link.face}));
      for (PauliKind k : kAllKinds) {
        EXPECT_EQ(lab().signature(string_operator(moved, k, n)), lab().reference_signature(boson_label(c, k)));
      }
    }
  }
}

TEST(Sectors, FusionExamplesAndLaws) {
  EXPECT_EQ(lab().fuse_measure(L("rx"), L("ry")), L("rz"));
  EXPECT_EQ(lab().fuse_measure(L("f1"), L("f2")), L("gy"));
  for (SectorLabel a : all_labels()) {
    EXPECT_EQ(lab().fuse_measure(a, a), SectorLabel::One);
    EXPECT_EQ(lab().fuse_measure(SectorLabel::One, a), a);
    for (SectorLabel b : all_labels()) {
      EXPECT_EQ(lab().fuse_measure(a, b), lab().fuse_measure(b, a));
      for (SectorLabel c : {L("gx"), L("f4"), L("bz")}) {
        EXPECT_EQ(lab().fuse_measure(lab().fuse_measure(a, b), c), lab().fuse_measure(a, lab().fuse_measure(b, c)));
      }
    }
  }
}

TEST(Sectors, FusionTableMatchesGolden) {
  const auto golden = parse_label_table(COLORCODE_GOLDEN_DIR "/fusion.csv");
  EXPECT_EQ(fusion_table(lab()), golden);
  EXPECT_EQ(category_fusion_table(), golden);
}

TEST(Sectors, BraidingSignStructure) {
  const auto& g = braiding();
  EXPECT_EQ(braiding_sign(g, Color::Red, PauliKind::X, Color::Red, PauliKind::Z, Orientation::LeftOf), 1);
  EXPECT_EQ(braiding_sign(g, Color::Red, PauliKind::X, Color::Red, PauliKind::Z, Orientation::RightOf), 1);
  EXPECT_EQ(braiding_sign(g, Color::Red, PauliKind::X, Color::Blue, PauliKind::Z, Orientation::LeftOf), -1);
  for (SectorLabel a : all_labels()) {
    if (!is_colored_label(a)) continue;
    for (SectorLabel b : all_labels()) {
      if (!is_colored_label(b)) continue;
      for (Orientation o : {Orientation::LeftOf, Orientation::RightOf}) {
        const int ab = braiding_sign(g, a, b, o);
        if (label_color(a) == label_color(b) || label_kind(a) == label_kind(b)) EXPECT_EQ(ab, 1);
        if (ab == -1) EXPECT_EQ(braiding_sign(g, b, a, o), 1);
      }
    }
  }
}

TEST(Sectors, MonodromyTableMatchesGolden) {
  const auto golden = parse_sign_table(COLORCODE_GOLDEN_DIR "/monodromy.csv");
  EXPECT_EQ(monodromy_table(braiding()), golden);
  EXPECT_EQ(monodromy_measure(braiding(), L("rx"), L("gy")), -1);
  EXPECT_EQ(monodromy_measure(braiding(), L("f1"), L("f1")), 1);
  for (SectorLabel x : all_labels()) EXPECT_EQ(monodromy_measure(braiding(), SectorLabel::One, x), 1);
}

TEST(Sectors, HexagonConsistency) {
  for (SectorLabel f : {L("f1"), L("f2"), L("f3"), L("f4"), L("f5"), L("f6")}) {
    const auto parts = reference_constituents(f);
    for (SectorLabel x : all_labels()) {
      int product = 1;
      for (const auto& [c, k] : parts) product *= monodromy_measure(braiding(), boson_label(c, k), x);
      EXPECT_EQ(monodromy_measure(braiding(), f, x), product);
    }
  }
}

TEST(Sectors, BraidingNeedsRoom) {
  const auto small = build_torus(6, 6);
  EXPECT_THROW(BraidingGeometry{small}, GeometryUnrealizable);
  EXPECT_THROW(BraidingGeometry(torus().lattice, 4), GeometryUnrealizable);
}

TEST(Sectors, ExplicitFermionIdentity) {
  for (int n : {2, 3, 4}) {
    EXPECT_TRUE(rx_bz_identity_holds(torus().lattice, torus().group, n)) << n;
    EXPECT_FALSE(rx_bz_identity_holds(torus().lattice, torus().group, n, false)) << n;
  }
  EXPECT_THROW(rx_bz_identity_holds(torus().lattice, torus().group, 5), GeometryUnrealizable);
}

TEST(Sectors, FermionAlternativesAreLocallyEquivalent) {
  const auto& lat = torus().lattice;
  const auto& group = torus().group;
  const std::size_t n = group.num_qubits();
  const int truncation = 3;
  const auto identities = fermion_equivalence_check(lat, group, truncation);
  ASSERT_EQ(identities.size(), 12U);
  Rng rng(21);
  for (const auto& id : identities) {
    EXPECT_TRUE(id.holds);
    EXPECT_EQ(category_fuse(id.rhs.first, id.rhs.second), id.fermion);
    EXPECT_EQ(category_fuse(id.lhs.first, id.lhs.second), id.fermion);
    EXPECT_EQ(multiply(id.lhs_operator, id.deformation), multiply(id.residual, id.rhs_operator));
    EXPECT_LE(id.residual_support.size(), 4U);
    // Probes in the middle rows, away from the residual, see the same conjugated expectation.
    std::set<int> residual(id.residual_support.begin(), id.residual_support.end());
    int probes = 0;
    while (probes < 50) {
      PauliOperator a = PauliOperator::identity(n);
      for (int f = 0; f < lat.num_faces(); ++f) {
        const int row = lat.face(f).brick_j;
        const int x0 = 2 * lat.face(f).brick_i + (row & 1);
        if (row < 3 || row > 4 || x0 < 8 || x0 > 16) continue;
        const auto slot = group.slot_of_face(f);
        if (std::uniform_int_distribution<int>(0, 1)(rng)) a = multiply(a, group.generators()[static_cast<std::size_t>(group.k_index(*slot))]);
        if (std::uniform_int_distribution<int>(0, 1)(rng)) a = multiply(a, group.generators()[static_cast<std::size_t>(group.j_index(*slot))]);
      }
      bool clash = false;
      for (int v : support(a)) clash = clash || residual.count(v) > 0;
      if (clash) continue;
      ++probes;
      const auto left = multiply(multiply(adjoint(id.lhs_operator), a), id.lhs_operator);
      const auto right = multiply(multiply(adjoint(id.rhs_operator), a), id.rhs_operator);
      EXPECT_EQ(group.omega0(left), group.omega0(right));
    }
  }
}

TEST(Sectors, FermionAlternativeLists) {
  EXPECT_EQ(fermion_alternatives(L("f5")).size(), 2U);
  EXPECT_THROW(fermion_alternatives(L("rx")), ParseError);
}

TEST(Sectors, NonTraciality) {
  const auto w = nontraciality_witness(torus().lattice, torus().group);
  EXPECT_EQ(w.value, UnitValue::Unit(0));
  EXPECT_TRUE(w.reorder_negates);
  EXPECT_FALSE(commutes(w.loop, w.first));
  EXPECT_FALSE(commutes(w.loop, w.second));
}

TEST(Sectors, OrientationNames) {
  EXPECT_EQ(parse_orientation("left"), Orientation::LeftOf);
  EXPECT_EQ(orientation_name(Orientation::RightOf), "right");
  EXPECT_THROW(parse_orientation("up"), ParseError);
}
