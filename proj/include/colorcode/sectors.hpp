#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "colorcode/labels.hpp"
#include "colorcode/lattice.hpp"
#include "colorcode/stabilizer.hpp"
#include "colorcode/strings.hpp"

namespace colorcode {

// Sign per loop type, indexed 3 * color + kind (kinds ordered x, y, z).
struct DetectorSignature {
  std::array<int, 9> signs{1, 1, 1, 1, 1, 1, 1, 1, 1};

  int at(Color c, PauliKind k) const { return signs[static_cast<std::size_t>(3 * color_index(c) + static_cast<int>(k))]; }
  bool is_vacuum() const;
  DetectorSignature operator*(const DetectorSignature& other) const;
  bool operator==(const DetectorSignature&) const = default;
  bool operator<(const DetectorSignature& other) const { return signs < other.signs; }
};

std::string to_string(const DetectorSignature& sig);  // e.g. "+++|+--|+--"

// Commutation signs of p with every kind of the three loops.
DetectorSignature detector_signature(const ColoredLattice& lattice, const StabilizerGroup& group,
                                     const PauliOperator& p, const Region& region);

// Constituent (color, kind) strings of each label's reference configuration.
std::vector<std::pair<Color, PauliKind>> reference_constituents(SectorLabel a);

struct DetectorOptions {
  int region_radius = 1;
  int center_face = -1;  // -1: the face nearest the middle of the lattice
};

// Detector loops around one region together with the 16 reference excitations.
class SectorLab {
 public:
  SectorLab(const ColoredLattice& lattice, const StabilizerGroup& group, DetectorOptions options = {});

  const Region& region() const { return region_; }
  const WindingLoop& loop(Color c) const { return loops_[static_cast<std::size_t>(color_index(c))]; }

  // Throws GeometryUnrealizable if some excitation of p is enclosed by a loop without lying in the region.
  DetectorSignature signature(const PauliOperator& p) const;

  // Open string from a face in the region to a distant face of the same color.
  const ColorString& reference_string(Color c) const { return reference_strings_[static_cast<std::size_t>(color_index(c))]; }
  PauliOperator reference(SectorLabel a) const;
  const DetectorSignature& reference_signature(SectorLabel a) const {
    return reference_signatures_[static_cast<std::size_t>(label_index(a))];
  }

  SectorLabel classify(const DetectorSignature& sig) const;
  SectorLabel fuse_measure(SectorLabel a, SectorLabel b) const;

 private:
  const ColoredLattice* lattice_;
  const StabilizerGroup* group_;
  Region region_;
  std::array<WindingLoop, 3> loops_;
  std::vector<char> enclosed_any_;
  std::array<ColorString, 3> reference_strings_;
  std::array<DetectorSignature, kNumLabels> reference_signatures_;
  std::map<DetectorSignature, SectorLabel> table_;
};

enum class Orientation : std::uint8_t { LeftOf, RightOf };

Orientation parse_orientation(std::string_view s);
std::string_view orientation_name(Orientation o);

// Three vertical strings ordered red, green, blue from left to right. The second excitation is
// carried past (or away from) the first by a transport string up its column, across, and down.
class BraidingGeometry {
 public:
  // `separation`: half-bricks the transported excitation moves; a multiple of 6 in [6, 12].
  explicit BraidingGeometry(const ColoredLattice& lattice, int separation = 6);

  // Long string of the first excitation.
  const ColorString& anchor(Color c) const { return anchors_[static_cast<std::size_t>(color_index(c))]; }
  // Leg + connector + leg, moving an excitation of color c left or right.
  const ColorString& transport(Color c, Orientation o) const {
    return transports_[static_cast<std::size_t>(color_index(c))][o == Orientation::LeftOf ? 0 : 1];
  }

  PauliOperator anchor_operator(SectorLabel a) const;
  PauliOperator transport_operator(SectorLabel b, Orientation o) const;

 private:
  std::size_t n_;
  std::array<ColorString, 3> anchors_;
  std::array<std::array<ColorString, 2>, 3> transports_;
};

int braiding_sign(const BraidingGeometry& geometry, Color c1, PauliKind k1, Color c2, PauliKind k2,
                  Orientation orientation);
int braiding_sign(const BraidingGeometry& geometry, SectorLabel a, SectorLabel b, Orientation orientation);
int monodromy_measure(const BraidingGeometry& geometry, SectorLabel a, SectorLabel b);

struct FermionIdentity {
  SectorLabel fermion = SectorLabel::F1;
  std::pair<SectorLabel, SectorLabel> lhs;  // reference pair
  std::pair<SectorLabel, SectorLabel> rhs;  // alternative pair
  bool holds = false;
  Color stabilizer_column = Color::Red;  // column whose face operators deform lhs into rhs
  bool uses_k = false;
  bool uses_j = false;
  std::vector<int> residual_support;  // support of the local operator sigma
  PauliOperator lhs_operator;
  PauliOperator rhs_operator;
  PauliOperator deformation;  // product of face operators
  PauliOperator residual;     // lhs * deformation = residual * rhs
};

// Strings start on three adjacent faces (green, red, blue) and run N steps upward.
class FermionGeometry {
 public:
  FermionGeometry(const ColoredLattice& lattice, int truncation);

  int truncation() const { return truncation_; }
  const ColorString& column(Color c) const { return columns_[static_cast<std::size_t>(color_index(c))]; }
  // The same string without its first face.
  ColorString shortened(Color c) const;
  // Product of one face-operator type over faces 1..N of the column of color c.
  PauliOperator column_stabilizer(const StabilizerGroup& group, Color c, bool k, bool j) const;

  // Vertex id at brick-wall coordinates (x, y).
  int vertex_at(int x, int y) const;

 private:
  const ColoredLattice* lattice_;
  int truncation_;
  std::array<ColorString, 3> columns_;
};

// rx*bz*J = sigma*ry*gz with J the product of Z-type face operators along the red string and sigma the
// four-factor operator at the string ends. `with_stabilizers = false` drops J.
bool rx_bz_identity_holds(const ColoredLattice& lattice, const StabilizerGroup& group, int truncation,
                          bool with_stabilizers = true);

// Every listed alternative pair of each fermion against its reference pair.
std::vector<FermionIdentity> fermion_equivalence_check(const ColoredLattice& lattice, const StabilizerGroup& group,
                                                       int truncation);

// Alternative string pairs producing the same fermion.
std::vector<std::pair<SectorLabel, SectorLabel>> fermion_alternatives(SectorLabel fermion);

struct NonTracialityWitness {
  PauliOperator loop;    // red X loop around a green face
  PauliOperator first;   // green Z string leaving the face
  PauliOperator second;  // green Z string returning along another path
  UnitValue value;       // omega0(loop * first * second)
  bool reorder_negates = false;  // second * loop * first == -(loop * first * second)
};

NonTracialityWitness nontraciality_witness(const ColoredLattice& lattice, const StabilizerGroup& group);

}  // namespace colorcode
