#pragma once

#include <optional>
#include <vector>

#include "colorcode/lattice.hpp"
#include "colorcode/pauli.hpp"
#include "colorcode/stabilizer.hpp"

namespace colorcode {

// Same-color face path f_0 .. f_m. Consecutive faces f_k, f_{k+1} are joined by a `color` edge
// from vertices[2k] (on f_k) to vertices[2k+1] (on f_{k+1}). A single face is the null string.
struct ColorString {
  Color color = Color::Red;
  std::vector<int> faces;
  std::vector<int> vertices;
  bool closed = false;

  std::size_t steps() const { return faces.empty() ? 0 : faces.size() - 1; }
  int start() const { return faces.front(); }
  int end() const { return faces.back(); }
  bool operator==(const ColorString&) const = default;
};

// Builds the string following `links` (as produced by same_color_face_graph) from `start`.
ColorString string_from_links(const ColoredLattice& lattice, Color color, int start,
                              const std::vector<ColorLink>& links);
// Builds the string through the listed faces, using the lowest-index edge for each step.
ColorString string_through(const ColoredLattice& lattice, Color color, const std::vector<int>& faces);

// Shortest path; ties broken towards lower face indices, then lower edge indices.
ColorString find_string(const ColoredLattice& lattice, Color color, int start, int end);
ColorString find_string(const ColoredLattice& lattice, const ColorFaceGraph& graph, int start, int end);

// Concatenation; a.end() must equal b.start().
ColorString concat(const ColorString& a, const ColorString& b);
// Same path walked backwards.
ColorString reversed(const ColorString& s);

PauliOperator string_operator(const ColorString& s, PauliKind kind, std::size_t num_qubits);

// s1 = i^sign_phase * s2 * product(generators).
struct DeformationWitness {
  int sign_phase = 0;
  std::vector<int> generators;
};

// nullopt when the operators differ by something outside the stabilizer group.
std::optional<DeformationWitness> deformation_witness(const StabilizerGroup& group, const ColorString& s1,
                                                      const ColorString& s2, PauliKind kind,
                                                      std::size_t num_qubits);

struct WindingLoop {
  ColorString loop;
  std::vector<int> inside;    // non-`color` faces whose face operators multiply to the loop
  std::vector<int> enclosed;  // inside plus the `color` faces lying entirely within the loop
};

WindingLoop find_winding_loop(const ColoredLattice& lattice, const Region& region, Color color);
ColorString winding_loop(const ColoredLattice& lattice, const Region& region, Color color);

}  // namespace colorcode
