#pragma once

#include <random>
#include <utility>

#include "colorcode/lattice.hpp"
#include "colorcode/pauli.hpp"
#include "colorcode/stabilizer.hpp"
#include "colorcode/strings.hpp"

namespace colorcode {

using Rng = std::mt19937_64;

PauliKind random_kind(Rng& rng);
Color random_color(Rng& rng);
int random_face_of_color(const ColoredLattice& lattice, Color c, Rng& rng);

// Uniform Pauli monomial with a uniform phase.
PauliOperator random_pauli(std::size_t n, Rng& rng);
// Product of a random subset of generators with a uniform phase.
PauliOperator random_group_element(const StabilizerGroup& group, Rng& rng);

// Shortest string between two distinct random faces of one color.
ColorString random_open_string(const ColoredLattice& lattice, Rng& rng, Color c);
// Boundary loop of a random disk; contractible by construction.
ColorString random_contractible_loop(const ColoredLattice& lattice, Rng& rng, Color c, int max_radius = 2);

// A non-backtracking random walk and a shortest path with the same ends, total length at most
// `max_total`. Short enough loops are contractible on the lattices used here.
std::pair<ColorString, ColorString> random_homotopic_pair(const ColoredLattice& lattice, Rng& rng, Color c,
                                                          int max_total = 5);

// Closed strings through `start` winding once vertically and once horizontally around a torus.
ColorString vertical_cycle(const ColoredLattice& lattice, int start);
ColorString horizontal_cycle(const ColoredLattice& lattice, int start);

}  // namespace colorcode
