#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "colorcode/gf2.hpp"
#include "colorcode/lattice.hpp"
#include "colorcode/pauli.hpp"

namespace colorcode {

// A value in {0, 1, i, -1, -i}: zero, or i^phase.
struct UnitValue {
  bool zero = true;
  int phase = 0;

  static UnitValue Zero() { return {}; }
  static UnitValue Unit(int phase) { return {false, ((phase % 4) + 4) % 4}; }
  bool operator==(const UnitValue&) const = default;
};

std::string to_string(UnitValue v);  // "0", "1", "i", "-1", "-i"

struct Membership {
  bool member = false;
  int sign_phase = 0;           // p = i^sign_phase * product of `generators`
  std::vector<int> generators;  // ascending generator indices
};

struct FaceSyndrome {
  int face = 0;
  bool violates_k = false;  // anticommutes with the X-type face operator
  bool violates_j = false;  // anticommutes with the Z-type face operator
  bool operator==(const FaceSyndrome&) const = default;
};

using Syndrome = std::vector<FaceSyndrome>;  // ascending face, only violated faces

class StabilizerGroup {
 public:
  StabilizerGroup(std::size_t num_qubits, std::vector<int> stabilizer_faces,
                  std::vector<std::vector<int>> face_supports);

  std::size_t num_qubits() const { return n_; }
  // Generators: K for every stabilizer face in order, then J in the same order.
  const std::vector<PauliOperator>& generators() const { return generators_; }
  std::size_t num_generators() const { return generators_.size(); }
  std::size_t rank() const { return basis_.rank(); }
  const std::vector<int>& stabilizer_faces() const { return faces_; }
  std::size_t num_faces() const { return faces_.size(); }

  int k_index(std::size_t slot) const { return static_cast<int>(slot); }
  int j_index(std::size_t slot) const { return static_cast<int>(faces_.size() + slot); }
  // Face slot (index into stabilizer_faces) for a lattice face, or nullopt.
  std::optional<std::size_t> slot_of_face(int face) const;

  Membership membership(const PauliOperator& p) const;
  UnitValue omega0(const PauliOperator& p) const;
  Syndrome syndrome(const PauliOperator& p) const;

  // Product of the listed generators (phase 0 since they commute and are Hermitian).
  PauliOperator product(const std::vector<int>& generator_indices) const;

  // Representatives of the centralizer modulo the group: 2 * (n - rank) operators.
  std::vector<PauliOperator> logical_basis() const;

 private:
  void check(const PauliOperator& p) const;

  std::size_t n_;
  std::vector<int> faces_;
  std::vector<BitVector> face_masks_;
  std::vector<PauliOperator> generators_;
  Gf2Basis basis_;
};

StabilizerGroup face_stabilizers(const ColoredLattice& lattice);

// n - rank; the code encodes this many logical qubits.
int logical_qubits(const StabilizerGroup& group);
// 2^(n - rank). Throws TooLarge if it does not fit in 64 bits.
std::uint64_t ground_space_dim(const StabilizerGroup& group);

}  // namespace colorcode
