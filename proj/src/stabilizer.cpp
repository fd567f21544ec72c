#include "colorcode/stabilizer.hpp"

#include <algorithm>
#include <set>

#include "colorcode/errors.hpp"

namespace colorcode {

namespace {

BitVector symplectic_vector(const PauliOperator& p) {
  const std::size_t n = p.num_qubits();
  BitVector out(2 * n);
  for (std::size_t v : p.x_part().set_bits()) out.set(v);
  for (std::size_t v : p.z_part().set_bits()) out.set(n + v);
  return out;
}

}  // namespace

std::string to_string(UnitValue v) {
  if (v.zero) return "0";
  static constexpr const char* kNames[] = {"1", "i", "-1", "-i"};
  return kNames[v.phase];
}

StabilizerGroup::StabilizerGroup(std::size_t num_qubits, std::vector<int> stabilizer_faces,
                                 std::vector<std::vector<int>> face_supports)
    : n_(num_qubits), faces_(std::move(stabilizer_faces)), basis_(2 * num_qubits, 2 * faces_.size()) {
  if (face_supports.size() != faces_.size()) throw DimensionMismatch("one support per stabilizer face required");
  for (const auto& vertices : face_supports) {
    BitVector mask(n_);
    for (int v : vertices) {
      if (v < 0 || static_cast<std::size_t>(v) >= n_) throw IndexOutOfRange("face support vertex out of range");
      mask.set(static_cast<std::size_t>(v));
    }
    face_masks_.push_back(std::move(mask));
  }
  for (const BitVector& mask : face_masks_) generators_.emplace_back(mask, BitVector(n_), 0);
  for (const BitVector& mask : face_masks_) generators_.emplace_back(BitVector(n_), mask, 0);
  for (const PauliOperator& g : generators_) basis_.add(symplectic_vector(g));
}

std::optional<std::size_t> StabilizerGroup::slot_of_face(int face) const {
  const auto it = std::find(faces_.begin(), faces_.end(), face);
  if (it == faces_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - faces_.begin());
}

void StabilizerGroup::check(const PauliOperator& p) const {
  if (p.num_qubits() != n_) {
    throw DimensionMismatch("operator on " + std::to_string(p.num_qubits()) + " qubits, group on " +
                            std::to_string(n_));
  }
}

Membership StabilizerGroup::membership(const PauliOperator& p) const {
  check(p);
  const auto combination = basis_.express(symplectic_vector(p));
  if (!combination) return {};
  Membership out;
  out.member = true;
  for (std::size_t g : combination->set_bits()) out.generators.push_back(static_cast<int>(g));
  const PauliOperator prod = product(out.generators);
  out.sign_phase = ((p.phase() - prod.phase()) % 4 + 4) % 4;
  return out;
}

UnitValue StabilizerGroup::omega0(const PauliOperator& p) const {
  const Membership m = membership(p);
  return m.member ? UnitValue::Unit(m.sign_phase) : UnitValue::Zero();
}

Syndrome StabilizerGroup::syndrome(const PauliOperator& p) const {
  check(p);
  Syndrome out;
  for (std::size_t slot = 0; slot < faces_.size(); ++slot) {
    const bool k = BitVector::and_popcount(p.z_part(), face_masks_[slot]) % 2 == 1;
    const bool j = BitVector::and_popcount(p.x_part(), face_masks_[slot]) % 2 == 1;
    if (k || j) out.push_back({faces_[slot], k, j});
  }
  std::sort(out.begin(), out.end(), [](const FaceSyndrome& a, const FaceSyndrome& b) { return a.face < b.face; });
  return out;
}

PauliOperator StabilizerGroup::product(const std::vector<int>& generator_indices) const {
  PauliOperator out(n_);
  for (int g : generator_indices) out = multiply(out, generators_.at(static_cast<std::size_t>(g)));
  return out;
}

std::vector<PauliOperator> StabilizerGroup::logical_basis() const {
  // Centralizer = symplectic complement of the generators; swapping the x and z halves of each
  // generator turns the symplectic form into a plain dot product.
  std::vector<BitVector> swapped;
  for (const PauliOperator& g : generators_) {
    BitVector row(2 * n_);
    for (std::size_t v : g.z_part().set_bits()) row.set(v);
    for (std::size_t v : g.x_part().set_bits()) row.set(n_ + v);
    swapped.push_back(std::move(row));
  }
  const std::vector<BitVector> centralizer = gf2_null_space(swapped, 2 * n_);
  Gf2Basis quotient(2 * n_, generators_.size() + centralizer.size());
  for (const PauliOperator& g : generators_) quotient.add(symplectic_vector(g));
  std::vector<PauliOperator> out;
  for (const BitVector& c : centralizer) {
    if (!quotient.add(c)) continue;
    BitVector x(n_);
    BitVector z(n_);
    for (std::size_t b : c.set_bits()) {
      if (b < n_) {
        x.set(b);
      } else {
        z.set(b - n_);
      }
    }
    out.emplace_back(std::move(x), std::move(z), 0);
  }
  return out;
}

StabilizerGroup face_stabilizers(const ColoredLattice& lattice) {
  std::vector<int> faces;
  std::vector<std::vector<int>> supports;
  for (int f = 0; f < lattice.num_faces(); ++f) {
    const auto& cycle = lattice.face(f).vertices;
    const std::set<int> distinct(cycle.begin(), cycle.end());
    if (distinct.size() != 6) {
      if (lattice.is_torus()) throw InvalidLattice("face " + std::to_string(f) + " does not have 6 vertices");
      continue;
    }
    faces.push_back(f);
    supports.emplace_back(distinct.begin(), distinct.end());
  }
  return StabilizerGroup(static_cast<std::size_t>(lattice.num_vertices()), std::move(faces), std::move(supports));
}

int logical_qubits(const StabilizerGroup& group) {
  return static_cast<int>(group.num_qubits()) - static_cast<int>(group.rank());
}

std::uint64_t ground_space_dim(const StabilizerGroup& group) {
  const int k = logical_qubits(group);
  if (k < 0 || k >= 64) throw TooLarge("ground space dimension 2^" + std::to_string(k) + " overflows");
  return std::uint64_t{1} << k;
}

}  // namespace colorcode
