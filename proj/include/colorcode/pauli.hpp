#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "colorcode/bitvec.hpp"

namespace colorcode {

enum class PauliKind : std::uint8_t { X, Y, Z };

inline constexpr PauliKind kAllKinds[] = {PauliKind::X, PauliKind::Y, PauliKind::Z};

char kind_letter(PauliKind k);  // 'x', 'y', 'z'
PauliKind parse_kind(std::string_view s);

// i^phase * prod_v X_v^x[v] Z_v^z[v], X factors to the left of Z factors on each vertex.
class PauliOperator {
 public:
  PauliOperator() = default;
  explicit PauliOperator(std::size_t n) : x_(n), z_(n) {}
  PauliOperator(BitVector x, BitVector z, int phase);

  static PauliOperator identity(std::size_t n) { return PauliOperator(n); }
  static PauliOperator single(std::size_t v, PauliKind kind, std::size_t n);
  // Tensor of one kind over a vertex set; Y is the literal product of the X and Z tensors.
  static PauliOperator on_support(const std::vector<int>& vertices, PauliKind kind, std::size_t n);

  std::size_t num_qubits() const { return x_.size(); }
  const BitVector& x_part() const { return x_; }
  const BitVector& z_part() const { return z_; }
  int phase() const { return phase_; }

  PauliOperator with_phase(int phase) const;
  PauliOperator scaled(int phase_delta) const { return with_phase(phase_ + phase_delta); }

  bool is_identity_up_to_phase() const { return x_.none() && z_.none(); }
  std::size_t weight() const;

  bool operator==(const PauliOperator&) const = default;

 private:
  BitVector x_;
  BitVector z_;
  int phase_ = 0;
};

PauliOperator multiply(const PauliOperator& a, const PauliOperator& b);
// Symplectic form <a.x, b.z> + <a.z, b.x> mod 2.
int symplectic(const PauliOperator& a, const PauliOperator& b);
bool commutes(const PauliOperator& a, const PauliOperator& b);
std::vector<int> support(const PauliOperator& a);
bool is_hermitian(const PauliOperator& a);
PauliOperator adjoint(const PauliOperator& a);
PauliOperator inverse(const PauliOperator& a);
// Phase (0 or 2) of a*a.
int square_phase(const PauliOperator& a);

// Text form "<phase> <letters>", phase in {+, +i, -, -i}, letters over I X Y Z W
// where W is the bare composite XZ. Output always prefers Y.
std::string to_text(const PauliOperator& a);
PauliOperator from_text(std::string_view text);

}  // namespace colorcode
