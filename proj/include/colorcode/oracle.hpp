#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "colorcode/pauli.hpp"
#include "colorcode/stabilizer.hpp"

namespace colorcode {

inline constexpr std::size_t kMaxDenseQubits = 14;

using Amplitude = std::complex<double>;

// Amplitude vector over 2^n basis states; qubit v is bit v of the basis index.
struct DenseState {
  std::size_t num_qubits = 0;
  std::vector<Amplitude> amplitudes;

  static DenseState basis(std::size_t n, std::uint32_t index);
  double norm() const;
  void normalize();
};

Amplitude inner(const DenseState& a, const DenseState& b);  // <a|b>

// Signed permutation: column b has its single entry coefficient(b) in row b ^ flip.
class DenseOperator {
 public:
  explicit DenseOperator(const PauliOperator& p);

  std::size_t num_qubits() const { return n_; }
  std::size_t dimension() const { return std::size_t{1} << n_; }
  std::uint32_t flip() const { return x_; }
  Amplitude coefficient(std::uint32_t column) const;
  Amplitude entry(std::uint32_t row, std::uint32_t column) const;
  DenseState apply(const DenseState& v) const;

 private:
  std::size_t n_;
  std::uint32_t x_;
  std::uint32_t z_;
  int phase_;
};

DenseOperator dense_operator(const PauliOperator& p);
// Full matrix, row-major; intended for a handful of qubits.
std::vector<std::vector<Amplitude>> dense_matrix(const PauliOperator& p);

// Ground-space projector prod (1 + g)/2 over all generators, held through its nonzero columns.
class DenseGroundSpace {
 public:
  explicit DenseGroundSpace(const StabilizerGroup& group);

  std::size_t num_qubits() const { return n_; }
  // Trace of the projector.
  std::uint64_t dimension() const { return dimension_; }
  DenseState project(const DenseState& v) const;
  const std::vector<DenseState>& basis() const { return basis_; }
  // Normalized projection of |0...0>.
  const DenseState& reference_state() const { return omega_; }

  Amplitude trace_average(const PauliOperator& p) const;  // tr(P p) / tr(P)
  Amplitude state_expectation(const PauliOperator& p) const;  // <Omega|p|Omega>
  // Commutes with every generator yet averages to zero: a nontrivial logical coset.
  bool is_logical(const PauliOperator& p) const;

 private:
  std::size_t n_;
  std::vector<DenseOperator> generators_;
  std::uint64_t dimension_ = 0;
  std::vector<DenseState> basis_;
  DenseState omega_;
};

std::uint64_t dense_ground_dimension(const StabilizerGroup& group);
Amplitude dense_omega0(const StabilizerGroup& group, const PauliOperator& p);

// Nearest of {0, 1, i, -1, -i} within 1e-9, else nullopt.
std::optional<UnitValue> to_unit_value(Amplitude a);

}  // namespace colorcode
