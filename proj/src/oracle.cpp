#include "colorcode/oracle.hpp"

#include <bit>
#include <cmath>

#include "colorcode/errors.hpp"

namespace colorcode {

namespace {

constexpr double kTolerance = 1e-9;

void require_small(std::size_t n) {
  if (n > kMaxDenseQubits) {
    throw TooLarge(std::to_string(n) + " qubits exceed the dense limit of " + std::to_string(kMaxDenseQubits));
  }
}

std::uint32_t low_mask(const BitVector& bits) {
  return bits.num_words() == 0 ? 0U : static_cast<std::uint32_t>(bits.words()[0]);
}

Amplitude i_power(int phase) {
  static const Amplitude kPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return kPowers[((phase % 4) + 4) % 4];
}

// v <- (v + g v) / 2
void half_sum(const DenseOperator& g, DenseState& v) {
  const DenseState gv = g.apply(v);
  for (std::size_t i = 0; i < v.amplitudes.size(); ++i) v.amplitudes[i] = 0.5 * (v.amplitudes[i] + gv.amplitudes[i]);
}

}  // namespace

DenseState DenseState::basis(std::size_t n, std::uint32_t index) {
  require_small(n);
  DenseState s{n, std::vector<Amplitude>(std::size_t{1} << n)};
  s.amplitudes.at(index) = 1.0;
  return s;
}

double DenseState::norm() const { return std::sqrt(std::real(inner(*this, *this))); }

void DenseState::normalize() {
  const double len = norm();
  if (len < kTolerance) throw InvalidLattice("cannot normalize a zero vector");
  for (Amplitude& a : amplitudes) a /= len;
}

Amplitude inner(const DenseState& a, const DenseState& b) {
  if (a.amplitudes.size() != b.amplitudes.size()) throw DimensionMismatch("state sizes differ");
  Amplitude total = 0;
  for (std::size_t i = 0; i < a.amplitudes.size(); ++i) total += std::conj(a.amplitudes[i]) * b.amplitudes[i];
  return total;
}

DenseOperator::DenseOperator(const PauliOperator& p)
    : n_(p.num_qubits()), x_(low_mask(p.x_part())), z_(low_mask(p.z_part())), phase_(p.phase()) {
  require_small(n_);
}

Amplitude DenseOperator::coefficient(std::uint32_t column) const {
  // X^x Z^z |b> = (-1)^{z.b} |b ^ x>
  const int sign = std::popcount(z_ & column) % 2 == 0 ? 0 : 2;
  return i_power(phase_ + sign);
}

Amplitude DenseOperator::entry(std::uint32_t row, std::uint32_t column) const {
  return (row ^ column) == x_ ? coefficient(column) : Amplitude{0};
}

DenseState DenseOperator::apply(const DenseState& v) const {
  if (v.num_qubits != n_) throw DimensionMismatch("operator and state qubit counts differ");
  DenseState out{n_, std::vector<Amplitude>(v.amplitudes.size())};
  for (std::uint32_t b = 0; b < v.amplitudes.size(); ++b) {
    if (v.amplitudes[b] != Amplitude{0}) out.amplitudes[b ^ x_] += coefficient(b) * v.amplitudes[b];
  }
  return out;
}

DenseOperator dense_operator(const PauliOperator& p) { return DenseOperator(p); }

std::vector<std::vector<Amplitude>> dense_matrix(const PauliOperator& p) {
  const DenseOperator op(p);
  const std::size_t dim = op.dimension();
  std::vector<std::vector<Amplitude>> m(dim, std::vector<Amplitude>(dim));
  for (std::uint32_t c = 0; c < dim; ++c) m[c ^ op.flip()][c] = op.coefficient(c);
  return m;
}

DenseGroundSpace::DenseGroundSpace(const StabilizerGroup& group) : n_(group.num_qubits()) {
  require_small(n_);
  std::vector<DenseOperator> diagonal;
  for (const PauliOperator& g : group.generators()) {
    (g.x_part().none() ? diagonal : generators_).emplace_back(g);
  }
  const std::size_t dim = std::size_t{1} << n_;
  double trace = 0;
  for (std::uint32_t b = 0; b < dim; ++b) {
    // Diagonal factors act on |b> as 1 or 0.
    bool survives = true;
    for (const DenseOperator& d : diagonal) survives = survives && d.coefficient(b) == Amplitude{1};
    if (!survives) continue;
    DenseState column = DenseState::basis(n_, b);
    for (const DenseOperator& g : generators_) half_sum(g, column);
    trace += std::real(column.amplitudes[b]);
    // Gram-Schmidt against the basis so far.
    for (const DenseState& e : basis_) {
      const Amplitude c = inner(e, column);
      for (std::size_t i = 0; i < dim; ++i) column.amplitudes[i] -= c * e.amplitudes[i];
    }
    if (column.norm() > 1e-6) {
      column.normalize();
      basis_.push_back(std::move(column));
    }
  }
  generators_.insert(generators_.end(), diagonal.begin(), diagonal.end());
  dimension_ = static_cast<std::uint64_t>(std::llround(trace));
  if (dimension_ != basis_.size()) throw InvalidLattice("projector trace disagrees with its rank");
  omega_ = project(DenseState::basis(n_, 0));
  omega_.normalize();
}

DenseState DenseGroundSpace::project(const DenseState& v) const {
  DenseState out = v;
  for (const DenseOperator& g : generators_) half_sum(g, out);
  return out;
}

Amplitude DenseGroundSpace::trace_average(const PauliOperator& p) const {
  const DenseOperator op(p);
  Amplitude total = 0;
  for (const DenseState& e : basis_) total += inner(e, op.apply(e));
  return total / static_cast<double>(basis_.size());
}

Amplitude DenseGroundSpace::state_expectation(const PauliOperator& p) const {
  return inner(omega_, DenseOperator(p).apply(omega_));
}

bool DenseGroundSpace::is_logical(const PauliOperator& p) const {
  const DenseOperator op(p);
  // p maps the ground space into itself iff it commutes with the projector there.
  for (const DenseState& e : basis_) {
    const DenseState image = op.apply(e);
    const DenseState back = project(image);
    for (std::size_t i = 0; i < image.amplitudes.size(); ++i) {
      if (std::abs(image.amplitudes[i] - back.amplitudes[i]) > 1e-6) return false;
    }
  }
  return std::abs(trace_average(p)) < kTolerance;
}

std::uint64_t dense_ground_dimension(const StabilizerGroup& group) { return DenseGroundSpace(group).dimension(); }

Amplitude dense_omega0(const StabilizerGroup& group, const PauliOperator& p) {
  return DenseGroundSpace(group).trace_average(p);
}

std::optional<UnitValue> to_unit_value(Amplitude a) {
  if (std::abs(a) < kTolerance) return UnitValue::Zero();
  for (int phase = 0; phase < 4; ++phase) {
    if (std::abs(a - i_power(phase)) < kTolerance) return UnitValue::Unit(phase);
  }
  return std::nullopt;
}

}  // namespace colorcode
