#include "colorcode/pauli.hpp"

#include <cctype>

#include "colorcode/errors.hpp"

namespace colorcode {

namespace {

int mod4(long long p) { return static_cast<int>(((p % 4) + 4) % 4); }

void check_same_size(const PauliOperator& a, const PauliOperator& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw DimensionMismatch("operators act on " + std::to_string(a.num_qubits()) + " and " +
                            std::to_string(b.num_qubits()) + " qubits");
  }
}

}  // namespace

char kind_letter(PauliKind k) {
  switch (k) {
    case PauliKind::X:
      return 'x';
    case PauliKind::Y:
      return 'y';
    case PauliKind::Z:
      return 'z';
  }
  return '?';
}

PauliKind parse_kind(std::string_view s) {
  if (s == "x" || s == "X") return PauliKind::X;
  if (s == "y" || s == "Y") return PauliKind::Y;
  if (s == "z" || s == "Z") return PauliKind::Z;
  throw ParseError("unknown Pauli kind '" + std::string(s) + "'");
}

PauliOperator::PauliOperator(BitVector x, BitVector z, int phase)
    : x_(std::move(x)), z_(std::move(z)), phase_(mod4(phase)) {
  if (x_.size() != z_.size()) throw DimensionMismatch("x and z parts differ in length");
}

PauliOperator PauliOperator::single(std::size_t v, PauliKind kind, std::size_t n) {
  if (v >= n) {
    throw IndexOutOfRange("qubit " + std::to_string(v) + " outside [0, " + std::to_string(n) + ")");
  }
  PauliOperator out(n);
  if (kind != PauliKind::Z) out.x_.set(v);
  if (kind != PauliKind::X) out.z_.set(v);
  if (kind == PauliKind::Y) out.phase_ = 1;
  return out;
}

PauliOperator PauliOperator::on_support(const std::vector<int>& vertices, PauliKind kind, std::size_t n) {
  PauliOperator out(n);
  for (int v : vertices) {
    if (v < 0 || static_cast<std::size_t>(v) >= n) throw IndexOutOfRange("support vertex out of range");
    if (kind != PauliKind::Z) out.x_.flip(static_cast<std::size_t>(v));
    if (kind != PauliKind::X) out.z_.flip(static_cast<std::size_t>(v));
  }
  return out;
}

PauliOperator PauliOperator::with_phase(int phase) const {
  PauliOperator out = *this;
  out.phase_ = mod4(phase);
  return out;
}

std::size_t PauliOperator::weight() const { return (x_ | z_).popcount(); }

PauliOperator multiply(const PauliOperator& a, const PauliOperator& b) {
  check_same_size(a, b);
  const auto swaps = BitVector::and_popcount(b.x_part(), a.z_part());
  return PauliOperator(a.x_part() ^ b.x_part(), a.z_part() ^ b.z_part(),
                       a.phase() + b.phase() + 2 * static_cast<int>(swaps % 2));
}

int symplectic(const PauliOperator& a, const PauliOperator& b) {
  check_same_size(a, b);
  return static_cast<int>(
      (BitVector::and_popcount(a.x_part(), b.z_part()) + BitVector::and_popcount(a.z_part(), b.x_part())) % 2);
}

bool commutes(const PauliOperator& a, const PauliOperator& b) { return symplectic(a, b) == 0; }

std::vector<int> support(const PauliOperator& a) {
  std::vector<int> out;
  for (std::size_t v : (a.x_part() | a.z_part()).set_bits()) out.push_back(static_cast<int>(v));
  return out;
}

// (i^p X^x Z^z)^dagger = i^-p Z^z X^x = i^-p (-1)^w X^x Z^z with w = |x AND z|.
PauliOperator adjoint(const PauliOperator& a) {
  const auto w = static_cast<int>(BitVector::and_popcount(a.x_part(), a.z_part()) % 2);
  return a.with_phase(-a.phase() + 2 * w);
}

bool is_hermitian(const PauliOperator& a) {
  const auto w = static_cast<int>(BitVector::and_popcount(a.x_part(), a.z_part()) % 2);
  return (a.phase() + w) % 2 == 0;
}

int square_phase(const PauliOperator& a) {
  const auto w = static_cast<int>(BitVector::and_popcount(a.x_part(), a.z_part()) % 2);
  return mod4(2 * a.phase() + 2 * w);
}

PauliOperator inverse(const PauliOperator& a) { return a.scaled(square_phase(a)); }

std::string to_text(const PauliOperator& a) {
  // Each XZ on a vertex is rewritten as -iY, so the printed phase absorbs (-i) per Y.
  long long phase = a.phase();
  std::string letters;
  letters.reserve(a.num_qubits());
  for (std::size_t v = 0; v < a.num_qubits(); ++v) {
    const bool x = a.x_part().get(v);
    const bool z = a.z_part().get(v);
    if (x && z) {
      letters.push_back('Y');
      phase -= 1;
    } else if (x) {
      letters.push_back('X');
    } else if (z) {
      letters.push_back('Z');
    } else {
      letters.push_back('I');
    }
  }
  static constexpr const char* kPhase[] = {"+", "+i", "-", "-i"};
  return std::string(kPhase[mod4(phase)]) + " " + letters;
}

PauliOperator from_text(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  int phase = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    phase = text[pos] == '-' ? 2 : 0;
    ++pos;
    if (pos < text.size() && text[pos] == 'i') {
      phase += 1;
      ++pos;
    }
  }
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  std::size_t end = text.size();
  while (end > pos && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  const std::string_view letters = text.substr(pos, end - pos);
  BitVector x(letters.size());
  BitVector z(letters.size());
  for (std::size_t v = 0; v < letters.size(); ++v) {
    switch (letters[v]) {
      case 'I':
        break;
      case 'X':
        x.set(v);
        break;
      case 'Z':
        z.set(v);
        break;
      case 'Y':
        x.set(v);
        z.set(v);
        phase += 1;
        break;
      case 'W':
        x.set(v);
        z.set(v);
        break;
      default:
        throw ParseError(std::string("invalid Pauli letter '") + letters[v] + "'");
    }
  }
  return PauliOperator(std::move(x), std::move(z), phase);
}

}  // namespace colorcode
