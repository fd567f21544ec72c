#include "colorcode/bitvec.hpp"

#include "colorcode/errors.hpp"

namespace colorcode {

namespace {

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

std::string BitVector::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t num_bytes = (size_ + 7) / 8;
  std::string out;
  out.reserve(num_bytes * 2);
  for (std::size_t byte = 0; byte < num_bytes; ++byte) {
    const auto value = static_cast<unsigned>((words_[byte / 8] >> ((byte % 8) * 8)) & 0xFFU);
    out.push_back(kDigits[value >> 4]);
    out.push_back(kDigits[value & 0xFU]);
  }
  return out;
}

BitVector BitVector::from_hex(std::string_view hex, std::size_t n) {
  const std::size_t num_bytes = (n + 7) / 8;
  if (hex.size() != num_bytes * 2) {
    throw ParseError("hex bit-vector of length " + std::to_string(hex.size()) + " does not encode " +
                     std::to_string(n) + " bits");
  }
  BitVector out(n);
  for (std::size_t byte = 0; byte < num_bytes; ++byte) {
    const int hi = hex_value(hex[2 * byte]);
    const int lo = hex_value(hex[2 * byte + 1]);
    if (hi < 0 || lo < 0) throw ParseError("invalid hex digit in bit-vector");
    const auto value = static_cast<Word>((hi << 4) | lo);
    out.words_[byte / 8] |= value << ((byte % 8) * 8);
  }
  for (std::size_t i = n; i < num_bytes * 8; ++i) {
    if (out.get(i)) throw ParseError("hex bit-vector has bits set past its length");
  }
  return out;
}

}  // namespace colorcode
