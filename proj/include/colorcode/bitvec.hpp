#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace colorcode {

// Fixed-width bit vector over GF(2), packed into 64-bit words.
// Bits past size() are always zero so word-wise popcounts stay exact.
class BitVector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t n) : size_(n), words_((n + kWordBits - 1) / kWordBits, 0) {}

  std::size_t size() const { return size_; }
  std::size_t num_words() const { return words_.size(); }
  const std::vector<Word>& words() const { return words_; }

  bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i, bool value = true) {
    const Word mask = Word{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= mask;
    } else {
      words_[i / kWordBits] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  BitVector& operator^=(const BitVector& other) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
    return *this;
  }
  BitVector& operator&=(const BitVector& other) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
    return *this;
  }
  BitVector& operator|=(const BitVector& other) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
    return *this;
  }
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
  friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }

  bool operator==(const BitVector&) const = default;

  std::size_t popcount() const {
    std::size_t total = 0;
    for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  // |a AND b| without materializing the intersection.
  static std::size_t and_popcount(const BitVector& a, const BitVector& b) {
    std::size_t total = 0;
    for (std::size_t k = 0; k < a.words_.size(); ++k) {
      total += static_cast<std::size_t>(std::popcount(a.words_[k] & b.words_[k]));
    }
    return total;
  }

  bool any() const {
    for (Word w : words_) {
      if (w != 0) return true;
    }
    return false;
  }
  bool none() const { return !any(); }

  // Index of the lowest set bit, or size() if there is none.
  std::size_t first_set() const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k] != 0) return k * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[k]));
    }
    return size_;
  }

  std::vector<std::size_t> set_bits() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < words_.size(); ++k) {
      Word w = words_[k];
      while (w != 0) {
        out.push_back(k * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  // Lowercase hex, two digits per byte, byte 0 (bits 0..7) first, bit i at (byte i/8, bit i%8).
  std::string to_hex() const;
  static BitVector from_hex(std::string_view hex, std::size_t n);

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

}  // namespace colorcode
