#include "colorcode/gf2.hpp"

#include <algorithm>

#include "colorcode/errors.hpp"

namespace colorcode {

BitVector Gf2Basis::reduce(BitVector& v) const {
  BitVector combination(max_inputs_);
  for (const Row& row : rows_) {
    if (v.get(row.pivot)) {
      v ^= row.bits;
      combination ^= row.combination;
    }
  }
  return combination;
}

bool Gf2Basis::add(const BitVector& row) {
  if (row.size() != columns_) throw DimensionMismatch("row width does not match basis");
  if (inputs_ >= max_inputs_) throw IndexOutOfRange("basis input capacity exhausted");
  BitVector bits = row;
  BitVector combination = reduce(bits);
  combination.flip(inputs_++);
  if (bits.none()) return false;
  const std::size_t pivot = bits.first_set();
  // Keep rows sorted by pivot and fully reduced so reduce() needs a single pass.
  for (Row& other : rows_) {
    if (other.bits.get(pivot)) {
      other.bits ^= bits;
      other.combination ^= combination;
    }
  }
  const auto at = std::lower_bound(rows_.begin(), rows_.end(), pivot,
                                   [](const Row& r, std::size_t p) { return r.pivot < p; });
  rows_.insert(at, Row{std::move(bits), std::move(combination), pivot});
  return true;
}

std::optional<BitVector> Gf2Basis::express(const BitVector& v) const {
  BitVector residual = v;
  BitVector combination = reduce(residual);
  if (residual.any()) return std::nullopt;
  return combination;
}

std::vector<BitVector> gf2_null_space(const std::vector<BitVector>& rows, std::size_t columns) {
  std::vector<BitVector> reduced;
  std::vector<std::size_t> pivots;
  for (const BitVector& input : rows) {
    BitVector r = input;
    for (std::size_t k = 0; k < reduced.size(); ++k) {
      if (r.get(pivots[k])) r ^= reduced[k];
    }
    if (r.none()) continue;
    const std::size_t p = r.first_set();
    for (BitVector& other : reduced) {
      if (other.get(p)) other ^= r;
    }
    reduced.push_back(std::move(r));
    pivots.push_back(p);
  }
  std::vector<bool> is_pivot(columns, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<BitVector> basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    BitVector v(columns);
    v.set(free);
    for (std::size_t k = 0; k < reduced.size(); ++k) {
      if (reduced[k].get(free)) v.set(pivots[k]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace colorcode
