#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "colorcode/bitvec.hpp"

namespace colorcode {

// Incremental row echelon basis over GF(2). Every stored row remembers which input rows were
// combined to produce it, so a vector in the span can be expressed in terms of the inputs.
class Gf2Basis {
 public:
  Gf2Basis(std::size_t columns, std::size_t max_inputs) : columns_(columns), max_inputs_(max_inputs) {}

  // Returns true if the row was independent of the rows added so far.
  bool add(const BitVector& row);

  std::size_t rank() const { return rows_.size(); }
  std::size_t inputs() const { return inputs_; }

  // Input indices whose XOR equals v, or nullopt if v lies outside the span.
  std::optional<BitVector> express(const BitVector& v) const;

  // Reduces v against the basis in place; returns the combination used.
  BitVector reduce(BitVector& v) const;

 private:
  struct Row {
    BitVector bits;
    BitVector combination;
    std::size_t pivot;
  };
  std::size_t columns_;
  std::size_t max_inputs_;
  std::size_t inputs_ = 0;
  std::vector<Row> rows_;
};

// Basis of {v : <v, r> = 0 for all rows r}, ordinary dot product.
std::vector<BitVector> gf2_null_space(const std::vector<BitVector>& rows, std::size_t columns);

}  // namespace colorcode
