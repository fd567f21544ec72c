#pragma once

#include <array>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "colorcode/labels.hpp"

namespace colorcode {

using Rational = boost::rational<long long>;

// Element (u, v) of Z2 x Z2.
struct GroupElement {
  int u = 0;
  int v = 0;
  bool operator==(const GroupElement&) const = default;
};

GroupElement operator+(GroupElement a, GroupElement b);

// chi_{x,y}(u, v) = (-1)^(xu + yv).
struct Character {
  int x = 0;
  int y = 0;
  int operator()(GroupElement g) const { return (x * g.u + y * g.v) % 2 == 0 ? 1 : -1; }
  bool operator==(const Character&) const = default;
};

Character operator*(Character a, Character b);

struct SimpleObject {
  GroupElement flux;
  Character charge;
  bool operator==(const SimpleObject&) const = default;
};

// index = 4 * (2u + x) + (2v + y): the Kronecker order of the two toric-code factors (1, e, m, f).
int object_index(SimpleObject a);
SimpleObject object_from_index(int i);
std::array<SimpleObject, 16> all_objects();
std::string object_name(SimpleObject a);  // e.g. "(a,alpha)"

SimpleObject fuse(SimpleObject a, SimpleObject b);
int twist(SimpleObject a);
int r_symbol(SimpleObject a, SimpleObject b);
int monodromy(SimpleObject a, SimpleObject b);

using RationalMatrix = std::vector<std::vector<Rational>>;

// Indexed by object_index.
RationalMatrix s_matrix();
// The 4x4 toric-code block, order 1, e, m, f.
RationalMatrix toric_s_block();
RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix transpose(const RationalMatrix& a);

// N[x][y][z] from the Verlinde formula, indexed by object_index.
std::vector<std::vector<std::vector<Rational>>> verlinde_fusion();

struct Correspondence {
  SimpleObject object;
  char toric_first = '1';   // one of 1, e, m, f
  char toric_second = '1';
};

Correspondence correspondence(SectorLabel label);
SectorLabel label_of(SimpleObject object);

// Categorical tables transported to anyon labels, in table order.
SectorLabel category_fuse(SectorLabel a, SectorLabel b);
int category_twist(SectorLabel a);
int category_monodromy(SectorLabel a, SectorLabel b);

}  // namespace colorcode
