#include "colorcode/category.hpp"

#include "colorcode/errors.hpp"

namespace colorcode {

namespace {

// (u, v, x, y) per label, table order.
constexpr int kLabelData[kNumLabels][4] = {
    {0, 0, 0, 0},  // 1
    {0, 0, 1, 0},  // rx
    {0, 1, 1, 0},  // ry
    {0, 1, 0, 0},  // rz
    {0, 0, 1, 1},  // gx
    {1, 1, 1, 1},  // gy
    {1, 1, 0, 0},  // gz
    {0, 0, 0, 1},  // bx
    {1, 0, 0, 1},  // by
    {1, 0, 0, 0},  // bz
    {1, 0, 1, 0},  // f1
    {0, 1, 0, 1},  // f2
    {0, 1, 1, 1},  // f3
    {1, 0, 1, 1},  // f4
    {1, 1, 0, 1},  // f5
    {1, 1, 1, 0},  // f6
};

constexpr char kToric[4] = {'1', 'e', 'm', 'f'};

}  // namespace

GroupElement operator+(GroupElement a, GroupElement b) { return {(a.u + b.u) % 2, (a.v + b.v) % 2}; }

Character operator*(Character a, Character b) { return {(a.x + b.x) % 2, (a.y + b.y) % 2}; }

int object_index(SimpleObject a) {
  return 4 * (2 * a.flux.u + a.charge.x) + (2 * a.flux.v + a.charge.y);
}

SimpleObject object_from_index(int i) {
  if (i < 0 || i >= 16) throw IndexOutOfRange("object index " + std::to_string(i));
  const int first = i / 4;
  const int second = i % 4;
  return {{first / 2, second / 2}, {first % 2, second % 2}};
}

std::array<SimpleObject, 16> all_objects() {
  std::array<SimpleObject, 16> out{};
  for (int i = 0; i < 16; ++i) out[static_cast<std::size_t>(i)] = object_from_index(i);
  return out;
}

std::string object_name(SimpleObject a) {
  static constexpr const char* kFlux[2][2] = {{"0", "b"}, {"a", "c"}};
  static constexpr const char* kCharge[2][2] = {{"1", "beta"}, {"alpha", "gamma"}};
  return std::string("(") + kFlux[a.flux.u][a.flux.v] + "," + kCharge[a.charge.x][a.charge.y] + ")";
}

SimpleObject fuse(SimpleObject a, SimpleObject b) { return {a.flux + b.flux, a.charge * b.charge}; }

int twist(SimpleObject a) { return a.charge(a.flux); }

int r_symbol(SimpleObject a, SimpleObject b) { return b.charge(a.flux); }

int monodromy(SimpleObject a, SimpleObject b) { return b.charge(a.flux) * a.charge(b.flux); }

RationalMatrix s_matrix() {
  RationalMatrix s(16, std::vector<Rational>(16));
  for (int i = 0; i < 16; ++i) {
    for (int j = 0; j < 16; ++j) {
      s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          Rational(monodromy(object_from_index(i), object_from_index(j)), 4);
    }
  }
  return s;
}

RationalMatrix toric_s_block() {
  RationalMatrix s(4, std::vector<Rational>(4));
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      // (k, x) . (k', x'): (-1)^(x k' + x' k)
      const int sign = ((a % 2) * (b / 2) + (b % 2) * (a / 2)) % 2 == 0 ? 1 : -1;
      s[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = Rational(sign, 2);
    }
  }
  return s;
}

RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  RationalMatrix out(n * m, std::vector<Rational>(n * m));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t l = 0; l < m; ++l) out[i * m + k][j * m + l] = a[i][j] * b[k][l];
      }
    }
  }
  return out;
}

RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.empty() || a.front().size() != b.size()) throw DimensionMismatch("matrix shapes do not chain");
  RationalMatrix out(a.size(), std::vector<Rational>(b.front().size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].numerator() == 0) continue;  // rational == int recurses under C++20 with boost 1.74
      for (std::size_t j = 0; j < b.front().size(); ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

RationalMatrix transpose(const RationalMatrix& a) {
  RationalMatrix out(a.front().size(), std::vector<Rational>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) out[j][i] = a[i][j];
  }
  return out;
}

std::vector<std::vector<std::vector<Rational>>> verlinde_fusion() {
  // S is real here, so conjugation is a no-op.
  const RationalMatrix s = s_matrix();
  std::vector<std::vector<std::vector<Rational>>> n(16, std::vector<std::vector<Rational>>(16, std::vector<Rational>(16)));
  for (std::size_t x = 0; x < 16; ++x) {
    for (std::size_t y = 0; y < 16; ++y) {
      for (std::size_t z = 0; z < 16; ++z) {
        Rational total = 0;
        for (std::size_t w = 0; w < 16; ++w) total += s[x][w] * s[y][w] * s[z][w] / s[0][w];
        n[x][y][z] = total;
      }
    }
  }
  return n;
}

Correspondence correspondence(SectorLabel label) {
  const int* d = kLabelData[label_index(label)];
  Correspondence out;
  out.object = {{d[0], d[1]}, {d[2], d[3]}};
  out.toric_first = kToric[2 * d[0] + d[2]];
  out.toric_second = kToric[2 * d[1] + d[3]];
  return out;
}

SectorLabel label_of(SimpleObject object) {
  for (SectorLabel a : all_labels()) {
    if (correspondence(a).object == object) return a;
  }
  throw IndexOutOfRange("object has no label");
}

SectorLabel category_fuse(SectorLabel a, SectorLabel b) {
  return label_of(fuse(correspondence(a).object, correspondence(b).object));
}

int category_twist(SectorLabel a) { return twist(correspondence(a).object); }

int category_monodromy(SectorLabel a, SectorLabel b) {
  return monodromy(correspondence(a).object, correspondence(b).object);
}

}  // namespace colorcode
