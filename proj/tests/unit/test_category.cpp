#include <gtest/gtest.h>

#include "colorcode/category.hpp"
#include "colorcode/tables.hpp"

using namespace colorcode;

namespace {

SimpleObject obj(int u, int v, int x, int y) { return {{u, v}, {x, y}}; }

}  // namespace

TEST(Category, FusionExamples) {
  EXPECT_EQ(fuse(obj(0, 0, 1, 0), obj(0, 0, 0, 1)), obj(0, 0, 1, 1));
  EXPECT_EQ(fuse(obj(1, 0, 1, 0), obj(1, 0, 1, 0)), obj(0, 0, 0, 0));
  EXPECT_EQ(fuse(obj(1, 0, 1, 0), obj(0, 1, 0, 1)), obj(1, 1, 1, 1));
  EXPECT_EQ(category_fuse(parse_label("rx"), parse_label("bx")), parse_label("gx"));
  EXPECT_EQ(category_fuse(parse_label("f1"), parse_label("f2")), parse_label("gy"));
}

TEST(Category, Twists) {
  EXPECT_EQ(twist(obj(0, 0, 0, 0)), 1);
  EXPECT_EQ(twist(obj(1, 0, 1, 0)), -1);
  int fermions = 0;
  for (const SimpleObject& a : all_objects()) fermions += twist(a) == -1 ? 1 : 0;
  EXPECT_EQ(fermions, 6);
}

TEST(Category, MonodromyAndRibbon) {
  EXPECT_EQ(monodromy(obj(0, 0, 1, 0), obj(1, 0, 0, 0)), -1);
  EXPECT_EQ(category_monodromy(parse_label("rx"), parse_label("bz")), -1);
  for (const SimpleObject& a : all_objects()) {
    EXPECT_EQ(monodromy(a, obj(0, 0, 0, 0)), 1);
    for (const SimpleObject& b : all_objects()) {
      EXPECT_EQ(monodromy(a, b), twist(fuse(a, b)) * twist(a) * twist(b));
      EXPECT_EQ(monodromy(a, b), r_symbol(a, b) * r_symbol(b, a));
    }
  }
}

TEST(Category, SMatrix) {
  const RationalMatrix s = s_matrix();
  ASSERT_EQ(s.size(), 16U);
  for (const auto& row : s) {
    for (const Rational& x : row) EXPECT_TRUE(x == Rational(1, 4) || x == Rational(-1, 4));
  }
  for (const Rational& x : s[0]) EXPECT_EQ(x, Rational(1, 4));
  EXPECT_EQ(s, transpose(s));
  const RationalMatrix id = matmul(s, transpose(s));
  for (std::size_t i = 0; i < 16; ++i) {
    for (std::size_t j = 0; j < 16; ++j) EXPECT_EQ(id[i][j], Rational(i == j ? 1 : 0));
  }
}

TEST(Category, SMatrixFactorsIntoToricBlocks) {
  const RationalMatrix block = toric_s_block();
  const RationalMatrix printed = {{Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)},
                                  {Rational(1, 2), Rational(1, 2), Rational(-1, 2), Rational(-1, 2)},
                                  {Rational(1, 2), Rational(-1, 2), Rational(1, 2), Rational(-1, 2)},
                                  {Rational(1, 2), Rational(-1, 2), Rational(-1, 2), Rational(1, 2)}};
  EXPECT_EQ(block, printed);
  EXPECT_EQ(s_matrix(), kronecker(block, block));
}

TEST(Category, Verlinde) {
  const auto n = verlinde_fusion();
  for (int x = 0; x < 16; ++x) {
    for (int y = 0; y < 16; ++y) {
      int ones = 0;
      for (int z = 0; z < 16; ++z) {
        const Rational v = n[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)][static_cast<std::size_t>(z)];
        EXPECT_TRUE(v == Rational(0) || v == Rational(1));
        if (v == Rational(1)) {
          ++ones;
          EXPECT_EQ(z, object_index(fuse(object_from_index(x), object_from_index(y))));
        }
      }
      EXPECT_EQ(ones, 1);
    }
    EXPECT_EQ(n[static_cast<std::size_t>(x)][static_cast<std::size_t>(x)][0], Rational(1));
  }
}

TEST(Category, Correspondence) {
  auto c = correspondence(parse_label("rx"));
  EXPECT_EQ(c.object, obj(0, 0, 1, 0));
  EXPECT_EQ(c.toric_first, 'e');
  EXPECT_EQ(c.toric_second, '1');
  c = correspondence(parse_label("f1"));
  EXPECT_EQ(c.object, obj(1, 0, 1, 0));
  EXPECT_EQ(std::string({c.toric_first, c.toric_second}), "f1");
  c = correspondence(parse_label("gy"));
  EXPECT_EQ(c.object, obj(1, 1, 1, 1));
  EXPECT_EQ(std::string({c.toric_first, c.toric_second}), "ff");
  EXPECT_EQ(object_name(c.object), "(c,gamma)");
  for (SectorLabel a : all_labels()) EXPECT_EQ(label_of(correspondence(a).object), a);
}

TEST(Category, TransportedTablesMatchGoldens) {
  EXPECT_EQ(category_fusion_table(), parse_label_table(COLORCODE_GOLDEN_DIR "/fusion.csv"));
  EXPECT_EQ(category_monodromy_table(), parse_sign_table(COLORCODE_GOLDEN_DIR "/monodromy.csv"));
  for (const AnyonRow& row : read_anyon_csv(COLORCODE_GOLDEN_DIR "/anyons.csv")) {
    const auto c = correspondence(row.label);
    EXPECT_EQ(category_twist(row.label), row.spin) << label_name(row.label);
    EXPECT_EQ(std::string({c.toric_first, c.toric_second}), row.toric);
  }
}

TEST(Category, CorrespondenceIsAFusionIsomorphism) {
  for (SectorLabel a : all_labels()) {
    for (SectorLabel b : all_labels()) {
      EXPECT_EQ(correspondence(category_fuse(a, b)).object,
                fuse(correspondence(a).object, correspondence(b).object));
    }
  }
}

TEST(Category, ObjectIndexRoundTrip) {
  for (int i = 0; i < 16; ++i) EXPECT_EQ(object_index(object_from_index(i)), i);
  // Vacuum, then the toric-code labels of the second factor.
  EXPECT_EQ(object_index(obj(0, 0, 0, 0)), 0);
  EXPECT_EQ(object_index(obj(0, 0, 0, 1)), 1);
  EXPECT_EQ(object_index(obj(0, 1, 0, 0)), 2);
}
