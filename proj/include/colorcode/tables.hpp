#pragma once

#include <array>
#include <filesystem>
#include <string>

#include "json.hpp"

#include "colorcode/labels.hpp"
#include "colorcode/sectors.hpp"

namespace colorcode {

// Row-major 16x16 cells in label order.
using LabelTable = std::array<std::array<SectorLabel, kNumLabels>, kNumLabels>;
using SignTable = std::array<std::array<int, kNumLabels>, kNumLabels>;

LabelTable fusion_table(const SectorLab& lab, int threads = 1);
LabelTable category_fusion_table();
SignTable monodromy_table(const BraidingGeometry& geometry, int threads = 1);
SignTable category_monodromy_table();

// Header row ",1,rx,...", then one row per label.
std::string to_csv(const LabelTable& t);
std::string to_csv(const SignTable& t);
nlohmann::json to_json(const LabelTable& t);
nlohmann::json to_json(const SignTable& t);

// Cells of a table CSV in the layout above; throws ParseError on any other layout.
std::array<std::array<std::string, kNumLabels>, kNumLabels> read_table_csv(const std::filesystem::path& path);
LabelTable parse_label_table(const std::filesystem::path& path);
SignTable parse_sign_table(const std::filesystem::path& path);

struct AnyonRow {
  SectorLabel label = SectorLabel::One;
  std::string toric;  // two characters over 1, e, m, f
  int spin = 1;
};
std::array<AnyonRow, kNumLabels> read_anyon_csv(const std::filesystem::path& path);

}  // namespace colorcode
