#include "colorcode/tables.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "colorcode/category.hpp"
#include "colorcode/errors.hpp"
#include "colorcode/parallel.hpp"

namespace colorcode {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::vector<std::vector<std::string>> read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) rows.push_back(split_csv_line(line));
  }
  return rows;
}

template <typename Cell>
std::string csv_of(const std::array<std::array<Cell, kNumLabels>, kNumLabels>& t, std::string (*cell)(const Cell&)) {
  std::string out;
  for (SectorLabel a : all_labels()) out += "," + std::string(label_name(a));
  out += '\n';
  for (SectorLabel a : all_labels()) {
    out += label_name(a);
    for (const Cell& c : t[static_cast<std::size_t>(label_index(a))]) out += "," + cell(c);
    out += '\n';
  }
  return out;
}

std::string label_cell(const SectorLabel& a) { return std::string(label_name(a)); }
std::string sign_cell(const int& s) { return s > 0 ? "1" : "-1"; }

}  // namespace

LabelTable fusion_table(const SectorLab& lab, int threads) {
  LabelTable t{};
  parallel_for(kNumLabels, threads, [&](std::size_t i) {
    for (std::size_t j = 0; j < kNumLabels; ++j) {
      t[i][j] = lab.fuse_measure(label_from_index(static_cast<int>(i)), label_from_index(static_cast<int>(j)));
    }
  });
  return t;
}

LabelTable category_fusion_table() {
  LabelTable t{};
  for (SectorLabel a : all_labels()) {
    for (SectorLabel b : all_labels()) {
      t[static_cast<std::size_t>(label_index(a))][static_cast<std::size_t>(label_index(b))] = category_fuse(a, b);
    }
  }
  return t;
}

SignTable monodromy_table(const BraidingGeometry& geometry, int threads) {
  SignTable t{};
  parallel_for(kNumLabels, threads, [&](std::size_t i) {
    for (std::size_t j = 0; j < kNumLabels; ++j) {
      t[i][j] = monodromy_measure(geometry, label_from_index(static_cast<int>(i)), label_from_index(static_cast<int>(j)));
    }
  });
  return t;
}

SignTable category_monodromy_table() {
  SignTable t{};
  for (SectorLabel a : all_labels()) {
    for (SectorLabel b : all_labels()) {
      t[static_cast<std::size_t>(label_index(a))][static_cast<std::size_t>(label_index(b))] =
          category_monodromy(a, b);
    }
  }
  return t;
}

std::string to_csv(const LabelTable& t) { return csv_of<SectorLabel>(t, label_cell); }
std::string to_csv(const SignTable& t) { return csv_of<int>(t, sign_cell); }

nlohmann::json to_json(const LabelTable& t) {
  nlohmann::json out = {{"labels", nlohmann::json::array()}, {"rows", nlohmann::json::array()}};
  for (SectorLabel a : all_labels()) out["labels"].push_back(label_name(a));
  for (const auto& row : t) {
    nlohmann::json r = nlohmann::json::array();
    for (SectorLabel c : row) r.push_back(label_name(c));
    out["rows"].push_back(std::move(r));
  }
  return out;
}

nlohmann::json to_json(const SignTable& t) {
  nlohmann::json out = {{"labels", nlohmann::json::array()}, {"rows", nlohmann::json::array()}};
  for (SectorLabel a : all_labels()) out["labels"].push_back(label_name(a));
  for (const auto& row : t) out["rows"].push_back(row);
  return out;
}

std::array<std::array<std::string, kNumLabels>, kNumLabels> read_table_csv(const std::filesystem::path& path) {
  const auto rows = read_csv(path);
  if (rows.size() != kNumLabels + 1) throw ParseError(path.string() + ": expected 17 rows");
  for (std::size_t j = 0; j < kNumLabels; ++j) {
    if (rows[0].size() != kNumLabels + 1 || rows[0][j + 1] != label_name(label_from_index(static_cast<int>(j)))) {
      throw ParseError(path.string() + ": header is not in label order");
    }
  }
  std::array<std::array<std::string, kNumLabels>, kNumLabels> out;
  for (std::size_t i = 0; i < kNumLabels; ++i) {
    const auto& row = rows[i + 1];
    if (row.size() != kNumLabels + 1 || row[0] != label_name(label_from_index(static_cast<int>(i)))) {
      throw ParseError(path.string() + ": row " + std::to_string(i + 1) + " is malformed");
    }
    for (std::size_t j = 0; j < kNumLabels; ++j) out[i][j] = row[j + 1];
  }
  return out;
}

LabelTable parse_label_table(const std::filesystem::path& path) {
  const auto cells = read_table_csv(path);
  LabelTable t{};
  for (std::size_t i = 0; i < kNumLabels; ++i) {
    for (std::size_t j = 0; j < kNumLabels; ++j) t[i][j] = parse_label(cells[i][j]);
  }
  return t;
}

SignTable parse_sign_table(const std::filesystem::path& path) {
  const auto cells = read_table_csv(path);
  SignTable t{};
  for (std::size_t i = 0; i < kNumLabels; ++i) {
    for (std::size_t j = 0; j < kNumLabels; ++j) {
      if (cells[i][j] == "1") {
        t[i][j] = 1;
      } else if (cells[i][j] == "-1") {
        t[i][j] = -1;
      } else {
        throw ParseError(path.string() + ": sign cell '" + cells[i][j] + "'");
      }
    }
  }
  return t;
}

std::array<AnyonRow, kNumLabels> read_anyon_csv(const std::filesystem::path& path) {
  const auto rows = read_csv(path);
  if (rows.size() != kNumLabels + 1) throw ParseError(path.string() + ": expected 17 rows");
  std::array<AnyonRow, kNumLabels> out;
  for (std::size_t i = 0; i < kNumLabels; ++i) {
    const auto& row = rows[i + 1];
    if (row.size() != 3) throw ParseError(path.string() + ": anyon rows have three cells");
    out[i] = {parse_label(row[0]), row[1], std::stoi(row[2])};
    if (out[i].label != label_from_index(static_cast<int>(i))) throw ParseError(path.string() + ": label order");
  }
  return out;
}

}  // namespace colorcode
