#include "colorcode/labels.hpp"

#include <string>

#include "colorcode/errors.hpp"

namespace colorcode {

namespace {

constexpr std::array<std::string_view, kNumLabels> kNames = {
    "1", "rx", "ry", "rz", "gx", "gy", "gz", "bx", "by", "bz", "f1", "f2", "f3", "f4", "f5", "f6"};

int kind_index(PauliKind k) { return static_cast<int>(k); }  // X, Y, Z

}  // namespace

std::array<SectorLabel, kNumLabels> all_labels() {
  std::array<SectorLabel, kNumLabels> out{};
  for (int i = 0; i < kNumLabels; ++i) out[static_cast<std::size_t>(i)] = label_from_index(i);
  return out;
}

std::string_view label_name(SectorLabel a) { return kNames.at(static_cast<std::size_t>(label_index(a))); }

SectorLabel parse_label(std::string_view s) {
  for (int i = 0; i < kNumLabels; ++i) {
    if (kNames[static_cast<std::size_t>(i)] == s) return label_from_index(i);
  }
  throw ParseError("unknown anyon label '" + std::string(s) + "'");
}

bool is_colored_label(SectorLabel a) {
  const int i = label_index(a);
  return i >= 1 && i <= 9;
}

SectorLabel boson_label(Color c, PauliKind k) { return label_from_index(1 + 3 * color_index(c) + kind_index(k)); }

Color label_color(SectorLabel a) {
  if (!is_colored_label(a)) throw ParseError("label " + std::string(label_name(a)) + " has no color");
  return color_from_index((label_index(a) - 1) / 3);
}

PauliKind label_kind(SectorLabel a) {
  if (!is_colored_label(a)) throw ParseError("label " + std::string(label_name(a)) + " has no Pauli kind");
  return static_cast<PauliKind>((label_index(a) - 1) % 3);
}

}  // namespace colorcode
