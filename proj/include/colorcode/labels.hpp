#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "colorcode/lattice.hpp"
#include "colorcode/pauli.hpp"

namespace colorcode {

// The 16 anyon labels in table order.
enum class SectorLabel : std::uint8_t {
  One,
  RX, RY, RZ,
  GX, GY, GZ,
  BX, BY, BZ,
  F1, F2, F3, F4, F5, F6,
};

inline constexpr int kNumLabels = 16;

constexpr int label_index(SectorLabel a) { return static_cast<int>(a); }
constexpr SectorLabel label_from_index(int i) { return static_cast<SectorLabel>(i); }

std::array<SectorLabel, kNumLabels> all_labels();
std::string_view label_name(SectorLabel a);  // "1", "rx", ..., "f6"
SectorLabel parse_label(std::string_view s);

bool is_colored_label(SectorLabel a);  // one of the nine colored labels
SectorLabel boson_label(Color c, PauliKind k);
Color label_color(SectorLabel a);  // colored labels only
PauliKind label_kind(SectorLabel a);

}  // namespace colorcode
