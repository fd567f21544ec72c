#pragma once

#include <string>
#include <vector>

#include "colorcode/lattice.hpp"
#include "colorcode/stabilizer.hpp"
#include "colorcode/strings.hpp"

namespace colorcode {

struct RenderOverlay {
  std::vector<ColorString> strings;
  Syndrome syndrome;  // violated faces get a heavy outline
};

// SVG 1.1 document; byte-identical for identical input.
std::string render_svg(const ColoredLattice& lattice, const RenderOverlay& overlay = {});

}  // namespace colorcode
