#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "colorcode/lattice.hpp"
#include "colorcode/pauli.hpp"
#include "colorcode/strings.hpp"

namespace colorcode {

using Json = nlohmann::json;

Json lattice_to_json(const ColoredLattice& lattice);
// Throws ParseError on malformed input; the result is not validated.
ColoredLattice lattice_from_json(const Json& j);

// {"n", "phase", "x", "z"} with hex bit-vectors.
Json operator_to_json(const PauliOperator& p);
PauliOperator operator_from_json(const Json& j);

Json string_to_json(const ColorString& s);
// Rebuilds the string on the lattice from its faces, then checks any listed vertices agree.
ColorString string_from_json(const ColoredLattice& lattice, const Json& j);

Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace colorcode
