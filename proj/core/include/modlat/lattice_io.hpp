#pragma once

#include <string>
#include <string_view>

#include "modlat/lattice.hpp"

namespace modlat {

/// Cover-list text: a line "n=<count>" followed by one "a<b" line per cover.
std::string to_cover_text(const Lattice& lattice);
Lattice parse_cover_text(std::string_view text);

/// digraph6 of the labeled cover digraph (arcs point upward).
std::string to_digraph6(const Lattice& lattice);
Lattice lattice_from_digraph6(std::string_view text);

/// Accepts either format; digraph6 is recognised by its leading '&'.
Lattice parse_lattice(std::string_view text);

}  // namespace modlat
