#pragma once

#include <string>

#include "modlat/lattice.hpp"

namespace modlat {

/// Graphviz DOT text of the cover diagram drawn bottom-up. Elements of equal
/// height share a rank; trinkets are drawn dashed.
std::string render_dot(const Lattice& lattice);

}  // namespace modlat
