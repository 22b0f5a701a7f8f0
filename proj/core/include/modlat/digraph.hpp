#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "modlat/lattice.hpp"

namespace modlat {

/// Small directed graph as out-neighbour masks (at most 64 vertices).
struct Digraph {
  int n = 0;
  std::vector<ElementMask> out;

  static Digraph of(const Lattice& lattice);
  std::vector<ElementMask> in() const;
  std::vector<Cover> arcs() const;

  friend bool operator==(const Digraph&, const Digraph&) = default;
};

/// digraph6 text: '&', the size N(n), then the row-major adjacency matrix
/// packed six bits per byte (most significant first), each byte offset by 63.
/// No trailing newline.
std::string encode_digraph6(const Digraph& graph);

/// Inverse of encode_digraph6. A trailing newline is tolerated; anything else
/// malformed throws std::invalid_argument.
Digraph decode_digraph6(std::string_view text);

}  // namespace modlat
