#include "modlat/digraph.hpp"

#include <stdexcept>

namespace modlat {

Digraph Digraph::of(const Lattice& lattice) {
  Digraph g;
  g.n = lattice.size();
  g.out.resize(g.n);
  for (Element x = 0; x < g.n; ++x) g.out[x] = lattice.upper_cover_mask(x);
  return g;
}

std::vector<ElementMask> Digraph::in() const {
  std::vector<ElementMask> result(n, 0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if ((out[u] >> v) & 1U) result[v] |= element_bit(u);
    }
  }
  return result;
}

std::vector<Cover> Digraph::arcs() const {
  std::vector<Cover> result;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if ((out[u] >> v) & 1U) result.push_back({u, v});
    }
  }
  return result;
}

std::string encode_digraph6(const Digraph& graph) {
  const int n = graph.n;
  std::string text = "&";
  if (n <= 62) {
    text.push_back(static_cast<char>(n + 63));
  } else {
    // n <= 64 here, but keep the general four-byte header form.
    text.push_back(static_cast<char>(126));
    text.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    text.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    text.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0;
  int bits = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      acc = (acc << 1) | static_cast<int>((graph.out[i] >> j) & 1U);
      if (++bits == 6) {
        text.push_back(static_cast<char>(acc + 63));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) text.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return text;
}

Digraph decode_digraph6(std::string_view text) {
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (text.size() < 2 || text[0] != '&') {
    throw std::invalid_argument("digraph6: missing '&' header");
  }
  for (char c : text.substr(1)) {
    if (c < 63 || c > 126) throw std::invalid_argument("digraph6: byte out of range");
  }
  std::size_t pos = 1;
  int n = 0;
  if (text[pos] != 126) {
    n = text[pos++] - 63;
  } else {
    if (text.size() < 5 || text[2] == 126) {
      throw std::invalid_argument("digraph6: unsupported size header");
    }
    n = ((text[2] - 63) << 12) | ((text[3] - 63) << 6) | (text[4] - 63);
    pos = 5;
  }
  if (n > kMaxElements) throw std::invalid_argument("digraph6: graph larger than 64 vertices");
  const std::size_t need = (static_cast<std::size_t>(n) * n + 5) / 6;
  if (text.size() - pos != need) {
    throw std::invalid_argument("digraph6: expected " + std::to_string(need) +
                                " adjacency bytes, got " + std::to_string(text.size() - pos));
  }
  Digraph g;
  g.n = n;
  g.out.assign(n, 0);
  std::size_t bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j, ++bit) {
      const int byte = text[pos + bit / 6] - 63;
      if ((byte >> (5 - bit % 6)) & 1) g.out[i] |= element_bit(j);
    }
  }
  const std::size_t pad = need * 6 - bit;
  if (pad > 0 && ((text.back() - 63) & ((1 << pad) - 1)) != 0) {
    throw std::invalid_argument("digraph6: nonzero padding bits");
  }
  return g;
}

}  // namespace modlat
