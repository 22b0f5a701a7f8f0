#include "modlat/lattice_io.hpp"

#include <charconv>
#include <stdexcept>
#include <vector>

#include "modlat/digraph.hpp"

namespace modlat {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

int parse_int(std::string_view s, std::string_view what) {
  s = trim(s);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("cover text: bad " + std::string(what) + " '" +
                                std::string(s) + "'");
  }
  return value;
}

}  // namespace

std::string to_cover_text(const Lattice& lattice) {
  std::string text = "n=" + std::to_string(lattice.size()) + "\n";
  for (const Cover& c : lattice.covers()) {
    text += std::to_string(c.lower) + "<" + std::to_string(c.upper) + "\n";
  }
  return text;
}

Lattice parse_cover_text(std::string_view text) {
  int n = -1;
  std::vector<Cover> covers;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = trim(text.substr(0, eol));
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (line.empty() || line.front() == '#') continue;
    if (n < 0) {
      if (line.substr(0, 2) != "n=") {
        throw std::invalid_argument("cover text: first line must be n=<count>");
      }
      n = parse_int(line.substr(2), "element count");
      continue;
    }
    const std::size_t lt = line.find('<');
    if (lt == std::string_view::npos) {
      throw std::invalid_argument("cover text: expected a<b, got '" + std::string(line) + "'");
    }
    covers.push_back({parse_int(line.substr(0, lt), "element"),
                      parse_int(line.substr(lt + 1), "element")});
  }
  if (n < 0) throw std::invalid_argument("cover text: missing n=<count> line");
  return Lattice::from_covers(n, covers);
}

std::string to_digraph6(const Lattice& lattice) {
  return encode_digraph6(Digraph::of(lattice));
}

Lattice lattice_from_digraph6(std::string_view text) {
  const Digraph g = decode_digraph6(trim(text));
  const std::vector<Cover> covers = g.arcs();
  return Lattice::from_covers(g.n, covers);
}

Lattice parse_lattice(std::string_view text) {
  std::string_view body = text;
  while (!body.empty() && (body.front() == ' ' || body.front() == '\n' || body.front() == '\t')) {
    body.remove_prefix(1);
  }
  if (!body.empty() && body.front() == '&') {
    return lattice_from_digraph6(body.substr(0, body.find('\n')));
  }
  return parse_cover_text(text);
}

}  // namespace modlat
