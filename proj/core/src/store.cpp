#include "modlat/store.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <regex>
#include <sstream>

#include "modlat/lattice_io.hpp"
#include "modlat/rack.hpp"

namespace modlat {
namespace fs = std::filesystem;

namespace {

std::string stem(const std::string& family, int k) { return family + "-" + std::to_string(k); }

void write_u64_le(std::ostream& out, std::uint64_t value) {
  std::array<char, 8> bytes{};
  for (int i = 0; i < 8; ++i) bytes[i] = static_cast<char>((value >> (8 * i)) & 0xff);
  out.write(bytes.data(), bytes.size());
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StoreError(StoreError::Kind::kIo, "cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t pos; (pos = text.find(sep, start)) != std::string::npos; start = pos + 1) {
    parts.push_back(text.substr(start, pos - start));
  }
  parts.push_back(text.substr(start));
  return parts;
}

std::vector<RecordMeta> parse_meta(const fs::path& path, std::size_t expected) {
  const std::string text = read_file(path);
  std::vector<RecordMeta> meta;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> fields = split(line, '\t');
    std::size_t index = 0;
    int sites = 0;
    auto bad = [&] {
      return StoreError(StoreError::Kind::kCorruptMeta,
                        path.string() + ": bad metadata line \"" + line + "\"");
    };
    if (fields.size() != 3) throw bad();
    if (std::from_chars(fields[0].data(), fields[0].data() + fields[0].size(), index).ec !=
            std::errc{} ||
        std::from_chars(fields[1].data(), fields[1].data() + fields[1].size(), sites).ec !=
            std::errc{} ||
        index != meta.size()) {
      throw bad();
    }
    CycleIndex z;
    try {
      z = CycleIndex::parse(fields[2]);
    } catch (const std::exception&) {
      throw bad();
    }
    if (z.degree() != sites) throw bad();
    meta.push_back({sites, std::move(z)});
  }
  if (meta.size() != expected) {
    throw StoreError(StoreError::Kind::kCorruptMeta,
                     path.string() + ": " + std::to_string(meta.size()) + " rows for " +
                         std::to_string(expected) + " records");
  }
  return meta;
}

}  // namespace

RecordMeta compute_meta(const Lattice& lattice) {
  const SiteAction action = site_action(lattice);
  return {action.degree, cycle_index(action)};
}

RackStore RackStore::in_memory(const std::string& family,
                               const std::vector<std::vector<CanonicalForm>>& by_size) {
  RackStore store;
  store.family_ = family;
  for (std::size_t k = 1; k < by_size.size(); ++k) {
    Segment& seg = store.segments_[static_cast<int>(k)];
    for (const CanonicalForm& form : by_size[k]) {
      seg.records.push_back(form.bytes);
      seg.meta.push_back(compute_meta(lattice_from_digraph6(form.bytes)));
    }
  }
  return store;
}

RackStore RackStore::write(const fs::path& dir, const std::string& family,
                           const std::vector<std::vector<CanonicalForm>>& by_size) {
  RackStore memory = in_memory(family, by_size);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw StoreError(StoreError::Kind::kIo, "cannot create " + dir.string() + ": " + ec.message());

  for (const auto& [k, seg] : memory.segments_) {
    const fs::path base = dir / stem(family, k);
    std::ofstream records(base.string() + ".d6", std::ios::binary | std::ios::trunc);
    std::ofstream index(base.string() + ".idx", std::ios::binary | std::ios::trunc);
    std::ofstream meta(base.string() + ".meta", std::ios::binary | std::ios::trunc);
    if (!records || !index || !meta) {
      throw StoreError(StoreError::Kind::kIo, "cannot write " + base.string() + ".*");
    }
    std::uint64_t offset = 0;
    for (std::size_t i = 0; i < seg.records.size(); ++i) {
      write_u64_le(index, offset);
      records << seg.records[i] << '\n';
      offset += seg.records[i].size() + 1;
      meta << i << '\t' << seg.meta[i].sites << '\t' << seg.meta[i].cycle_index.to_string()
           << '\n';
    }
    if (!records || !index || !meta) {
      throw StoreError(StoreError::Kind::kIo, "write failed for " + base.string() + ".*");
    }
  }
  return open(dir, family);
}

RackStore RackStore::open(const fs::path& dir, const std::string& family) {
  if (!fs::is_directory(dir)) {
    throw StoreError(StoreError::Kind::kIo, "store directory " + dir.string() + " not found");
  }
  RackStore store;
  store.family_ = family;
  store.dir_ = dir;
  store.on_disk_ = true;

  const std::regex name(family + R"(-([0-9]+)\.d6)");
  std::vector<int> sizes;
  for (const fs::directory_entry& entry : fs::directory_iterator(dir)) {
    std::smatch match;
    const std::string filename = entry.path().filename().string();
    if (std::regex_match(filename, match, name)) sizes.push_back(std::stoi(match[1].str()));
  }
  std::sort(sizes.begin(), sizes.end());

  for (int k : sizes) {
    const fs::path base = dir / stem(family, k);
    Segment seg;
    seg.records_path = base.string() + ".d6";
    const std::string records = read_file(seg.records_path);
    const std::string index = read_file(base.string() + ".idx");
    seg.file_size = records.size();
    auto corrupt = [&](const std::string& why) {
      return StoreError(StoreError::Kind::kCorruptIndex, base.string() + ".idx: " + why);
    };
    if (index.size() % 8 != 0) throw corrupt("length is not a multiple of 8");
    for (std::size_t p = 0; p < index.size(); p += 8) {
      std::uint64_t value = 0;
      for (int b = 7; b >= 0; --b) value = (value << 8) | static_cast<unsigned char>(index[p + b]);
      seg.offsets.push_back(value);
    }
    // Offsets must be exactly the starts of the newline-terminated records.
    std::vector<std::uint64_t> starts;
    for (std::size_t p = 0; p < records.size();) {
      starts.push_back(p);
      const std::size_t end = records.find('\n', p);
      if (end == std::string::npos) throw corrupt("last record is not newline-terminated");
      p = end + 1;
    }
    if (starts != seg.offsets) throw corrupt("offsets do not match record boundaries");
    seg.meta = parse_meta(base.string() + ".meta", seg.offsets.size());
    store.segments_.emplace(k, std::move(seg));
  }
  return store;
}

bool RackStore::has_size(int k) const { return segments_.count(k) != 0; }

int RackStore::max_complete_size() const {
  int m = 0;
  while (has_size(m + 1)) ++m;
  return m;
}

std::vector<int> RackStore::sizes() const {
  std::vector<int> out;
  for (const auto& entry : segments_) out.push_back(entry.first);
  return out;
}

void RackStore::require_size(int k) const {
  if (!has_size(k)) {
    throw StoreError(StoreError::Kind::kUnknownSize,
                     "store has no " + family_ + " records of size " + std::to_string(k));
  }
}

const RackStore::Segment& RackStore::segment(int k) const {
  require_size(k);
  return segments_.at(k);
}

std::size_t RackStore::count(int k) const {
  const Segment& seg = segment(k);
  return on_disk_ ? seg.offsets.size() : seg.records.size();
}

CanonicalForm RackStore::record(int k, std::size_t i) const {
  const Segment& seg = segment(k);
  if (i >= count(k)) {
    throw StoreError(StoreError::Kind::kOutOfRange,
                     "record " + std::to_string(i) + " out of range for size " +
                         std::to_string(k) + " (" + std::to_string(count(k)) + " records)");
  }
  if (!on_disk_) return CanonicalForm{seg.records[i]};
  std::ifstream in(seg.records_path, std::ios::binary);
  if (!in) throw StoreError(StoreError::Kind::kIo, "cannot read " + seg.records_path.string());
  in.seekg(static_cast<std::streamoff>(seg.offsets[i]));
  std::string line;
  if (!std::getline(in, line)) {
    throw StoreError(StoreError::Kind::kCorruptIndex, "cannot read record at offset " +
                                                          std::to_string(seg.offsets[i]));
  }
  return CanonicalForm{line};
}

Lattice RackStore::get(int k, std::size_t i) const {
  return lattice_from_digraph6(record(k, i).bytes);
}

const RecordMeta& RackStore::meta(int k, std::size_t i) const {
  const Segment& seg = segment(k);
  if (i >= seg.meta.size()) {
    throw StoreError(StoreError::Kind::kOutOfRange, "metadata row " + std::to_string(i) +
                                                        " out of range for size " +
                                                        std::to_string(k));
  }
  return seg.meta[i];
}

std::vector<CanonicalForm> RackStore::read_all(int k) const {
  const Segment& seg = segment(k);
  std::vector<CanonicalForm> out;
  if (!on_disk_) {
    for (const std::string& r : seg.records) out.push_back(CanonicalForm{r});
    return out;
  }
  std::ifstream in(seg.records_path, std::ios::binary);
  if (!in) throw StoreError(StoreError::Kind::kIo, "cannot read " + seg.records_path.string());
  for (std::string line; std::getline(in, line);) out.push_back(CanonicalForm{line});
  return out;
}

}  // namespace modlat
