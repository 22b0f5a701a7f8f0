#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "modlat/canon.hpp"
#include "modlat/cycle_index.hpp"
#include "modlat/lattice.hpp"

namespace modlat {

class StoreError : public std::runtime_error {
 public:
  enum class Kind { kIo, kCorruptIndex, kCorruptMeta, kUnknownSize, kOutOfRange };

  StoreError(Kind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

struct RecordMeta {
  int sites = 0;
  CycleIndex cycle_index;
};

/// Canonical forms grouped by element count. On disk this is a directory
/// holding, for every size k present:
///
///   <family>-<k>.d6    one digraph6 record per line, sorted
///   <family>-<k>.idx   byte offset of every record, 64-bit little-endian
///   <family>-<k>.meta  "index<TAB>sites<TAB>cycle index" per record
///
/// A store may also live only in memory (same interface, no files).
/// Readers never share a stream, so concurrent get() calls are fine.
class RackStore {
 public:
  /// by_size[k] holds the records of size k; index 0 is ignored.
  static RackStore write(const std::filesystem::path& dir, const std::string& family,
                         const std::vector<std::vector<CanonicalForm>>& by_size);
  static RackStore in_memory(const std::string& family,
                             const std::vector<std::vector<CanonicalForm>>& by_size);
  static RackStore open(const std::filesystem::path& dir, const std::string& family = "rack");

  const std::string& family() const noexcept { return family_; }
  const std::filesystem::path& path() const noexcept { return dir_; }

  bool has_size(int k) const;
  /// Largest m such that every size 1..m is present.
  int max_complete_size() const;
  std::vector<int> sizes() const;

  std::size_t count(int k) const;
  CanonicalForm record(int k, std::size_t i) const;
  Lattice get(int k, std::size_t i) const;
  const RecordMeta& meta(int k, std::size_t i) const;

  /// Records of size k read sequentially rather than through the index.
  std::vector<CanonicalForm> read_all(int k) const;

  /// Throws StoreError unless size k is present.
  void require_size(int k) const;

 private:
  struct Segment {
    std::filesystem::path records_path;
    std::vector<std::uint64_t> offsets;
    std::uint64_t file_size = 0;
    std::vector<std::string> records;  // in-memory stores only
    std::vector<RecordMeta> meta;
  };

  const Segment& segment(int k) const;

  std::string family_;
  std::filesystem::path dir_;
  bool on_disk_ = false;
  std::map<int, Segment> segments_;
};

/// Site count and cycle index of a record, as stored in the metadata.
RecordMeta compute_meta(const Lattice& lattice);

}  // namespace modlat
