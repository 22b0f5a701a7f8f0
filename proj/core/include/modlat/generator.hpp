#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "modlat/canon.hpp"
#include "modlat/lattice.hpp"

namespace modlat {

enum class Family {
  kModular,        // all modular lattices (used for cross-checks)
  kModularVi,      // vertically indecomposable modular lattices
  kModularViRack,  // vertically indecomposable modular racks
};

struct GenerationJob {
  int n = 1;
  Family family = Family::kModularVi;
  int parallelism = 1;
  /// Upper bound on partial structures expanded; 0 means unlimited.
  std::size_t state_budget = 0;
};

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One canonical form per isomorphism class of n-element lattices in the
/// family, sorted by their bytes.
///
/// Modular lattices are graded, so they are built bottom-up one level at a
/// time. For two elements on the same level, sharing an upper cover is
/// equivalent to sharing a lower cover, and the shared upper cover is their
/// join. So the lower-cover sets of a new level must partition the edges of
/// the "shares a lower cover" graph into cliques. Any number of
/// single-element sets may be added, and every element of the old level has
/// to be covered. Partial structures are deduplicated by canonical form
/// before they are expanded. Finished lattices are validated in full.
std::vector<CanonicalForm> generate(const GenerationJob& job);

/// Same search, but every size 1..max_n in one pass; result[k] holds size k
/// (result[0] is empty).
std::vector<std::vector<CanonicalForm>> generate_up_to(Family family, int max_n,
                                                       int parallelism = 1,
                                                       std::size_t state_budget = 0);

std::vector<CanonicalForm> generate_modular_vi(int n);
std::vector<CanonicalForm> generate_modular_vi_racks(int n);
std::vector<CanonicalForm> generate_modular(int n);

/// The members that are racks, order preserved.
std::vector<Lattice> filter_racks(std::span<const Lattice> lattices);
std::vector<CanonicalForm> filter_racks(std::span<const CanonicalForm> forms);

/// Decodes a stored canonical form.
Lattice lattice_of(const CanonicalForm& form);

}  // namespace modlat
