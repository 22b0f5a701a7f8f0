#include "modlat/listing.hpp"

#include <algorithm>
#include <boost/random/mersenne_twister.hpp>
#include <boost/random/uniform_int_distribution.hpp>
#include <stdexcept>

#include "modlat/orbit_vectors.hpp"
#include "modlat/rack.hpp"

namespace modlat {

void VirtualListing::check_index(const BigInt& index) const {
  if (index < 0 || index >= cardinality()) {
    throw std::out_of_range("index " + to_string(index) + " out of range (cardinality " +
                            to_string(cardinality()) + ")");
  }
}

void VirtualListing::for_each(const std::function<bool(const Lattice&)>& visit) const {
  for (BigInt i = 0; i < cardinality(); ++i) {
    if (!visit(unrank(i))) return;
  }
}

Lattice VirtualListing::sample(std::uint64_t seed) const {
  if (cardinality() == 0) throw std::out_of_range("cannot sample from an empty listing");
  boost::random::mt19937_64 rng(seed);
  boost::random::uniform_int_distribution<BigInt> pick(0, cardinality() - 1);
  return unrank(pick(rng));
}

ViListing::ViListing(const RackStore& racks, int n) : racks_(racks), n_(n) {
  if (n < 1) throw std::invalid_argument("listing size must be at least 1");
  DecorationCounter counter;
  cardinality_ = 0;
  for (int k = 1; k <= n; ++k) {
    racks.require_size(k);
    const std::size_t count = racks.count(k);
    for (std::size_t i = 0; i < count; ++i) {
      BigInt size = counter.count(racks.meta(k, i).cycle_index, n - k);
      if (size == 0) continue;
      blocks_.push_back({k, i, cardinality_, size});
      cardinality_ += size;
    }
  }
}

Lattice ViListing::unrank(const BigInt& index) const {
  check_index(index);
  auto it = std::upper_bound(blocks_.begin(), blocks_.end(), index,
                             [](const BigInt& value, const Block& b) { return value < b.start; });
  const Block& block = *std::prev(it);
  const Lattice rack = racks_.get(block.rack_size, block.record);
  const OrbitVectorFamily family(site_action(rack), n_ - block.rack_size);
  return decorate(rack, family.unrank(index - block.start));
}

void ViListing::for_each(const std::function<bool(const Lattice&)>& visit) const {
  for (const Block& block : blocks_) {
    const Lattice rack = racks_.get(block.rack_size, block.record);
    const OrbitVectorFamily family(site_action(rack), n_ - block.rack_size);
    bool stop = false;
    // for_each on the family has no early exit; skip the remaining work instead.
    family.for_each([&](const DecorationVector& v) {
      if (!stop && !visit(decorate(rack, v))) stop = true;
    });
    if (stop) return;
  }
}

ModularListing::ModularListing(const RackStore& racks, int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("listing size must be at least 1");
  vi_.resize(n + 1);
  for (int j = 2; j <= n; ++j) vi_[j] = std::make_unique<ViListing>(racks, j);
  m_.assign(n + 1, 0);
  m_[1] = 1;
  for (int s = 2; s <= n; ++s) {
    for (int j = 2; j <= s; ++j) m_[s] += vi_[j]->cardinality() * m_[s - j + 1];
  }
}

Lattice ModularListing::unrank(const BigInt& index) const {
  check_index(index);
  if (n_ == 1) return Lattice::from_covers(1, {});

  // Fix the shape one component at a time. A prefix with radix product
  // `mult` followed by component j owns mult * |MV_j| * |M_rest| indices.
  std::vector<int> shape;
  BigInt rest = index;
  BigInt mult = 1;
  int remaining = n_;  // size still to cover, counting the shared bottom
  while (remaining > 1) {
    bool placed = false;
    for (int j = 2; j <= remaining; ++j) {
      const BigInt weight = mult * vi_[j]->cardinality() * m_[remaining - j + 1];
      if (rest < weight) {
        shape.push_back(j);
        mult *= vi_[j]->cardinality();
        remaining -= j - 1;
        placed = true;
        break;
      }
      rest -= weight;
    }
    if (!placed) throw std::logic_error("modular listing: shape walk overran");
  }

  std::vector<BigInt> digits(shape.size());
  for (std::size_t i = shape.size(); i-- > 0;) {
    const BigInt& radix = vi_[shape[i]]->cardinality();
    digits[i] = rest % radix;
    rest /= radix;
  }
  std::vector<Lattice> parts;
  for (std::size_t i = 0; i < shape.size(); ++i) parts.push_back(vi_[shape[i]]->unrank(digits[i]));
  return vertical_compose(parts);
}

}  // namespace modlat
