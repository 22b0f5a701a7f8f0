#include "modlat/orbit_vectors.hpp"

#include <algorithm>
#include <boost/random/mersenne_twister.hpp>
#include <boost/random/uniform_int_distribution.hpp>
#include <stdexcept>
#include <string>

#include "modlat/cycle_index.hpp"
#include "modlat/polya.hpp"

namespace modlat {
namespace {

void check_length(const SiteAction& action, std::span<const int> v) {
  if (static_cast<int>(v.size()) != action.degree) {
    throw std::invalid_argument("vector has " + std::to_string(v.size()) +
                                " coordinates, the action has degree " +
                                std::to_string(action.degree));
  }
}

}  // namespace

BigInt compositions(int total, int parts) {
  if (total < 0 || parts < 0) return 0;
  if (parts == 0) return total == 0 ? 1 : 0;
  // C(total + parts - 1, parts - 1)
  BigInt result = 1;
  const int k = parts - 1;
  for (int i = 1; i <= k; ++i) {
    result *= total + i;
    result /= i;
  }
  return result;
}

DecorationVector canonical_vector(const SiteAction& action, std::span<const int> v) {
  check_length(action, v);
  DecorationVector best(v.begin(), v.end());
  DecorationVector image(v.size());
  for (const Permutation& g : action.elements) {
    for (std::size_t i = 0; i < v.size(); ++i) image[i] = v[g[i]];
    if (image > best) best = image;
  }
  return best;
}

bool is_canonical_vector(const SiteAction& action, std::span<const int> v) {
  const DecorationVector c = canonical_vector(action, v);
  return std::equal(c.begin(), c.end(), v.begin(), v.end());
}

OrbitVectorFamily::OrbitVectorFamily(SiteAction action, int total)
    : action_(std::move(action)), total_(total) {
  if (total_ < 0) throw std::invalid_argument("OrbitVectorFamily: negative total");
  const Permutation id = identity_permutation(action_.degree);
  for (const Permutation& g : action_.elements) {
    if (static_cast<int>(g.size()) != action_.degree) {
      throw std::invalid_argument("OrbitVectorFamily: permutation of wrong degree");
    }
    if (g != id) moving_.push_back(g);
  }
  size_ = function_series(cycle_index(action_), total_)[total_];
}

bool OrbitVectorFamily::extend(const Node& node, int value, Node& child) const {
  child.prefix = node.prefix;
  child.prefix.push_back(value);
  child.remaining = node.remaining - value;
  child.undecided.clear();
  const int known = static_cast<int>(child.prefix.size());
  for (Pending p : node.undecided) {
    const Permutation& g = moving_[p.element];
    bool decided = false;
    while (p.position < known && g[p.position] < known) {
      const int mine = child.prefix[p.position];
      const int theirs = child.prefix[g[p.position]];
      if (theirs > mine) return false;  // v o g would beat v
      if (theirs < mine) {
        decided = true;
        break;
      }
      ++p.position;
    }
    if (!decided && p.position < length()) child.undecided.push_back(p);
  }
  return true;
}

BigInt OrbitVectorFamily::count(const Node& node) const {
  const int left = length() - static_cast<int>(node.prefix.size());
  if (node.undecided.empty()) return compositions(node.remaining, left);
  if (left == 0) return node.remaining == 0 ? 1 : 0;
  BigInt sum = 0;
  Node child;
  const int low = left == 1 ? node.remaining : 0;
  for (int value = node.remaining; value >= low; --value) {
    if (extend(node, value, child)) sum += count(child);
  }
  return sum;
}

BigInt OrbitVectorFamily::counted_size() const {
  Node root;
  root.remaining = total_;
  for (int i = 0; i < static_cast<int>(moving_.size()); ++i) root.undecided.push_back({i, 0});
  return count(root);
}

DecorationVector OrbitVectorFamily::unrank(const BigInt& index) const {
  if (index < 0 || index >= size_) {
    throw std::out_of_range("index " + index.str() + " out of range (family size " +
                            size_.str() + ")");
  }
  Node node;
  node.remaining = total_;
  for (int i = 0; i < static_cast<int>(moving_.size()); ++i) node.undecided.push_back({i, 0});
  BigInt rest = index;
  Node child;
  while (static_cast<int>(node.prefix.size()) < length()) {
    const int left = length() - static_cast<int>(node.prefix.size());
    const int low = left == 1 ? node.remaining : 0;
    bool moved = false;
    for (int value = node.remaining; value >= low; --value) {
      if (!extend(node, value, child)) continue;
      const BigInt c = count(child);
      if (rest < c) {
        node = child;
        moved = true;
        break;
      }
      rest -= c;
    }
    if (!moved) throw std::logic_error("OrbitVectorFamily::unrank: counts are inconsistent");
  }
  return node.prefix;
}

BigInt OrbitVectorFamily::rank(std::span<const int> v) const {
  check_length(action_, v);
  int sum = 0;
  for (int x : v) {
    if (x < 0) throw std::invalid_argument("rank: negative coordinate");
    sum += x;
  }
  if (sum != total_) throw std::invalid_argument("rank: coordinates do not sum to the total");
  if (!is_canonical_vector(action_, v)) {
    throw std::invalid_argument("rank: vector is not the representative of its orbit");
  }
  Node node;
  node.remaining = total_;
  for (int i = 0; i < static_cast<int>(moving_.size()); ++i) node.undecided.push_back({i, 0});
  BigInt before = 0;
  Node child;
  for (int pos = 0; pos < length(); ++pos) {
    for (int value = node.remaining; value > v[pos]; --value) {
      if (pos + 1 == length()) break;  // the last coordinate is forced
      if (extend(node, value, child)) before += count(child);
    }
    if (!extend(node, v[pos], child)) {
      throw std::logic_error("OrbitVectorFamily::rank: representative rejected");
    }
    node = child;
  }
  return before;
}

void OrbitVectorFamily::visit_all(Node& node,
                                  const std::function<void(const DecorationVector&)>& visit) const {
  const int left = length() - static_cast<int>(node.prefix.size());
  if (left == 0) {
    if (node.remaining == 0) visit(node.prefix);
    return;
  }
  const int low = left == 1 ? node.remaining : 0;
  Node child;
  for (int value = node.remaining; value >= low; --value) {
    if (extend(node, value, child)) visit_all(child, visit);
  }
}

void OrbitVectorFamily::for_each(const std::function<void(const DecorationVector&)>& visit) const {
  Node root;
  root.remaining = total_;
  for (int i = 0; i < static_cast<int>(moving_.size()); ++i) root.undecided.push_back({i, 0});
  if (length() == 0) {
    if (total_ == 0) visit({});
    return;
  }
  visit_all(root, visit);
}

std::vector<DecorationVector> OrbitVectorFamily::list() const {
  std::vector<DecorationVector> out;
  for_each([&](const DecorationVector& v) { out.push_back(v); });
  return out;
}

DecorationVector OrbitVectorFamily::sample_uniform(std::uint64_t seed) const {
  if (size_ == 0) throw std::out_of_range("sample_uniform: the family is empty");
  boost::random::mt19937_64 engine(seed);
  boost::random::uniform_int_distribution<BigInt> pick(0, size_ - 1);
  return unrank(pick(engine));
}

std::vector<DecorationVector> list_decoration_vectors(const SiteAction& action, int total) {
  return OrbitVectorFamily(action, total).list();
}

}  // namespace modlat
