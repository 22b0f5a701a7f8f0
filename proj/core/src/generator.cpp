#include "modlat/generator.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <thread>

#include "modlat/digraph.hpp"
#include "modlat/lattice_io.hpp"
#include "modlat/rack.hpp"

namespace modlat {
namespace {

using FormSet = std::set<std::string>;

struct SearchLimits {
  Family family;
  int min_n;
  int max_n;
};

bool vi_family(Family f) { return f != Family::kModular; }

// Output of expanding a batch of partial structures.
struct Harvest {
  std::map<int, FormSet> states;   // children, keyed by element count
  std::map<int, FormSet> results;  // finished lattices, keyed by element count
};

class Expander {
 public:
  Expander(const SearchLimits& limits, Harvest& harvest) : limits_(limits), harvest_(harvest) {}

  void expand(const Digraph& state) {
    state_ = &state;
    const int n = state.n;
    in_ = state.in();
    std::vector<int> height(n, 0);
    for (int v = 0; v < n; ++v) {  // labels of a canonical DAG form a linear extension
      for (ElementMask m = in_[v]; m != 0; m &= m - 1) {
        height[v] = std::max(height[v], height[std::countr_zero(m)] + 1);
      }
    }
    const int h = *std::max_element(height.begin(), height.end());
    level_.clear();
    for (int v = 0; v < n; ++v) {
      if (height[v] == h) level_.push_back(v);
    }
    const int t = static_cast<int>(level_.size());
    link_.assign(t, 0);
    for (int i = 0; i < t; ++i) {
      for (int j = 0; j < t; ++j) {
        if (i != j && (in_[level_[i]] & in_[level_[j]]) != 0) link_[i] |= element_bit(j);
      }
    }
    const ElementMask all_local = element_bit(t) - 1;

    bool complete = true;
    for (int i = 0; i < t; ++i) {
      if ((link_[i] | element_bit(i)) != all_local) complete = false;
    }
    if (complete && n + 1 >= limits_.min_n && n + 1 <= limits_.max_n) close();

    const int min_new = vi_family(limits_.family) ? 2 : 1;
    max_new_ = limits_.max_n - n - 1;
    min_new_ = min_new;
    if (max_new_ < min_new_) return;
    uncovered_ = link_;
    cliques_.clear();
    partition_edges();
  }

 private:
  void close() {
    const Digraph& s = *state_;
    std::vector<Cover> covers = s.arcs();
    const int top = s.n;
    for (int v : level_) covers.push_back({v, top});
    accept(s.n + 1, covers);
  }

  void accept(int size, const std::vector<Cover>& covers) {
    Lattice lattice = [&] {
      try {
        return Lattice::from_covers(size, covers);
      } catch (const LatticeError&) {
        return Lattice::from_covers(1, {});
      }
    }();
    if (lattice.size() != size) return;
    if (!is_modular(lattice)) return;
    if (vi_family(limits_.family) && !is_vertically_indecomposable(lattice)) return;
    if (limits_.family == Family::kModularViRack && !is_rack(lattice)) return;
    harvest_.results[size].insert(canonical_form(lattice).bytes);
  }

  // Chooses the clique through the first uncovered edge, then recurses.
  void partition_edges() {
    if (static_cast<int>(cliques_.size()) > max_new_) return;
    int u = -1;
    for (int i = 0; i < static_cast<int>(level_.size()); ++i) {
      if (uncovered_[i] != 0) {
        u = i;
        break;
      }
    }
    if (u < 0) {
      add_singletons();
      return;
    }
    const int v = std::countr_zero(uncovered_[u]);
    const ElementMask common = uncovered_[u] & uncovered_[v];
    grow_clique(element_bit(u) | element_bit(v), common);
  }

  void grow_clique(ElementMask clique, ElementMask candidates) {
    // Every clique containing the seed edge, each produced once: branch on the
    // lowest candidate (take it or drop it).
    if (candidates == 0) {
      take_clique(clique);
      return;
    }
    const int w = std::countr_zero(candidates);
    const ElementMask rest = candidates & ~element_bit(w);
    grow_clique(clique | element_bit(w), rest & uncovered_[w]);
    grow_clique(clique, rest);
  }

  void take_clique(ElementMask clique) {
    std::vector<ElementMask> saved = uncovered_;
    for (ElementMask m = clique; m != 0; m &= m - 1) {
      const int i = std::countr_zero(m);
      uncovered_[i] &= ~clique;
    }
    cliques_.push_back(clique);
    partition_edges();
    cliques_.pop_back();
    uncovered_ = std::move(saved);
  }

  void add_singletons() {
    const int t = static_cast<int>(level_.size());
    ElementMask covered = 0;
    for (ElementMask c : cliques_) covered |= c;
    singles_.assign(t, 0);
    for (int i = 0; i < t; ++i) {
      if (!(covered & element_bit(i))) singles_[i] = 1;
    }
    const int base = static_cast<int>(cliques_.size()) + std::popcount(~covered & (element_bit(t) - 1));
    if (base > max_new_) return;
    extra_singletons(0, max_new_ - base, base);
  }

  void extra_singletons(int index, int spare, int count) {
    const int t = static_cast<int>(level_.size());
    if (index == t) {
      emit_level(count);
      return;
    }
    for (int extra = 0; extra <= spare; ++extra) {
      singles_[index] += extra;
      extra_singletons(index + 1, spare - extra, count + extra);
      singles_[index] -= extra;
    }
  }

  void emit_level(int count) {
    if (count < min_new_) return;
    const Digraph& s = *state_;
    const int size = s.n + count;
    if (limits_.min_n == limits_.max_n) {
      // The next step must either close at exactly max_n or leave room for
      // another full level.
      if (size + 1 != limits_.max_n && size + 1 + min_new_ > limits_.max_n) return;
    }

    std::vector<ElementMask> lower;  // lower covers of each new element, global labels
    lower.reserve(count);
    auto global = [&](ElementMask local) {
      ElementMask g = 0;
      for (ElementMask m = local; m != 0; m &= m - 1) g |= element_bit(level_[std::countr_zero(m)]);
      return g;
    };
    for (ElementMask c : cliques_) lower.push_back(global(c));
    for (int i = 0; i < static_cast<int>(level_.size()); ++i) {
      for (int k = 0; k < singles_[i]; ++k) lower.push_back(element_bit(level_[i]));
    }

    if (limits_.family == Family::kModularViRack && has_trinket_site(lower)) return;

    Digraph child;
    child.n = size;
    child.out = s.out;
    child.out.resize(size, 0);
    for (int k = 0; k < count; ++k) {
      for (ElementMask m = lower[k]; m != 0; m &= m - 1) {
        child.out[std::countr_zero(m)] |= element_bit(s.n + k);
      }
    }
    harvest_.states[size].insert(encode_digraph6(canonical_labeling(child).graph));
  }

  // Sites (a, b) with b on the new level are complete once the level is
  // chosen, and so are the cover sets of everything between the corners.
  bool has_trinket_site(const std::vector<ElementMask>& lower) const {
    const Digraph& s = *state_;
    for (ElementMask between : lower) {
      if (std::popcount(between) < 2) continue;
      const int x = std::countr_zero(between);
      const int y = std::countr_zero(between & (between - 1));
      const ElementMask shared = in_[x] & in_[y];
      if (std::popcount(shared) != 1) continue;
      const int a = std::countr_zero(shared);
      if (s.out[a] != between) continue;
      int d = 0;
      for (ElementMask m = between; m != 0; m &= m - 1) {
        const int e = std::countr_zero(m);
        if (std::popcount(in_[e]) != 1) continue;
        int ups = 0;
        for (ElementMask other : lower) {
          if (other & element_bit(e)) ++ups;
        }
        if (ups == 1) ++d;
      }
      if (std::min(d, std::popcount(between) - 2) > 0) return true;
    }
    return false;
  }

  const SearchLimits& limits_;
  Harvest& harvest_;
  const Digraph* state_ = nullptr;
  std::vector<ElementMask> in_;
  std::vector<int> level_;
  std::vector<ElementMask> link_;
  std::vector<ElementMask> uncovered_;
  std::vector<ElementMask> cliques_;
  std::vector<int> singles_;
  int max_new_ = 0;
  int min_new_ = 1;
};

void merge_into(std::map<int, FormSet>& target, std::map<int, FormSet>& source) {
  for (auto& [size, forms] : source) target[size].merge(forms);
}

std::map<int, FormSet> run_search(const SearchLimits& limits, int parallelism,
                                  std::size_t state_budget) {
  std::map<int, FormSet> results;
  if (limits.min_n <= 1) results[1].insert(canonical_form(Lattice::from_covers(1, {})).bytes);
  if (limits.max_n < 2) return results;

  std::map<int, FormSet> pending;
  Digraph bottom;
  bottom.n = 1;
  bottom.out = {0};
  pending[1].insert(encode_digraph6(bottom));
  std::size_t expanded = 0;
  const int workers = std::max(1, parallelism);

  while (!pending.empty()) {
    auto node = pending.begin();
    std::vector<std::string> batch(node->second.begin(), node->second.end());
    pending.erase(node);
    expanded += batch.size();
    if (state_budget != 0 && expanded > state_budget) {
      throw GenerationError("generation exceeded its budget of " + std::to_string(state_budget) +
                            " partial structures");
    }

    std::vector<Harvest> harvests(workers);
    auto work = [&](int w) {
      Expander expander(limits, harvests[w]);
      for (std::size_t i = w; i < batch.size(); i += workers) {
        expander.expand(decode_digraph6(batch[i]));
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::jthread> threads;
      for (int w = 0; w < workers; ++w) threads.emplace_back(work, w);
    }
    for (Harvest& h : harvests) {
      merge_into(pending, h.states);
      merge_into(results, h.results);
    }
  }
  return results;
}

std::vector<CanonicalForm> to_forms(const FormSet& set) {
  std::vector<CanonicalForm> out;
  out.reserve(set.size());
  for (const std::string& s : set) out.push_back(CanonicalForm{s});
  return out;
}

}  // namespace

std::vector<CanonicalForm> generate(const GenerationJob& job) {
  if (job.n < 1) throw std::invalid_argument("generate: n must be at least 1");
  if (job.n > kMaxElements) throw std::invalid_argument("generate: n exceeds the element limit");
  const SearchLimits limits{job.family, job.n, job.n};
  std::map<int, FormSet> results = run_search(limits, job.parallelism, job.state_budget);
  return to_forms(results[job.n]);
}

std::vector<std::vector<CanonicalForm>> generate_up_to(Family family, int max_n, int parallelism,
                                                       std::size_t state_budget) {
  if (max_n < 1) throw std::invalid_argument("generate_up_to: max_n must be at least 1");
  if (max_n > kMaxElements) throw std::invalid_argument("generate_up_to: max_n too large");
  const SearchLimits limits{family, 1, max_n};
  std::map<int, FormSet> results = run_search(limits, parallelism, state_budget);
  std::vector<std::vector<CanonicalForm>> out(max_n + 1);
  for (int k = 1; k <= max_n; ++k) out[k] = to_forms(results[k]);
  return out;
}

std::vector<CanonicalForm> generate_modular_vi(int n) {
  return generate({.n = n, .family = Family::kModularVi});
}

std::vector<CanonicalForm> generate_modular_vi_racks(int n) {
  return generate({.n = n, .family = Family::kModularViRack});
}

std::vector<CanonicalForm> generate_modular(int n) {
  return generate({.n = n, .family = Family::kModular});
}

std::vector<Lattice> filter_racks(std::span<const Lattice> lattices) {
  std::vector<Lattice> out;
  for (const Lattice& l : lattices) {
    if (is_rack(l)) out.push_back(l);
  }
  return out;
}

std::vector<CanonicalForm> filter_racks(std::span<const CanonicalForm> forms) {
  std::vector<CanonicalForm> out;
  for (const CanonicalForm& f : forms) {
    if (is_rack(lattice_of(f))) out.push_back(f);
  }
  return out;
}

Lattice lattice_of(const CanonicalForm& form) { return lattice_from_digraph6(form.bytes); }

}  // namespace modlat
