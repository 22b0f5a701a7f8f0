#include "modlat/canon.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <tuple>

#include "modlat/rack.hpp"

namespace modlat {
namespace {

using Colouring = std::vector<int>;
using Code = std::vector<std::uint64_t>;

class Search {
 public:
  enum class Mode { kCanonical, kAutomorphisms };

  Search(const Digraph& graph, Mode mode, bool twin_pruning)
      : n_(graph.n), out_(graph.out), in_(graph.in()), mode_(mode), twin_pruning_(twin_pruning) {
    twin_rep_.resize(n_);
    for (int v = 0; v < n_; ++v) {
      twin_rep_[v] = v;
      for (int u = 0; u < v; ++u) {
        if (out_[u] == out_[v] && in_[u] == in_[v]) {
          twin_rep_[v] = twin_rep_[u];
          break;
        }
      }
    }
  }

  void run() {
    if (n_ == 0) {
      best_labels_.clear();
      return;
    }
    Colouring colours = initial_colouring();
    std::vector<int> prefix;
    descend(std::move(colours), prefix);
  }

  const Colouring& best_labels() const { return best_labels_; }
  const std::vector<Permutation>& automorphisms() const { return found_; }

 private:
  Colouring initial_colouring() const {
    std::vector<int> height(n_, 0);
    std::vector<int> depth(n_, 0);
    std::vector<int> indeg(n_);
    std::vector<int> order;
    for (int v = 0; v < n_; ++v) {
      indeg[v] = std::popcount(in_[v]);
      if (indeg[v] == 0) order.push_back(v);
    }
    for (std::size_t head = 0; head < order.size(); ++head) {
      const int v = order[head];
      for (ElementMask m = out_[v]; m != 0; m &= m - 1) {
        const int w = std::countr_zero(m);
        height[w] = std::max(height[w], height[v] + 1);
        if (--indeg[w] == 0) order.push_back(w);
      }
    }
    if (static_cast<int>(order.size()) == n_) {
      for (auto it = order.rbegin(); it != order.rend(); ++it) {
        for (ElementMask m = out_[*it]; m != 0; m &= m - 1) {
          depth[*it] = std::max(depth[*it], depth[std::countr_zero(m)] + 1);
        }
      }
    } else {
      std::fill(height.begin(), height.end(), 0);  // cyclic input: degrees only
    }
    std::vector<std::tuple<int, int, int, int>> key(n_);
    for (int v = 0; v < n_; ++v) {
      key[v] = {height[v], -depth[v], std::popcount(in_[v]), std::popcount(out_[v])};
    }
    std::vector<std::tuple<int, int, int, int>> distinct = key;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    Colouring colours(n_);
    for (int v = 0; v < n_; ++v) {
      colours[v] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), key[v]) - distinct.begin());
    }
    return colours;
  }

  // Equitable refinement. New colours are ranks of (old colour, sorted
  // out-neighbour colours, sorted in-neighbour colours), so the cell order
  // only depends on the structure.
  void refine(Colouring& colours) const {
    int count = *std::max_element(colours.begin(), colours.end()) + 1;
    std::vector<std::vector<int>> sig(n_);
    std::vector<int> order(n_);
    while (count < n_) {
      for (int v = 0; v < n_; ++v) {
        std::vector<int>& s = sig[v];
        s.clear();
        s.push_back(colours[v]);
        const std::size_t mark = s.size();
        for (ElementMask m = out_[v]; m != 0; m &= m - 1) s.push_back(colours[std::countr_zero(m)]);
        std::sort(s.begin() + static_cast<std::ptrdiff_t>(mark), s.end());
        s.push_back(-1);
        const std::size_t mark2 = s.size();
        for (ElementMask m = in_[v]; m != 0; m &= m - 1) s.push_back(colours[std::countr_zero(m)]);
        std::sort(s.begin() + static_cast<std::ptrdiff_t>(mark2), s.end());
      }
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
      int next = 0;
      for (int i = 0; i < n_; ++i) {
        if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++next;
        colours[order[i]] = next;
      }
      if (next + 1 == count) break;
      count = next + 1;
    }
  }

  Colouring individualize(const Colouring& colours, int v) const {
    Colouring result(n_);
    for (int w = 0; w < n_; ++w) {
      result[w] = 2 * colours[w] + ((colours[w] == colours[v] && w != v) ? 1 : 0);
    }
    std::vector<int> distinct = result;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int& c : result) {
      c = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), c) - distinct.begin());
    }
    return result;
  }

  Code encode(const Colouring& labels) const {
    Code rows(n_, 0);
    for (int u = 0; u < n_; ++u) {
      for (ElementMask m = out_[u]; m != 0; m &= m - 1) {
        rows[labels[u]] |= std::uint64_t{1} << (63 - labels[std::countr_zero(m)]);
      }
    }
    return rows;
  }

  // Vertex sitting at each position of a leaf.
  Permutation positions(const Colouring& labels) const {
    Permutation at(n_);
    for (int v = 0; v < n_; ++v) at[labels[v]] = v;
    return at;
  }

  void leaf(const Colouring& labels) {
    Code code = encode(labels);
    if (first_code_.empty()) {
      first_code_ = code;
      first_at_ = positions(labels);
      best_code_ = std::move(code);
      best_at_ = first_at_;
      best_labels_ = labels;
      if (mode_ == Mode::kAutomorphisms) found_.push_back(identity_permutation(n_));
      return;
    }
    if (mode_ == Mode::kAutomorphisms) {
      if (code == first_code_) found_.push_back(map_to(first_at_, labels));
      return;
    }
    if (code == first_code_) {
      found_.push_back(map_to(first_at_, labels));
    } else if (code == best_code_) {
      found_.push_back(map_to(best_at_, labels));
    } else if (code < best_code_) {
      best_code_ = std::move(code);
      best_at_ = positions(labels);
      best_labels_ = labels;
    }
  }

  Permutation map_to(const Permutation& at, const Colouring& labels) const {
    Permutation g(n_);
    for (int v = 0; v < n_; ++v) g[v] = at[labels[v]];
    return g;
  }

  bool same_orbit(int u, const std::vector<int>& explored, const std::vector<int>& prefix) const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool any = false;
    for (const Permutation& g : found_) {
      bool fixes = true;
      for (int p : prefix) {
        if (g[p] != p) {
          fixes = false;
          break;
        }
      }
      if (!fixes) continue;
      any = true;
      for (int v = 0; v < n_; ++v) parent[find(v)] = find(g[v]);
    }
    if (!any) return false;
    const int root = find(u);
    return std::any_of(explored.begin(), explored.end(), [&](int e) { return find(e) == root; });
  }

  void descend(Colouring colours, std::vector<int>& prefix) {
    refine(colours);
    // First non-singleton cell in colour order.
    std::vector<int> size(n_, 0);
    for (int c : colours) ++size[c];
    int target = -1;
    for (int c = 0; c < n_; ++c) {
      if (size[c] > 1) {
        target = c;
        break;
      }
    }
    if (target < 0) {
      leaf(colours);
      return;
    }
    std::vector<int> explored;
    for (int u = 0; u < n_; ++u) {
      if (colours[u] != target) continue;
      if (twin_pruning_ && std::any_of(explored.begin(), explored.end(),
                                       [&](int e) { return twin_rep_[e] == twin_rep_[u]; })) {
        continue;
      }
      if (mode_ == Mode::kCanonical && same_orbit(u, explored, prefix)) continue;
      prefix.push_back(u);
      descend(individualize(colours, u), prefix);
      prefix.pop_back();
      explored.push_back(u);
    }
  }

  int n_;
  std::vector<ElementMask> out_;
  std::vector<ElementMask> in_;
  Mode mode_;
  bool twin_pruning_;
  std::vector<int> twin_rep_;

  Code first_code_;
  Permutation first_at_;
  Code best_code_;
  Permutation best_at_;
  Colouring best_labels_;
  std::vector<Permutation> found_;
};

}  // namespace

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

Permutation inverse(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

Permutation identity_permutation(int n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

CanonicalLabeling canonical_labeling(const Digraph& graph) {
  Search search(graph, Search::Mode::kCanonical, /*twin_pruning=*/true);
  search.run();
  CanonicalLabeling result;
  result.labels = search.best_labels();
  result.graph.n = graph.n;
  result.graph.out.assign(graph.n, 0);
  for (int u = 0; u < graph.n; ++u) {
    for (ElementMask m = graph.out[u]; m != 0; m &= m - 1) {
      result.graph.out[result.labels[u]] |= element_bit(result.labels[std::countr_zero(m)]);
    }
  }
  return result;
}

CanonicalForm canonical_form(const Digraph& graph) {
  return CanonicalForm{encode_digraph6(canonical_labeling(graph).graph)};
}

CanonicalForm canonical_form(const Lattice& lattice) {
  return canonical_form(Digraph::of(lattice));
}

Lattice canonical_lattice(const Lattice& lattice) {
  const CanonicalLabeling lab = canonical_labeling(Digraph::of(lattice));
  return relabel(lattice, lab.labels);
}

bool is_isomorphic(const Lattice& a, const Lattice& b) {
  if (a.size() != b.size() || a.covers().size() != b.covers().size()) return false;
  return canonical_form(a) == canonical_form(b);
}

std::vector<Permutation> digraph_automorphisms(const Digraph& graph, bool modulo_twins) {
  Search search(graph, Search::Mode::kAutomorphisms, modulo_twins);
  search.run();
  std::vector<Permutation> result = search.automorphisms();
  if (graph.n == 0) result.push_back({});
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<Permutation> automorphism_group(const Lattice& lattice) {
  return digraph_automorphisms(Digraph::of(lattice), /*modulo_twins=*/false);
}

SiteAction site_action(const Lattice& lattice) {
  const std::vector<DecorationSite> sites = decoration_sites(lattice);
  SiteAction action;
  action.degree = static_cast<int>(sites.size());
  std::vector<int> site_of_lower(lattice.size(), -1);
  for (std::size_t i = 0; i < sites.size(); ++i) site_of_lower[sites[i].lower] = static_cast<int>(i);

  // Twin swaps fix every site corner, so one automorphism per twin coset
  // already produces the whole image.
  std::set<Permutation> images;
  for (const Permutation& g : digraph_automorphisms(Digraph::of(lattice), true)) {
    Permutation p(sites.size());
    for (std::size_t i = 0; i < sites.size(); ++i) {
      p[i] = site_of_lower[g[sites[i].lower]];
    }
    images.insert(std::move(p));
  }
  action.elements.assign(images.begin(), images.end());
  return action;
}

}  // namespace modlat
