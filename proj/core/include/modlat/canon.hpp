#pragma once

#include <compare>
#include <string>
#include <vector>

#include "modlat/digraph.hpp"
#include "modlat/lattice.hpp"

namespace modlat {

/// digraph6 bytes of the canonically relabeled cover digraph. Two lattices
/// are isomorphic exactly when their canonical forms are equal.
struct CanonicalForm {
  std::string bytes;

  auto operator<=>(const CanonicalForm&) const = default;
};

struct CanonicalLabeling {
  Permutation labels;  // labels[v] = canonical label of vertex v
  Digraph graph;       // the relabeled digraph
};

/// Canonical labeling by individualization and refinement, keeping the
/// lexicographically least adjacency matrix among the leaves. Vertices are
/// first coloured by (height, depth, in-degree, out-degree), so canonical
/// labels of a DAG always form a linear extension sorted by height.
CanonicalLabeling canonical_labeling(const Digraph& graph);

CanonicalForm canonical_form(const Digraph& graph);
CanonicalForm canonical_form(const Lattice& lattice);

/// The lattice relabeled by its canonical labeling.
Lattice canonical_lattice(const Lattice& lattice);

bool is_isomorphic(const Lattice& a, const Lattice& b);

/// Twins are vertices with identical in- and out-neighbourhoods; swapping two
/// of them is always an automorphism. With modulo_twins set, only one twin per
/// class is tried at each branching, so every automorphism is a returned one
/// composed with twin swaps. Otherwise the result is the full group.
std::vector<Permutation> digraph_automorphisms(const Digraph& graph, bool modulo_twins);

/// Every order automorphism of the lattice, identity first.
std::vector<Permutation> automorphism_group(const Lattice& lattice);

/// Permutation group induced on decoration sites by lattice automorphisms.
/// elements[g][i] = j means site i is carried to site j; sites are indexed in
/// the order of decoration_sites().
struct SiteAction {
  int degree = 0;
  std::vector<Permutation> elements;
};

SiteAction site_action(const Lattice& lattice);

/// (a * b)[x] = a[b[x]]
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);
Permutation identity_permutation(int n);

}  // namespace modlat
