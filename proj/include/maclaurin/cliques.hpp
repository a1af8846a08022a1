#pragma once

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "maclaurin/graph.hpp"

namespace maclaurin {

// A clique is carried as its vertex bitset; ops that require one validate it.
using Clique = Bitset;

bool is_clique(const Graph& g, const Bitset& verts);

// All k-cliques in lexicographic order of their ascending vertex lists.
std::vector<Clique> enumerate_cliques(const Graph& g, int k);

// Visits each k-clique once without materialising the list.
void for_each_clique(const Graph& g, int k, const std::function<void(const Clique&)>& fn);

long long clique_count(const Graph& g, int k);

// omega(G); 0 for the empty graph.
int clique_number(const Graph& g);

// omega of the subgraph induced on `allowed`.
int clique_number_within(const Graph& g, const Bitset& allowed);

// All maximal cliques (Bron-Kerbosch with pivoting), sorted lexicographically.
std::vector<Clique> maximal_cliques(const Graph& g);

// Size of a largest clique containing `clique`.  Throws when the input is not
// a clique or is empty.
int extension_number(const Graph& g, const Clique& clique);

// q-cliques with their extension numbers, in lexicographic clique order.
struct ExtensionMap {
    int q = 0;
    std::vector<std::pair<Clique, int>> entries;

    std::map<int, long long> histogram() const;
    // Extension number for a clique known to be in the map.
    int at(const Clique& clique) const;
};

ExtensionMap extension_map(const Graph& g, int q);

// Vertices contained in at least one s-clique.
Bitset clique_support(const Graph& g, int s);

// Disjoint independent sets with all cross-part pairs adjacent.
struct MultipartitePartition {
    std::vector<Bitset> parts;  // ordered by smallest member

    Bitset covered() const;
};

// The unique complete multipartite partition (complement components) when G
// is complete multipartite; nullopt otherwise.
std::optional<MultipartitePartition> complete_multipartite_decomposition(const Graph& g);

// Subgraph induced on `verts`; old_index[i] gives the original vertex of the
// i-th kept vertex (kept vertices are renumbered in ascending order).
Graph induced_subgraph(const Graph& g, const Bitset& verts, std::vector<int>* old_index = nullptr);

}  // namespace maclaurin
