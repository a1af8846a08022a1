#pragma once

#include <optional>
#include <vector>

#include "maclaurin/cliques.hpp"
#include "maclaurin/rational.hpp"

namespace maclaurin {

struct WeightVector;  // weights.hpp

enum class EqualityPrediction { Tight, Strict, Undecided };

// Combinatorial equality characterisation: the weighted inequality is tight
// for positive weights exactly when the graph induced on the s-clique support
// is complete multipartite with omega parts of equal total weight.
struct EqualityDiagnosis {
    Bitset support;        // vertices in some s-clique
    bool applicable = false;  // all support weights strictly positive
    bool complete_multipartite = false;
    std::optional<MultipartitePartition> parts;  // in original vertex ids
    std::vector<Rat> part_mass;                  // per-part weight sums
    bool balanced = false;
    int part_count = 0;
    int clique_number = 0;
    EqualityPrediction predicted = EqualityPrediction::Undecided;
};

EqualityDiagnosis diagnose_equality(const Graph& g, int s, int q, const WeightVector& x);

// k-cliques meeting every part at most once.  Parts may be any disjoint
// vertex sets.
std::vector<Clique> canonical_cliques(const Graph& g, const MultipartitePartition& parts, int k);

// Complete graph on the parts with aggregated weights.
struct ReducedGraph {
    int part_count = 0;
    std::vector<Rat> mass;  // z_i = sum of x over part i
};

// Requires `parts` to be a complete multipartite decomposition covering G.
// Verifies the clique-mass identity h_{s,G}(x) = h_{s,R}(z) for every s up
// to the part count.
ReducedGraph reduce_multipartite(const Graph& g, const MultipartitePartition& parts,
                                 const WeightVector& x);

const char* to_string(EqualityPrediction p);

}  // namespace maclaurin
