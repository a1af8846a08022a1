#pragma once

#include <vector>

#include "maclaurin/weights.hpp"

namespace maclaurin {

// Replace vertex v by an independent set of size multiplicities[v]; edges
// become complete bipartite joins.  Zero multiplicity deletes the vertex.
struct BlowupSpec {
    Graph base;
    std::vector<long long> multiplicities;
};

struct BlowupResult {
    Graph graph;
    std::vector<int> origin;  // base vertex of each blown-up vertex
};

BlowupResult blowup(const BlowupSpec& spec);

// Minimal integral multiple of a rational weight vector (lcm of denominators
// divided by the gcd of the scaled entries).  Throws on overflow.
std::vector<long long> integerize_weights(const WeightVector& x);

struct BlowupCheckReport {
    int s = 0;
    int q = 0;
    Int blowup_clique_count;  // k_s of the blowup
    Rat base_mass;            // h_s(base, x)
    bool count_identity = false;
    long long cliques_checked = 0;
    bool sigma_preserved = false;
    CertifiedValue f_blowup;
    CertifiedValue f_base;
    bool f_consistent = false;
    bool ok = false;
};

// Counting identity k_s(G_x) = h_s(G, x), sigma preservation through the
// provenance map, and agreement of the weighted masses.
BlowupCheckReport check_blowup_equivalence(const Graph& base, int s, int q,
                                           const std::vector<long long>& multiplicities,
                                           unsigned precision_bits = 256);

}  // namespace maclaurin
