#include "maclaurin/structure.hpp"

#include <stdexcept>

#include "maclaurin/weights.hpp"

namespace maclaurin {

const char* to_string(EqualityPrediction p) {
    switch (p) {
        case EqualityPrediction::Tight: return "tight";
        case EqualityPrediction::Strict: return "strict";
        case EqualityPrediction::Undecided: return "undecided";
    }
    return "unknown";
}

EqualityDiagnosis diagnose_equality(const Graph& g, int s, int q, const WeightVector& x) {
    if (s < 1 || s >= q)
        throw std::domain_error("diagnose_equality: requires 1 <= s < q (q = s is always equality)");
    x.validate(g.vertex_count());
    int omega = clique_number(g);
    if (q > omega) throw std::domain_error("diagnose_equality: q exceeds the clique number");

    EqualityDiagnosis diag;
    diag.clique_number = omega;
    diag.support = clique_support(g, s);

    diag.applicable = true;
    diag.support.for_each([&](int v) {
        if (x[v] == 0) diag.applicable = false;
    });

    std::vector<int> old_ids;
    Graph induced = induced_subgraph(g, diag.support, &old_ids);
    if (auto parts = complete_multipartite_decomposition(induced)) {
        diag.complete_multipartite = true;
        MultipartitePartition mapped;
        for (const auto& part : parts->parts) {
            Bitset orig(g.vertex_count());
            part.for_each([&](int v) { orig.set(old_ids[static_cast<size_t>(v)]); });
            mapped.parts.push_back(orig);
        }
        diag.part_count = static_cast<int>(mapped.parts.size());
        for (const auto& part : mapped.parts) {
            Rat mass(0);
            part.for_each([&](int v) { mass += x[v]; });
            diag.part_mass.push_back(mass);
        }
        diag.balanced = true;
        for (const Rat& z : diag.part_mass)
            if (z != diag.part_mass.front()) diag.balanced = false;
        diag.parts = std::move(mapped);
    }

    if (!diag.applicable) {
        diag.predicted = EqualityPrediction::Undecided;
    } else if (diag.complete_multipartite && diag.balanced && diag.part_count == omega) {
        diag.predicted = EqualityPrediction::Tight;
    } else {
        diag.predicted = EqualityPrediction::Strict;
    }
    return diag;
}

std::vector<Clique> canonical_cliques(const Graph& g, const MultipartitePartition& parts, int k) {
    std::vector<Clique> out;
    for_each_clique(g, k, [&](const Clique& c) {
        for (const auto& part : parts.parts)
            if ((c & part).count() > 1) return;
        out.push_back(c);
    });
    return out;
}

namespace {

// Elementary symmetric polynomial e_s(z) for s = 0..z.size().
std::vector<Rat> elementary_symmetric(const std::vector<Rat>& z) {
    std::vector<Rat> e(z.size() + 1, Rat(0));
    e[0] = 1;
    for (const Rat& zi : z)
        for (size_t s = e.size() - 1; s >= 1; --s) e[s] += e[s - 1] * zi;
    return e;
}

}  // namespace

ReducedGraph reduce_multipartite(const Graph& g, const MultipartitePartition& parts,
                                 const WeightVector& x) {
    x.validate(g.vertex_count());
    // The parts must be a complete multipartite decomposition covering G.
    Bitset covered = parts.covered();
    if (!(covered == g.vertex_set()))
        throw std::invalid_argument("reduce_multipartite: parts do not cover the graph");
    for (size_t i = 0; i < parts.parts.size(); ++i) {
        const Bitset& part = parts.parts[i];
        part.for_each([&](int v) {
            if (g.neighbors(v).intersects(part))
                throw std::invalid_argument("reduce_multipartite: part is not independent");
        });
        for (size_t j = i + 1; j < parts.parts.size(); ++j) {
            const Bitset& other = parts.parts[j];
            part.for_each([&](int v) {
                if (!other.is_subset_of(g.neighbors(v)))
                    throw std::invalid_argument("reduce_multipartite: missing cross-part edge");
            });
        }
    }

    ReducedGraph reduced;
    reduced.part_count = static_cast<int>(parts.parts.size());
    for (const auto& part : parts.parts) {
        Rat mass(0);
        part.for_each([&](int v) { mass += x[v]; });
        reduced.mass.push_back(mass);
    }

    // Clique-mass identity against the reduced clique: cliques pick at most
    // one vertex per part, so h_{s,G}(x) is the elementary symmetric e_s(z).
    std::vector<Rat> e = elementary_symmetric(reduced.mass);
    for (int s = 1; s <= reduced.part_count; ++s) {
        if (clique_mass(g, s, x) != e[static_cast<size_t>(s)])
            throw std::logic_error("reduce_multipartite: clique-mass identity failed");
    }
    return reduced;
}

}  // namespace maclaurin
