#include "maclaurin/cliques.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace maclaurin {

namespace {

// Candidates above vertex v, for ordered extension.
Bitset above(int v, int n) {
    Bitset b(n);
    for (int i = v + 1; i < n; ++i) b.set(i);
    return b;
}

struct MaxCliqueSearch {
    const Graph& g;
    int best = 0;

    void expand(int rsize, const Bitset& pool) {
        if (rsize + pool.count() <= best) return;
        if (pool.empty()) {
            best = std::max(best, rsize);
            return;
        }
        // Pivot on the pool vertex with most pool neighbours.
        int pivot = -1, pivot_deg = -1;
        pool.for_each([&](int u) {
            int d = (pool & g.neighbors(u)).count();
            if (d > pivot_deg) {
                pivot_deg = d;
                pivot = u;
            }
        });
        Bitset pending = pool;
        Bitset branch = pool - g.neighbors(pivot);
        branch.for_each([&](int v) {
            expand(rsize + 1, pending & g.neighbors(v));
            pending.reset(v);
        });
    }
};

}  // namespace

bool is_clique(const Graph& g, const Bitset& verts) {
    bool ok = true;
    verts.for_each([&](int v) {
        if (v >= g.vertex_count()) {
            ok = false;
            return;
        }
        Bitset others = verts;
        others.reset(v);
        if (!others.is_subset_of(g.neighbors(v))) ok = false;
    });
    return ok;
}

void for_each_clique(const Graph& g, int k, const std::function<void(const Clique&)>& fn) {
    if (k < 1) throw std::invalid_argument("for_each_clique: k must be >= 1");
    int n = g.vertex_count();
    Bitset current(n);
    // cand holds common neighbours above the last chosen vertex.
    auto rec = [&](auto&& self, int size, const Bitset& cand) -> void {
        if (size == k) {
            fn(current);
            return;
        }
        if (size + cand.count() < k) return;
        Bitset pending = cand;
        cand.for_each([&](int v) {
            current.set(v);
            self(self, size + 1, pending & g.neighbors(v) & above(v, n));
            current.reset(v);
        });
    };
    rec(rec, 0, Bitset::full(n));
}

std::vector<Clique> enumerate_cliques(const Graph& g, int k) {
    std::vector<Clique> out;
    for_each_clique(g, k, [&](const Clique& c) { out.push_back(c); });
    return out;
}

long long clique_count(const Graph& g, int k) {
    long long count = 0;
    for_each_clique(g, k, [&](const Clique&) { ++count; });
    return count;
}

int clique_number(const Graph& g) {
    return clique_number_within(g, g.vertex_set());
}

int clique_number_within(const Graph& g, const Bitset& allowed) {
    MaxCliqueSearch search{g};
    search.expand(0, allowed);
    return search.best;
}

std::vector<Clique> maximal_cliques(const Graph& g) {
    std::vector<Clique> out;
    int n = g.vertex_count();
    Bitset current(n);
    auto bk = [&](auto&& self, Bitset pool, Bitset excluded) -> void {
        if (pool.empty() && excluded.empty()) {
            out.push_back(current);
            return;
        }
        int pivot = -1, pivot_deg = -1;
        auto consider = [&](int u) {
            int d = (pool & g.neighbors(u)).count();
            if (d > pivot_deg) {
                pivot_deg = d;
                pivot = u;
            }
        };
        pool.for_each(consider);
        excluded.for_each(consider);
        Bitset branch = pool - g.neighbors(pivot);
        branch.for_each([&](int v) {
            current.set(v);
            self(self, pool & g.neighbors(v), excluded & g.neighbors(v));
            current.reset(v);
            pool.reset(v);
            excluded.set(v);
        });
    };
    bk(bk, g.vertex_set(), Bitset(n));
    std::sort(out.begin(), out.end(), Bitset::lex_less);
    return out;
}

int extension_number(const Graph& g, const Clique& clique) {
    if (clique.empty())
        throw std::invalid_argument("extension_number: empty vertex set");
    if (!is_clique(g, clique))
        throw std::invalid_argument("extension_number: input is not a clique");
    Bitset common = g.vertex_set();
    clique.for_each([&](int v) { common &= g.neighbors(v); });
    return clique.count() + clique_number_within(g, common);
}

std::map<int, long long> ExtensionMap::histogram() const {
    std::map<int, long long> hist;
    for (const auto& [clique, value] : entries) {
        (void)clique;
        ++hist[value];
    }
    return hist;
}

int ExtensionMap::at(const Clique& clique) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), clique,
                               [](const auto& entry, const Clique& key) {
                                   return Bitset::lex_less(entry.first, key);
                               });
    if (it == entries.end() || !(it->first == clique))
        throw std::invalid_argument("ExtensionMap::at: clique not present");
    return it->second;
}

ExtensionMap extension_map(const Graph& g, int q) {
    if (q < 1) throw std::invalid_argument("extension_map: q must be >= 1");
    ExtensionMap map;
    map.q = q;
    int n = g.vertex_count();
    // Memoise omega of common-neighbourhood pools; distinct q-cliques often
    // share them.
    std::unordered_map<Bitset, int, BitsetHash> omega_cache;
    Bitset current(n);
    auto rec = [&](auto&& self, int size, const Bitset& cand, const Bitset& common) -> void {
        if (size == q) {
            auto [it, fresh] = omega_cache.try_emplace(common, 0);
            if (fresh) it->second = clique_number_within(g, common);
            map.entries.emplace_back(current, q + it->second);
            return;
        }
        if (size + cand.count() < q) return;
        Bitset pending = cand;
        cand.for_each([&](int v) {
            current.set(v);
            self(self, size + 1, pending & g.neighbors(v) & above(v, n),
                 common & g.neighbors(v));
            current.reset(v);
        });
    };
    rec(rec, 0, Bitset::full(n), Bitset::full(n));
    return map;
}

Bitset clique_support(const Graph& g, int s) {
    if (s < 1) throw std::invalid_argument("clique_support: s must be >= 1");
    Bitset support(g.vertex_count());
    for_each_clique(g, s, [&](const Clique& c) { support |= c; });
    return support;
}

Bitset MultipartitePartition::covered() const {
    if (parts.empty()) return Bitset(0);
    Bitset all = parts.front();
    for (size_t i = 1; i < parts.size(); ++i) all |= parts[i];
    return all;
}

std::optional<MultipartitePartition> complete_multipartite_decomposition(const Graph& g) {
    int n = g.vertex_count();
    // Components of the complement, grown by BFS.
    std::vector<Bitset> parts;
    Bitset unseen = g.vertex_set();
    while (unseen.any()) {
        int start = unseen.lowest();
        Bitset comp(n);
        std::vector<int> queue{start};
        comp.set(start);
        unseen.reset(start);
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            Bitset nonneighbors = unseen - g.neighbors(v);
            nonneighbors.for_each([&](int u) {
                comp.set(u);
                unseen.reset(u);
                queue.push_back(u);
            });
        }
        parts.push_back(comp);
    }
    // G is complete multipartite iff every complement component is
    // independent in G (cross-part adjacency is automatic).
    for (const auto& part : parts) {
        bool independent = true;
        part.for_each([&](int v) {
            if (g.neighbors(v).intersects(part)) independent = false;
        });
        if (!independent) return std::nullopt;
    }
    std::sort(parts.begin(), parts.end(),
              [](const Bitset& a, const Bitset& b) { return a.lowest() < b.lowest(); });
    return MultipartitePartition{std::move(parts)};
}

Graph induced_subgraph(const Graph& g, const Bitset& verts, std::vector<int>* old_index) {
    std::vector<int> keep = verts.to_vector();
    std::vector<int> new_index(static_cast<size_t>(g.vertex_count()), -1);
    for (size_t i = 0; i < keep.size(); ++i) new_index[static_cast<size_t>(keep[i])] = static_cast<int>(i);
    Graph sub(static_cast<int>(keep.size()));
    for (size_t i = 0; i < keep.size(); ++i) {
        Bitset nbrs = g.neighbors(keep[i]) & verts;
        nbrs.for_each([&](int u) {
            int j = new_index[static_cast<size_t>(u)];
            if (j > static_cast<int>(i)) sub.add_edge(static_cast<int>(i), j);
        });
    }
    if (old_index) *old_index = std::move(keep);
    return sub;
}

}  // namespace maclaurin
