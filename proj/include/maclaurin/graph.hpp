#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "maclaurin/bitset.hpp"

namespace maclaurin {

// Undirected simple graph on vertices 0..n-1 with dense bitset adjacency.
// Adjacency stays symmetric and irreflexive by construction.
class Graph {
public:
    static constexpr int kMaxVertices = 1024;

    Graph() = default;
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    long long edge_count() const;

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    const Bitset& neighbors(int v) const;
    int degree(int v) const { return neighbors(v).count(); }

    Bitset vertex_set() const { return Bitset::full(n_); }

    void set_labels(std::vector<std::string> labels);
    const std::vector<std::string>& labels() const { return labels_; }
    std::string label(int v) const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int n_ = 0;
    std::vector<Bitset> adj_;
    std::vector<std::string> labels_;
};

// graph6 text form: short form for n <= 62 and the 126-prefixed long form
// beyond that.  Parse errors carry the byte offset.
Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

// Edge list: one "u v" pair per line, 0-based; optional "n=<count>" header
// line; '#' starts a comment.  Duplicate edges are dropped with a warning.
Graph parse_edge_list(std::string_view text, std::vector<std::string>* warnings = nullptr);

}  // namespace maclaurin
