#include "maclaurin/graph.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace maclaurin {

namespace {

[[noreturn]] void parse_fail(std::string_view what, size_t offset) {
    std::ostringstream msg;
    msg << "graph6 parse error at byte " << offset << ": " << what;
    throw std::invalid_argument(msg.str());
}

constexpr int kG6Lo = 63;   // '?'
constexpr int kG6Hi = 126;  // '~'

}  // namespace

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("Graph: vertex count out of range");
    adj_.assign(static_cast<size_t>(n), Bitset(n));
}

long long Graph::edge_count() const {
    long long deg_sum = 0;
    for (const auto& row : adj_) deg_sum += row.count();
    return deg_sum / 2;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::out_of_range("Graph::add_edge: vertex out of range");
    if (u == v) throw std::invalid_argument("Graph::add_edge: self-loop");
    adj_[static_cast<size_t>(u)].set(v);
    adj_[static_cast<size_t>(v)].set(u);
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
    return u != v && adj_[static_cast<size_t>(u)].test(v);
}

const Bitset& Graph::neighbors(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("Graph::neighbors: vertex out of range");
    return adj_[static_cast<size_t>(v)];
}

void Graph::set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != static_cast<size_t>(n_))
        throw std::invalid_argument("Graph::set_labels: label count mismatch");
    labels_ = std::move(labels);
}

std::string Graph::label(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("Graph::label: vertex out of range");
    if (labels_.empty()) return std::to_string(v);
    return labels_[static_cast<size_t>(v)];
}

Graph parse_graph6(std::string_view text) {
    // Strip one trailing newline, tolerate the explicit format header.
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    size_t base = 0;
    constexpr std::string_view kHeader = ">>graph6<<";
    if (text.substr(0, kHeader.size()) == kHeader) {
        text.remove_prefix(kHeader.size());
        base = kHeader.size();
    }
    if (text.empty()) parse_fail("empty input", base);

    size_t pos = 0;
    auto need = [&](size_t count) {
        if (pos + count > text.size())
            parse_fail("unexpected end of input", base + text.size());
    };
    auto sextet = [&]() -> int {
        unsigned char c = static_cast<unsigned char>(text[pos]);
        if (c < kG6Lo || c > kG6Hi)
            parse_fail("byte outside graph6 range 63..126", base + pos);
        ++pos;
        return c - kG6Lo;
    };

    long long n = 0;
    unsigned char first = static_cast<unsigned char>(text[0]);
    if (first == kG6Hi) {
        need(2);
        if (static_cast<unsigned char>(text[1]) == kG6Hi) {
            // 126 126: 36-bit count, always beyond the supported maximum.
            parse_fail("vertex count exceeds supported maximum", base);
        }
        ++pos;  // skip the 126 prefix
        need(3);
        for (int i = 0; i < 3; ++i) n = (n << 6) | sextet();
    } else {
        n = sextet();
    }
    if (n > Graph::kMaxVertices)
        parse_fail("vertex count exceeds supported maximum", base);

    Graph g(static_cast<int>(n));
    long long nbits = n * (n - 1) / 2;
    long long bits_read = 0;
    int buffer = 0, buffered = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            if (buffered == 0) {
                need(1);
                buffer = sextet();
                buffered = 6;
            }
            --buffered;
            if ((buffer >> buffered) & 1) g.add_edge(row, col);
            ++bits_read;
        }
    }
    // Padding bits of the final sextet must be zero.
    if (buffered > 0 && (buffer & ((1 << buffered) - 1)) != 0)
        parse_fail("nonzero padding bits", base + pos - 1);
    (void)bits_read;
    (void)nbits;
    if (pos != text.size()) parse_fail("trailing bytes after edge data", base + pos);
    return g;
}

std::string encode_graph6(const Graph& g) {
    std::string out;
    long long n = g.vertex_count();
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kG6Lo));
    } else {
        out.push_back(static_cast<char>(kG6Hi));
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kG6Lo));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kG6Lo));
        out.push_back(static_cast<char>((n & 0x3f) + kG6Lo));
    }
    int buffer = 0, buffered = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            buffer = (buffer << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++buffered == 6) {
                out.push_back(static_cast<char>(buffer + kG6Lo));
                buffer = 0;
                buffered = 0;
            }
        }
    }
    if (buffered > 0)
        out.push_back(static_cast<char>((buffer << (6 - buffered)) + kG6Lo));
    return out;
}

Graph parse_edge_list(std::string_view text, std::vector<std::string>* warnings) {
    struct Pair {
        int u, v;
    };
    std::vector<Pair> edges;
    int declared_n = -1;
    int max_index = -1;

    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        std::vector<std::string> toks;
        while (ls >> tok) toks.push_back(tok);
        if (toks.empty()) continue;
        if (toks.size() == 1 && toks[0].rfind("n=", 0) == 0) {
            int value = 0;
            const char* b = toks[0].data() + 2;
            const char* e = toks[0].data() + toks[0].size();
            auto res = std::from_chars(b, e, value);
            if (res.ec != std::errc{} || res.ptr != e || value < 0)
                throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                            ": bad vertex count header");
            declared_n = value;
            continue;
        }
        if (toks.size() != 2)
            throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                        ": expected 'u v'");
        int uv[2];
        for (int i = 0; i < 2; ++i) {
            const char* b = toks[static_cast<size_t>(i)].data();
            const char* e = b + toks[static_cast<size_t>(i)].size();
            auto res = std::from_chars(b, e, uv[i]);
            if (res.ec != std::errc{} || res.ptr != e)
                throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                            ": non-integer vertex '" + toks[static_cast<size_t>(i)] + "'");
            if (uv[i] < 0)
                throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                            ": negative vertex index");
        }
        if (uv[0] == uv[1])
            throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                        ": self-loop at vertex " + std::to_string(uv[0]));
        edges.push_back({uv[0], uv[1]});
        max_index = std::max(max_index, std::max(uv[0], uv[1]));
    }

    int n = declared_n >= 0 ? declared_n : max_index + 1;
    if (max_index >= n)
        throw std::invalid_argument("edge list: vertex " + std::to_string(max_index) +
                                    " exceeds declared count n=" + std::to_string(n));
    Graph g(n);
    for (const auto& e : edges) {
        if (g.has_edge(e.u, e.v)) {
            if (warnings)
                warnings->push_back("duplicate edge " + std::to_string(e.u) + " " +
                                    std::to_string(e.v) + " ignored");
            continue;
        }
        g.add_edge(e.u, e.v);
    }
    return g;
}

}  // namespace maclaurin
