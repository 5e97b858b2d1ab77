#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "linefeas/errors.hpp"
#include "linefeas/numbers.hpp"

namespace linefeas {

class DegreeSequence;

// Simple undirected graph on vertices 0..n-1. Edges are stored canonically
// (u < v) in a sorted set, so iteration order and serialization are
// deterministic.
class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count) : n_(vertex_count) {
        if (vertex_count < 0) throw DomainError("negative vertex count");
    }

    int vertex_count() const { return n_; }
    i64 edge_count() const { return static_cast<i64>(edges_.size()); }
    const std::set<std::pair<int, int>>& edges() const { return edges_; }

    bool has_edge(int u, int v) const {
        if (u == v) return false;
        if (u > v) std::swap(u, v);
        return edges_.count({u, v}) > 0;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw DomainError("self loop");
        if (u > v) std::swap(u, v);
        edges_.insert({u, v});
    }

    void remove_edge(int u, int v) {
        if (u > v) std::swap(u, v);
        edges_.erase({u, v});
    }

    std::vector<int> degrees() const {
        std::vector<int> d(n_, 0);
        for (auto [u, v] : edges_) {
            ++d[u];
            ++d[v];
        }
        return d;
    }

    // defined in degree_sequence.hpp
    DegreeSequence degree_sequence() const;

    // appends other's vertices after this graph's, keeping both edge sets
    Graph disjoint_union(const Graph& other) const {
        Graph g(n_ + other.n_);
        g.edges_ = edges_;
        for (auto [u, v] : other.edges_) g.edges_.insert({u + n_, v + n_});
        return g;
    }

    static Graph complete(int n) {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) g.edges_.insert({u, v});
        return g;
    }

    // K_{1,leaves}: center 0, leaves 1..leaves
    static Graph star(int leaves) {
        if (leaves < 0) throw DomainError("negative star size");
        if (leaves == 0) return Graph(1);
        Graph g(leaves + 1);
        for (int v = 1; v <= leaves; ++v) g.edges_.insert({0, v});
        return g;
    }

    // path with k edges on k+1 vertices; k = 0 gives a single vertex
    static Graph path(int k) {
        if (k < 0) throw DomainError("negative path length");
        Graph g(k + 1);
        for (int v = 0; v < k; ++v) g.edges_.insert({v, v + 1});
        return g;
    }

    static Graph matching(int pairs) {
        if (pairs < 0) throw DomainError("negative matching size");
        Graph g(2 * pairs);
        for (int i = 0; i < pairs; ++i) g.edges_.insert({2 * i, 2 * i + 1});
        return g;
    }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw OutOfRangeError("vertex out of range");
    }

    int n_ = 0;
    std::set<std::pair<int, int>> edges_;
};

// L(G): one vertex per edge of g (in canonical edge order), adjacent iff the
// edges share an endpoint.
inline Graph line_graph(const Graph& g) {
    std::vector<std::pair<int, int>> es(g.edges().begin(), g.edges().end());
    int m = static_cast<int>(es.size());
    Graph lg(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto [a, b] = es[i];
            auto [c, d] = es[j];
            if (a == c || a == d || b == c || b == d) lg.add_edge(i, j);
        }
    return lg;
}

enum class Pattern { Claw, Paw };

namespace detail {

// 6-bit masks over the vertex pairs (01,02,03,12,13,23) of all labeled
// 4-vertex graphs isomorphic to the pattern
inline const std::array<bool, 64>& pattern_masks(Pattern p) {
    static const auto tables = [] {
        auto orbit = [](unsigned canonical) {
            std::array<bool, 64> in{};
            const int pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
            int perm[4] = {0, 1, 2, 3};
            std::array<int, 4 * 4> pair_index{};
            for (int b = 0; b < 6; ++b) {
                pair_index[pairs[b][0] * 4 + pairs[b][1]] = b;
                pair_index[pairs[b][1] * 4 + pairs[b][0]] = b;
            }
            do {
                unsigned mask = 0;
                for (int b = 0; b < 6; ++b)
                    if (canonical >> b & 1u)
                        mask |= 1u << pair_index[perm[pairs[b][0]] * 4 + perm[pairs[b][1]]];
                in[mask] = true;
            } while (std::next_permutation(perm, perm + 4));
            return in;
        };
        // claw: edges 01,02,03; paw: triangle 123 plus pendant edge 01
        return std::array<std::array<bool, 64>, 2>{orbit(0b000111u), orbit(0b111001u)};
    }();
    return tables[p == Pattern::Claw ? 0 : 1];
}

}  // namespace detail

// does g contain an induced copy of the 4-vertex pattern
inline bool has_induced(const Graph& g, Pattern p) {
    int n = g.vertex_count();
    if (n < 4) return false;
    std::vector<char> adj(static_cast<size_t>(n) * n, 0);
    for (auto [u, v] : g.edges()) {
        adj[static_cast<size_t>(u) * n + v] = 1;
        adj[static_cast<size_t>(v) * n + u] = 1;
    }
    const auto& match = detail::pattern_masks(p);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            unsigned ij = adj[static_cast<size_t>(i) * n + j];
            for (int k = j + 1; k < n; ++k) {
                unsigned ik = adj[static_cast<size_t>(i) * n + k];
                unsigned jk = adj[static_cast<size_t>(j) * n + k];
                for (int l = k + 1; l < n; ++l) {
                    unsigned mask = ij | ik << 1 |
                                    unsigned(adj[static_cast<size_t>(i) * n + l]) << 2 |
                                    jk << 3 |
                                    unsigned(adj[static_cast<size_t>(j) * n + l]) << 4 |
                                    unsigned(adj[static_cast<size_t>(k) * n + l]) << 5;
                    if (match[mask]) return true;
                }
            }
        }
    return false;
}

// "n m" header, then one "u v" line per edge in canonical order
inline std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

inline std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace linefeas
