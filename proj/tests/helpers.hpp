#pragma once

// Independent reference implementations used only by the tests. These avoid
// the library's algorithms on purpose: exhaustive enumeration and direct
// definitions, so agreement is meaningful.

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "linefeas/degree_sequence.hpp"
#include "linefeas/graph.hpp"
#include "linefeas/numbers.hpp"

namespace testref {

using linefeas::Graph;
using linefeas::i64;

// every positive degree multiset (sorted descending) realized by some graph
// on exactly k labeled vertices
inline std::set<std::vector<int>> all_positive_degree_multisets(int k) {
    std::set<std::vector<int>> out;
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) pairs.push_back({u, v});
    const int bits = static_cast<int>(pairs.size());
    for (unsigned long long mask = 0; mask < (1ull << bits); ++mask) {
        std::vector<int> deg(k, 0);
        for (int b = 0; b < bits; ++b)
            if (mask >> b & 1ull) {
                ++deg[pairs[b].first];
                ++deg[pairs[b].second];
            }
        if (std::find(deg.begin(), deg.end(), 0) != deg.end()) continue;
        std::sort(deg.begin(), deg.end(), std::greater<int>());
        out.insert(deg);
    }
    return out;
}

// pairs of distinct edges sharing an endpoint, counted straight off the
// definition of a line graph's edges
inline i64 shared_endpoint_pairs(const Graph& g) {
    std::vector<std::pair<int, int>> es(g.edges().begin(), g.edges().end());
    i64 count = 0;
    for (size_t i = 0; i < es.size(); ++i)
        for (size_t j = i + 1; j < es.size(); ++j) {
            auto [a, b] = es[i];
            auto [c, d] = es[j];
            if (a == c || a == d || b == c || b == d) ++count;
        }
    return count;
}

inline bool reference_has_claw(const Graph& g) {
    int n = g.vertex_count();
    for (int c = 0; c < n; ++c) {
        std::vector<int> nb;
        for (int v = 0; v < n; ++v)
            if (g.has_edge(c, v)) nb.push_back(v);
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j)
                for (size_t k = j + 1; k < nb.size(); ++k)
                    if (!g.has_edge(nb[i], nb[j]) && !g.has_edge(nb[i], nb[k]) &&
                        !g.has_edge(nb[j], nb[k]))
                        return true;
    }
    return false;
}

inline bool reference_has_paw(const Graph& g) {
    int n = g.vertex_count();
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            for (int z = y + 1; z < n; ++z) {
                if (!(g.has_edge(x, y) && g.has_edge(x, z) && g.has_edge(y, z))) continue;
                for (int w = 0; w < n; ++w) {
                    if (w == x || w == y || w == z) continue;
                    int touches = g.has_edge(w, x) + g.has_edge(w, y) + g.has_edge(w, z);
                    if (touches == 1) return true;
                }
            }
    return false;
}

inline bool is_acyclic(const Graph& g) {
    std::vector<int> parent(g.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (auto [u, v] : g.edges()) {
        int ru = find(u), rv = find(v);
        if (ru == rv) return false;
        parent[ru] = rv;
    }
    return true;
}

// split a positive non-increasing sequence into one caterpillar tree (all
// entries >= 2 on a path spine, plus pendant leaves) and a perfect matching
// on the leftover 1s; returns the forest or nullopt when the split fails
inline std::optional<Graph> greedy_forest_split(const std::vector<int>& desc) {
    int h = 0;
    while (h < static_cast<int>(desc.size()) && desc[h] >= 2) ++h;
    for (int i = h; i < static_cast<int>(desc.size()); ++i)
        if (desc[i] != 1) return std::nullopt;
    int z = static_cast<int>(desc.size()) - h;

    if (h == 0) {
        if (z % 2 != 0) return std::nullopt;
        return Graph::matching(z / 2);
    }
    i64 heavy = 0;
    for (int i = 0; i < h; ++i) heavy += desc[i];
    i64 leaves = heavy - 2 * h + 2;
    if (leaves > z || (z - leaves) % 2 != 0) return std::nullopt;

    Graph g(static_cast<int>(desc.size()));
    for (int i = 0; i + 1 < h; ++i) g.add_edge(i, i + 1);
    int next = h;
    for (int i = 0; i < h; ++i) {
        int spine = h == 1 ? 0 : (i == 0 || i == h - 1 ? 1 : 2);
        for (int extra = desc[i] - spine; extra > 0; --extra) g.add_edge(i, next++);
    }
    for (i64 pair = 0; pair < (z - leaves) / 2; ++pair) {
        g.add_edge(next, next + 1);
        next += 2;
    }
    return g;
}

// lexicographically least x <= y <= z with T(x)+T(y)+T(z) = p, by plain
// triple search
inline std::optional<std::array<i64, 3>> tri_least_reference(i64 p) {
    for (i64 x = 0; 3 * linefeas::triangular(x) <= p; ++x)
        for (i64 y = x; linefeas::triangular(x) + 2 * linefeas::triangular(y) <= p; ++y)
            for (i64 z = y;; ++z) {
                i64 s = linefeas::triangular(x) + linefeas::triangular(y) +
                        linefeas::triangular(z);
                if (s == p) return std::array<i64, 3>{x, y, z};
                if (s > p) break;
            }
    return std::nullopt;
}

// all partitions of s into non-increasing positive parts
inline std::vector<std::vector<int>> partitions_of(int s) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int cap) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(cap, remaining); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, s, s);
    return out;
}

}  // namespace testref
