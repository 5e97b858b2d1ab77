#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "linefeas/closed_form.hpp"
#include "linefeas/degree_sequence.hpp"
#include "linefeas/errors.hpp"
#include "linefeas/graph.hpp"
#include "linefeas/numbers.hpp"

// Explicit witness graphs: for every feasible pair (N, M), a graph G with
// e(G) = N whose line graph has exactly M edges. Each constructor certifies
// its output on the spot.

namespace linefeas {

enum class Recipe { LowDelta, HighDelta, QGraph, QStar, StarForest, DoubleStar, Uep, PawFree };

inline std::string_view recipe_name(Recipe r) {
    switch (r) {
        case Recipe::LowDelta: return "LOW_DELTA";
        case Recipe::HighDelta: return "HIGH_DELTA";
        case Recipe::QGraph: return "Q_GRAPH";
        case Recipe::QStar: return "Q_STAR";
        case Recipe::StarForest: return "STAR_FOREST";
        case Recipe::DoubleStar: return "DOUBLE_STAR";
        case Recipe::Uep: return "UEP";
        case Recipe::PawFree: return "PAW_FREE";
    }
    return "?";
}

struct Witness {
    Graph graph;
    i64 n_line = 0;  // e(graph) = vertices of the line graph
    i64 m_line = 0;  // e(L(graph))
    Recipe recipe = Recipe::LowDelta;

    std::string certificate_json() const {
        std::ostringstream out;
        out << "{\"recipe\":\"" << recipe_name(recipe) << "\",\"n_line\":" << n_line
            << ",\"m_line\":" << m_line << ",\"degrees\":[";
        auto seq = graph.degree_sequence();
        for (size_t i = 0; i < seq.size(); ++i) {
            if (i) out << ',';
            out << seq[i];
        }
        out << "]}";
        return out.str();
    }
};

namespace detail {

inline Witness certify(Graph g, Recipe r, std::optional<i64> expect_m,
                       bool allow_isolated = false) {
    Witness w;
    w.n_line = g.edge_count();
    w.m_line = line_graph_edge_count(g.degree_sequence());
    if (!allow_isolated) {
        for (int d : g.degrees())
            if (d == 0) throw InternalError("witness has an isolated vertex");
    }
    if (expect_m && *expect_m != w.m_line)
        throw InternalError("witness line-graph size mismatch");
    w.graph = std::move(g);
    w.recipe = r;
    return w;
}

}  // namespace detail

// indices with T(x)+T(y)+T(z) = p, x <= y <= z; every p >= 0 has one
// (Gauss: three triangular numbers suffice)
struct TriangularTriple {
    i64 x, y, z;
};

namespace detail {

constexpr i64 kTriTableCap = 1 << 20;

struct TriTables {
    std::vector<bool> is_tri;   // w <= cap with w triangular
    std::vector<bool> two_tri;  // w <= cap expressible as T(y)+T(z)
    TriTables() : is_tri(kTriTableCap + 1, false), two_tri(kTriTableCap + 1, false) {
        for (i64 a = 0; triangular(a) <= kTriTableCap; ++a) is_tri[triangular(a)] = true;
        for (i64 y = 0; 2 * triangular(y) <= kTriTableCap; ++y)
            for (i64 z = y; triangular(y) + triangular(z) <= kTriTableCap; ++z)
                two_tri[triangular(y) + triangular(z)] = true;
    }
};

inline const TriTables& tri_tables() {
    static const TriTables tables;
    return tables;
}

}  // namespace detail

// lexicographically least triple: smallest x, then smallest y
inline TriangularTriple triangular_decompose(i64 p) {
    if (p < 0) throw DomainError("triangular_decompose needs p >= 0");
    bool tabled = p <= detail::kTriTableCap;
    const detail::TriTables* tab = tabled ? &detail::tri_tables() : nullptr;
    auto is_tri = [&](i64 w) {
        return tabled ? tab->is_tri[w] : triangular_index(w).has_value();
    };
    for (i64 x = 0; 3 * triangular(x) <= p; ++x) {
        i64 rem = p - triangular(x);
        if (tabled && !tab->two_tri[rem]) continue;
        for (i64 y = x; 2 * triangular(y) <= rem; ++y) {
            i64 rem2 = rem - triangular(y);
            if (is_tri(rem2)) return {x, y, *triangular_index(rem2)};
        }
    }
    throw InternalError("triangular decomposition not found");
}

// K_{1,delta} plus a path with k edges plus (N-delta-k) disjoint edges
inline Witness witness_low(i64 n, i64 delta, i64 k) {
    if (delta < 1 || 2 * delta > n) throw DomainError("witness_low needs 1 <= delta <= N/2");
    if (k < 0 || k > delta || k > n - delta)
        throw DomainError("witness_low needs 0 <= k <= min(delta, N-delta)");
    Graph g = Graph::star(static_cast<int>(delta));
    if (k >= 1) g = g.disjoint_union(Graph::path(static_cast<int>(k)));
    g = g.disjoint_union(Graph::matching(static_cast<int>(n - delta - k)));
    return detail::certify(std::move(g), Recipe::LowDelta,
                           binom2(delta) + std::max<i64>(k - 1, 0));
}

// Center u of degree N-t with special neighbour v; v picks up k more edges,
// j of them to other neighbours of u (making those degree 2) and k-j to
// fresh leaves; t-k disjoint edges fill the edge budget. k = j = t gives the
// extremal graph for maximum degree N-t.
inline Witness witness_high(i64 n, i64 t, i64 k, i64 j) {
    if (t < 0 || 2 * t >= n) throw DomainError("witness_high needs 0 <= t < N/2");
    if (k < 0 || k > t || j < 0 || j > k)
        throw DomainError("witness_high needs 0 <= j <= k <= t");
    i64 hub = n - t;  // degree of u
    int fresh = static_cast<int>(k - j);
    Graph g(static_cast<int>(1 + hub + fresh + 2 * (t - k)));
    // u = 0, v = 1, remaining neighbours of u are 2..hub
    for (int w = 1; w <= hub; ++w) g.add_edge(0, w);
    for (int w = 2; w <= 1 + j; ++w) g.add_edge(1, w);
    for (int w = 0; w < fresh; ++w) g.add_edge(1, static_cast<int>(hub + 1 + w));
    int base = static_cast<int>(hub + 1 + fresh);
    for (int i = 0; i < t - k; ++i) g.add_edge(base + 2 * i, base + 2 * i + 1);
    Recipe r = (t >= 1 && k == t && j == t) ? Recipe::QGraph : Recipe::HighDelta;
    return detail::certify(std::move(g), r, binom2(n - t) + binom2(k + 1) + j);
}

// star K_{1,N-3} with a triangle on three of its leaves
inline Witness q_star_graph(i64 n) {
    if (n < 7) throw DomainError("q_star_graph needs N >= 7");
    Graph g = Graph::star(static_cast<int>(n - 3));
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    g.add_edge(2, 3);
    return detail::certify(std::move(g), Recipe::QStar, binom2(n - 3) + 9);
}

// forest of stars K_{1,N-t} | K_{1,x} | K_{1,y} | K_{1,z} | q K_2 hitting
// M = C(N-t,2) + C(x,2) + C(y,2) + C(z,2); smallest workable t wins
inline Witness star_forest_witness(i64 n, i64 m) {
    if (n < 1) throw DomainError("star_forest_witness needs N >= 1");
    for (i64 t = 0; t <= n; ++t) {
        i64 p = m - binom2(n - t);
        if (p < 0) continue;
        for (i64 x = 0; 3 * binom2(x) <= p && x <= t; ++x) {
            i64 rem = p - binom2(x);
            for (i64 y = x; 2 * binom2(y) <= rem && x + 2 * y <= t; ++y) {
                i64 rem2 = rem - binom2(y);
                i64 z = binom2_floor_index(rem2);
                if (binom2(z) != rem2 || z < y || x + y + z > t) continue;
                Graph g = Graph::star(static_cast<int>(n - t));
                if (n - t == 0) g = Graph(0);
                for (i64 s : {x, y, z})
                    if (s >= 1) g = g.disjoint_union(Graph::star(static_cast<int>(s)));
                g = g.disjoint_union(Graph::matching(static_cast<int>(t - x - y - z)));
                return detail::certify(std::move(g), Recipe::StarForest, m);
            }
        }
    }
    throw UnrepresentableError("no star-forest decomposition for this pair");
}

// adjacent centers with N-t-1 and t pendant leaves
inline Witness double_star(i64 n, i64 t) {
    if (t < 1 || t > n - 2) throw DomainError("double_star needs 1 <= t <= N-2");
    Graph g(static_cast<int>(n + 1));
    g.add_edge(0, 1);
    for (i64 w = 0; w < n - t - 1; ++w) g.add_edge(0, static_cast<int>(2 + w));
    for (i64 w = 0; w < t; ++w) g.add_edge(1, static_cast<int>(n - t + 1 + w));
    return detail::certify(std::move(g), Recipe::DoubleStar,
                           binom2(n - t) + binom2(t + 1));
}

// dispatcher covering every feasible pair
inline Witness witness(i64 n, i64 m) {
    if (n < 1) throw DomainError("witness needs N >= 1");
    if (!is_feasible_closed(n, m)) {
        std::ostringstream msg;
        msg << "(" << n << "," << m << ") is not feasible";
        if (auto iv = nonfeasible_intervals(n).interval_containing(m))
            msg << "; it lies in the non-feasible interval [" << iv->first << ","
                << iv->second << "]";
        if (auto mn = min_nonfeasible(n)) msg << "; minimum non-feasible M is " << *mn;
        throw NotFeasibleError(msg.str());
    }
    if (m < binom2(n / 2 + 1)) {
        i64 delta = std::max<i64>(1, binom2_floor_index(m));
        i64 k = m == binom2(delta) ? 0 : m - binom2(delta) + 1;
        return witness_low(n, delta, k);
    }
    i64 delta = binom2_floor_index(m);
    i64 t = n - delta;
    i64 rem = m - binom2(delta);
    i64 k = binom2_floor_index(rem) - 1;  // largest k with C(k+1,2) <= rem
    if (k < 0) k = 0;
    i64 j = rem - binom2(k + 1);
    return witness_high(n, t, k, j);
}

// the graph with m edges reached by stripping K_n one vertex star at a time:
// (K_p minus a q-edge star) plus n-p isolated vertices; higher-indexed
// neighbours are removed first so snapshots are nested
inline Witness uep_graph(i64 n, i64 m) {
    if (n < 0) throw DomainError("uep_graph needs n >= 0");
    if (m < 0 || m > binom2(n)) throw DomainError("uep_graph needs 0 <= m <= C(n,2)");
    Graph g = Graph::complete(static_cast<int>(n));
    i64 to_delete = binom2(n) - m;
    for (int i = 0; i < n && to_delete > 0; ++i)
        for (int jj = static_cast<int>(n) - 1; jj > i && to_delete > 0; --jj) {
            g.remove_edge(i, jj);
            --to_delete;
        }
    return detail::certify(std::move(g), Recipe::Uep, std::nullopt, true);
}

// K_c minus a vertex-disjoint packing of floor(D/3) triangles and D mod 3
// single edges, D = C(c,2) - m, padded with isolated vertices; the deleted
// components have no induced 2-edge path, which is what a paw would need
inline Witness paw_free_witness(i64 n, i64 m) {
    if (n < 1) throw DomainError("paw_free_witness needs n >= 1");
    if (m < 0 || m > binom2(n)) throw DomainError("paw_free_witness needs 0 <= m <= C(n,2)");
    i64 core = n;
    while (core >= 2 && m <= binom2(core - 1)) --core;
    i64 to_delete = binom2(core) - m;
    if (core >= 2 && to_delete > core - 2) throw InternalError("paw-free deletion too large");
    Graph g = Graph::complete(static_cast<int>(core));
    i64 triangles = to_delete / 3;
    i64 singles = to_delete % 3;
    int v = 0;
    for (i64 i = 0; i < triangles; ++i, v += 3) {
        g.remove_edge(v, v + 1);
        g.remove_edge(v, v + 2);
        g.remove_edge(v + 1, v + 2);
    }
    for (i64 i = 0; i < singles; ++i, v += 2) g.remove_edge(v, v + 1);
    for (i64 i = core; i < n; ++i) g = g.disjoint_union(Graph(1));
    return detail::certify(std::move(g), Recipe::PawFree, std::nullopt, true);
}

}  // namespace linefeas
