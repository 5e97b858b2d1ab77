#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "linefeas/errors.hpp"
#include "linefeas/graph.hpp"
#include "linefeas/numbers.hpp"

namespace linefeas {

// Non-increasing positive degree multiset. Zeros are stripped on
// construction; isolated vertices never matter for realizability.
class DegreeSequence {
public:
    DegreeSequence() = default;

    explicit DegreeSequence(std::vector<int> degrees) : d_(std::move(degrees)) {
        for (int x : d_)
            if (x < 0) throw DomainError("negative degree");
        std::sort(d_.begin(), d_.end(), std::greater<int>());
        while (!d_.empty() && d_.back() == 0) d_.pop_back();
    }

    size_t size() const { return d_.size(); }
    bool empty() const { return d_.empty(); }
    int operator[](size_t i) const { return d_[i]; }
    const std::vector<int>& values() const { return d_; }

    i64 sum() const { return std::accumulate(d_.begin(), d_.end(), i64{0}); }
    int max_degree() const { return d_.empty() ? 0 : d_.front(); }

    bool operator==(const DegreeSequence& other) const { return d_ == other.d_; }

private:
    std::vector<int> d_;
};

inline DegreeSequence Graph::degree_sequence() const {
    return DegreeSequence(degrees());
}

// e(L(G)) for any G realizing seq: each vertex of degree d contributes the
// C(d,2) pairs of edges meeting there, and no pair is counted twice
inline i64 line_graph_edge_count(const DegreeSequence& seq) {
    i64 total = 0;
    for (int d : seq.values()) total += binom2(d);
    return total;
}

namespace detail {

// Erdos-Gallai on a non-increasing positive vector. Two-pointer form: the
// split between entries above and at-most k moves monotonically as k grows.
inline bool erdos_gallai_desc(const std::vector<int>& d) {
    const int n = static_cast<int>(d.size());
    if (n == 0) return true;
    i64 sum = 0;
    for (int x : d) sum += x;
    if (sum % 2 != 0) return false;
    if (d.front() > n - 1) return false;

    std::vector<i64> suffix(n + 1, 0);
    for (int i = n - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + d[i];

    i64 prefix = 0;
    int fi = n;  // first index with d[fi] <= k, scanning k upward
    for (int k = 1; k <= n; ++k) {
        prefix += d[k - 1];
        while (fi > 0 && d[fi - 1] <= k) --fi;
        int pos = std::max(fi, k);
        i64 rhs = i64(k) * (k - 1) + i64(k) * (pos - k) + suffix[pos];
        if (prefix > rhs) return false;
    }
    return true;
}

}  // namespace detail

inline bool is_graphical(const DegreeSequence& seq) {
    return detail::erdos_gallai_desc(seq.values());
}

// Havel-Hakimi. Deterministic: always exhausts the vertex with the largest
// remaining degree (ties by index) against the next-largest ones.
inline Graph realize_sequence(const DegreeSequence& seq) {
    if (!is_graphical(seq)) throw NonGraphicalError("sequence is not graphical");
    int n = static_cast<int>(seq.size());
    Graph g(n);
    std::vector<std::pair<int, int>> rem(n);  // (remaining degree, vertex)
    for (int v = 0; v < n; ++v) rem[v] = {seq[v], v};
    for (int round = 0; round < n; ++round) {
        std::sort(rem.begin(), rem.end(), [](auto a, auto b) {
            return a.first != b.first ? a.first > b.first : a.second < b.second;
        });
        auto [need, v] = rem[0];
        if (need == 0) break;
        if (need > static_cast<int>(rem.size()) - 1)
            throw InternalError("havel-hakimi underflow");
        rem[0].first = 0;
        for (int i = 1; i <= need; ++i) {
            if (rem[i].first <= 0) throw InternalError("havel-hakimi target exhausted");
            g.add_edge(v, rem[i].second);
            --rem[i].first;
        }
    }
    return g;
}

// k >= 2 positive entries summing to exactly 2(k-1)
inline bool is_tree_sequence(const DegreeSequence& seq) {
    i64 k = static_cast<i64>(seq.size());
    return k >= 2 && seq.sum() == 2 * (k - 1);
}

// even sum at most 2(k-1); equivalently the entries split into tree
// sequences (one tree holding every entry >= 2, leftover 1s paired up)
inline bool is_forest_sequence(const DegreeSequence& seq) {
    i64 k = static_cast<i64>(seq.size());
    i64 s = seq.sum();
    return s % 2 == 0 && s <= 2 * (k - 1);
}

}  // namespace linefeas
