#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "linefeas/degree_sequence.hpp"
#include "linefeas/errors.hpp"
#include "linefeas/numbers.hpp"

// Brute-force ground truth: enumerate every partition of 2N (each one a
// candidate degree multiset), keep the graphical ones, and record which
// values of sum C(d_i,2) occur. Parallel runs split the work by largest
// part; merging is a bitwise OR, so the result is identical for any worker
// count or schedule.

namespace linefeas {

struct OracleConfig {
    i64 limit = 35;          // cap for feasible_set / f_exact
    i64 acyclic_limit = 22;  // cap for feasible_set_acyclic / g_exact
    int workers = 0;         // 0 = hardware concurrency
};

struct FeasibilityReport {
    i64 n = 0;
    std::vector<i64> feasible_m;  // sorted ascending
    std::chrono::duration<double> elapsed{0};
    unsigned long long sequences_examined = 0;

    bool is_feasible(i64 m) const {
        return std::binary_search(feasible_m.begin(), feasible_m.end(), m);
    }

    std::vector<i64> nonfeasible_m() const {
        std::vector<i64> out;
        i64 top = binom2(n);
        size_t i = 0;
        for (i64 m = 0; m <= top; ++m) {
            while (i < feasible_m.size() && feasible_m[i] < m) ++i;
            if (i == feasible_m.size() || feasible_m[i] != m) out.push_back(m);
        }
        return out;
    }

    std::string to_json() const {
        std::ostringstream out;
        out << "{\"n\":" << n << ",\"nonfeasible\":[";
        auto nf = nonfeasible_m();
        for (size_t i = 0; i < nf.size(); ++i) {
            if (i) out << ',';
            out << nf[i];
        }
        out << "],\"count_feasible\":" << feasible_m.size()
            << ",\"sequences_examined\":" << sequences_examined << "}";
        return out.str();
    }
};

namespace detail {

class Bitset {
public:
    explicit Bitset(size_t bits) : bits_(bits), w_((bits + 63) / 64, 0) {}
    void set(size_t i) { w_[i >> 6] |= 1ull << (i & 63); }
    bool test(size_t i) const { return w_[i >> 6] >> (i & 63) & 1ull; }
    size_t size() const { return bits_; }
    Bitset& operator|=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }

private:
    size_t bits_;
    std::vector<uint64_t> w_;
};

// partitions of `remaining` into parts <= cap appended to parts, descending
template <class Leaf>
void descend(i64 remaining, i64 cap, std::vector<int>& parts, Leaf&& leaf) {
    if (remaining == 0) {
        leaf();
        return;
    }
    for (i64 p = std::min(cap, remaining); p >= 1; --p) {
        parts.push_back(static_cast<int>(p));
        descend(remaining - p, p, parts, leaf);
        parts.pop_back();
    }
}

// same, pruned so at least min_parts parts can still be reached
template <class Leaf>
void descend_long(i64 remaining, i64 cap, i64 have, i64 min_parts,
                  std::vector<int>& parts, Leaf&& leaf) {
    if (remaining == 0) {
        if (have >= min_parts) leaf();
        return;
    }
    if (have + remaining < min_parts) return;
    for (i64 p = std::min(cap, remaining); p >= 1; --p) {
        parts.push_back(static_cast<int>(p));
        descend_long(remaining - p, p, have + 1, min_parts, parts, leaf);
        parts.pop_back();
    }
}

inline i64 sum_binom2(const std::vector<int>& parts) {
    i64 s = 0;
    for (int p : parts) s += binom2(p);
    return s;
}

inline int resolve_workers(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

struct SweepOut {
    Bitset bits;
    unsigned long long examined = 0;
};

// feasible e(L) values over all partitions of 2n passing `forest_only`
// selection; split across workers by largest part (parts above n can never
// be graphical and never fit a forest's n+1 part minimum, so skip them)
inline SweepOut sweep(i64 n, bool forest_only, int workers) {
    SweepOut total{Bitset(static_cast<size_t>(binom2(n)) + 1), 0};
    workers = std::min<i64>(resolve_workers(workers), n);
    std::atomic<i64> next{n};
    std::vector<SweepOut> local(workers, total);
    std::vector<std::thread> pool;
    auto work = [&](int w) {
        std::vector<int> parts;
        parts.reserve(static_cast<size_t>(2 * n));
        for (i64 d = next.fetch_sub(1); d >= 1; d = next.fetch_sub(1)) {
            parts.assign(1, static_cast<int>(d));
            auto leaf = [&] {
                ++local[w].examined;
                if (forest_only || erdos_gallai_desc(parts))
                    local[w].bits.set(static_cast<size_t>(sum_binom2(parts)));
            };
            if (forest_only)
                descend_long(2 * n - d, d, 1, n + 1, parts, leaf);
            else
                descend(2 * n - d, d, parts, leaf);
        }
    };
    for (int w = 1; w < workers; ++w) pool.emplace_back(work, w);
    work(0);
    for (auto& t : pool) t.join();
    for (auto& l : local) {
        total.bits |= l.bits;
        total.examined += l.examined;
    }
    return total;
}

inline FeasibilityReport report_from(i64 n, const SweepOut& s,
                                     std::chrono::steady_clock::time_point start) {
    FeasibilityReport rep;
    rep.n = n;
    for (size_t m = 0; m < s.bits.size(); ++m)
        if (s.bits.test(m)) rep.feasible_m.push_back(static_cast<i64>(m));
    rep.sequences_examined = s.examined;
    rep.elapsed = std::chrono::steady_clock::now() - start;
    return rep;
}

}  // namespace detail

inline FeasibilityReport feasible_set(i64 n, const OracleConfig& cfg = {}) {
    if (n < 1) throw DomainError("feasible_set needs N >= 1");
    if (n > cfg.limit) throw LimitExceededError("N above oracle limit");
    auto start = std::chrono::steady_clock::now();
    auto s = detail::sweep(n, false, cfg.workers);
    return detail::report_from(n, s, start);
}

// partitions of 2N that are forest degree sequences; with sum fixed at 2N
// the forest criterion reduces to having at least N+1 parts
inline FeasibilityReport feasible_set_acyclic(i64 n, const OracleConfig& cfg = {}) {
    if (n < 1) throw DomainError("feasible_set_acyclic needs N >= 1");
    if (n > cfg.acyclic_limit) throw LimitExceededError("N above acyclic oracle limit");
    auto start = std::chrono::steady_clock::now();
    auto s = detail::sweep(n, true, cfg.workers);
    return detail::report_from(n, s, start);
}

// max e(L) over graphical partitions of 2N with largest part exactly delta
inline i64 f_exact(i64 n, i64 delta, const OracleConfig& cfg = {}) {
    if (n < 1 || delta < 1) throw DomainError("f_exact needs N >= 1, delta >= 1");
    if (n > cfg.limit) throw LimitExceededError("N above oracle limit");
    std::optional<i64> best;
    if (delta <= n) {
        std::vector<int> parts{static_cast<int>(delta)};
        detail::descend(2 * n - delta, delta, parts, [&] {
            if (detail::erdos_gallai_desc(parts)) {
                i64 v = detail::sum_binom2(parts);
                if (!best || v > *best) best = v;
            }
        });
    }
    if (!best) throw NoSuchGraphError("no graphical sequence with that maximum degree");
    return *best;
}

// acyclic counterpart of f_exact
inline i64 g_exact(i64 n, i64 delta, const OracleConfig& cfg = {}) {
    if (n < 1 || delta < 1) throw DomainError("g_exact needs N >= 1, delta >= 1");
    if (n > cfg.acyclic_limit) throw LimitExceededError("N above acyclic oracle limit");
    std::optional<i64> best;
    if (delta <= n) {
        std::vector<int> parts{static_cast<int>(delta)};
        detail::descend_long(2 * n - delta, delta, 1, n + 1, parts, [&] {
            i64 v = detail::sum_binom2(parts);
            if (!best || v > *best) best = v;
        });
    }
    if (!best) throw NoSuchGraphError("no forest sequence with that maximum degree");
    return *best;
}

}  // namespace linefeas
