#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "linefeas/errors.hpp"
#include "linefeas/numbers.hpp"

// Closed forms for line-graph feasibility of (N, M) pairs. For N >= 5 the
// non-feasible M are exactly the integers in
//     [ C(N-t,2) + C(t+2,2) , C(N-t+1,2) - 1 ]
// for t = 1 .. t_max, where t_max is the largest integer strictly below
// (-5 + sqrt(8N+17)) / 2. Everything here is exact integer arithmetic; the
// square-root cutoffs are decided by comparing squares.

namespace linefeas {

// sorted, disjoint, inclusive integer intervals
class IntervalSet {
public:
    using Interval = std::pair<i64, i64>;

    void add(i64 lo, i64 hi) {
        if (lo > hi) throw InternalError("empty interval");
        if (!iv_.empty() && lo <= iv_.back().second)
            throw InternalError("intervals out of order");
        iv_.push_back({lo, hi});
    }

    bool empty() const { return iv_.empty(); }
    size_t size() const { return iv_.size(); }
    const std::vector<Interval>& intervals() const { return iv_; }

    bool contains(i64 m) const {
        for (auto [lo, hi] : iv_) {
            if (m < lo) return false;
            if (m <= hi) return true;
        }
        return false;
    }

    std::optional<Interval> interval_containing(i64 m) const {
        for (auto [lo, hi] : iv_) {
            if (m < lo) break;
            if (m <= hi) return Interval{lo, hi};
        }
        return std::nullopt;
    }

    // every integer covered, ascending
    std::vector<i64> values() const {
        std::vector<i64> out;
        for (auto [lo, hi] : iv_)
            for (i64 m = lo; m <= hi; ++m) out.push_back(m);
        return out;
    }

    std::string to_json(i64 n) const {
        std::ostringstream out;
        out << "{\"n\":" << n << ",\"nonfeasible\":[";
        for (size_t i = 0; i < iv_.size(); ++i) {
            if (i) out << ',';
            out << '[' << iv_[i].first << ',' << iv_[i].second << ']';
        }
        out << "]}";
        return out.str();
    }

    bool operator==(const IntervalSet& other) const { return iv_ == other.iv_; }

private:
    std::vector<Interval> iv_;
};

struct TCutoff {
    i64 n;
    i64 t_max;            // largest t with a non-empty gap; 0 means none
    bool boundary_exact;  // (-5 + sqrt(8n+17))/2 landed on an integer
};

inline TCutoff t_cutoff(i64 n) {
    if (n < 2) throw DomainError("t_cutoff needs N >= 2");
    i64 disc = 8 * n + 17;
    i64 r = isqrt(disc);
    bool exact = r * r == disc && r % 2 == 1;
    // largest t >= 0 with (2t+5)^2 < disc; disc >= 33 keeps this >= 0
    i64 t = (r - 5) / 2;
    while (t > 0 && (2 * t + 5) * (2 * t + 5) >= disc) --t;
    while ((2 * (t + 1) + 5) * (2 * (t + 1) + 5) < disc) ++t;
    return {n, t, exact};
}

inline IntervalSet nonfeasible_intervals(i64 n) {
    if (n < 1) throw DomainError("nonfeasible_intervals needs N >= 1");
    IntervalSet out;
    if (n < 5) return out;  // every pair with 0 <= M <= C(N,2) is feasible
    i64 t_max = t_cutoff(n).t_max;
    for (i64 t = t_max; t >= 1; --t) {
        i64 lo = binom2(n - t) + binom2(t + 2);
        i64 hi = binom2(n - t + 1) - 1;
        if (lo <= hi) out.add(lo, hi);
    }
    return out;
}

inline std::optional<i64> min_nonfeasible(i64 n) {
    if (n < 1) throw DomainError("min_nonfeasible needs N >= 1");
    if (n < 5) return std::nullopt;
    i64 t = t_cutoff(n).t_max;
    return binom2(n - t) + binom2(t + 2);
}

inline bool is_feasible_closed(i64 n, i64 m) {
    if (n < 1) throw DomainError("is_feasible_closed needs N >= 1");
    if (m < 0 || m > binom2(n)) throw OutOfRangeError("M outside [0, C(N,2)]");
    return !nonfeasible_intervals(n).contains(m);
}

// max e(L(G)) over graphs with N edges, max degree N-t and no isolated
// vertices; t = 0 degenerates to the star bound C(N,2)
inline i64 f_high(i64 n, i64 t) {
    if (t < 0) throw DomainError("f_high needs t >= 0");
    if (t == 0) {
        if (n < 1) throw DomainError("f_high needs N >= 1");
        return binom2(n);
    }
    if (n < 2 * t + 1) throw DomainError("f_high needs N >= 2t+1");
    return binom2(n - t) + binom2(t + 2) - 1;
}

// the same maximum at degree exactly N/2, even N >= 6
inline i64 f_half(i64 n) {
    if (n < 6 || n % 2 != 0) throw DomainError("f_half needs even N >= 6");
    return n * n / 4 + 3;
}

// upper bound in the low-degree regime: both N(delta-1) and floor(N^2/3) hold
inline i64 f_upper_bound_low_delta(i64 n, i64 delta) {
    if (n < 12) throw DomainError("f_upper_bound_low_delta needs N >= 12");
    if (delta < 1 || 2 * delta > n)
        throw DomainError("f_upper_bound_low_delta needs 1 <= delta <= N/2");
    return std::min(n * (delta - 1), n * n / 3);
}

// max e(L(F)) over forests with N edges, max degree delta, no isolated
// vertices: (N-k-1)/(delta-1) vertices of full degree plus one of degree k+1
inline i64 g_closed(i64 n, i64 delta) {
    if (delta < 1 || delta > n) throw DomainError("g_closed needs 1 <= delta <= N");
    if (delta == 1) return 0;
    i64 k = (n - 1) % (delta - 1);
    i64 full = (n - 1 - k) / (delta - 1);
    return full * binom2(delta) + binom2(k + 1);
}

// smallest t from which the star-forest covering argument applies:
// ceil((-15 + sqrt(153 + 72N)) / 2)
inline i64 star_forest_cover_cutoff(i64 n) {
    if (n < 1) throw DomainError("star_forest_cover_cutoff needs N >= 1");
    i64 disc = 153 + 72 * n;
    i64 c = std::max<i64>(0, (isqrt(disc) - 17) / 2);
    while ((2 * c + 15) * (2 * c + 15) < disc) ++c;
    while (c > 0 && (2 * (c - 1) + 15) * (2 * (c - 1) + 15) >= disc) --c;
    return c;
}

// largest t whose double-star gap argument applies: the largest integer
// strictly below (-3 + sqrt(8N+1)) / 2
inline i64 acyclic_gap_t(i64 n) {
    if (n < 2) throw DomainError("acyclic_gap_t needs N >= 2");
    i64 disc = 8 * n + 1;
    i64 t = (isqrt(disc) - 3) / 2;
    while (t > 0 && (2 * t + 3) * (2 * t + 3) >= disc) --t;
    while ((2 * (t + 1) + 3) * (2 * (t + 1) + 3) < disc) ++t;
    return t;
}

}  // namespace linefeas
