#pragma once

#include <cassert>
#include <cstdint>
#include <optional>

// Small exact integer helpers. Everything here is pure integer arithmetic;
// boundary decisions that look like square roots are done with isqrt and
// comparisons, never with floating point.

namespace linefeas {

using i64 = long long;

// floor(sqrt(x)) by integer Newton iteration
inline i64 isqrt(i64 x) {
    assert(x >= 0);
    if (x < 2) return x;
    i64 r = x;
    i64 g = (x >> 1) + 1;
    while (g < r) {
        r = g;
        g = (g + x / g) >> 1;
    }
    return r;
}

inline bool is_perfect_square(i64 x) {
    if (x < 0) return false;
    i64 r = isqrt(x);
    return r * r == x;
}

// C(n,2), zero for n < 2
constexpr i64 binom2(i64 n) { return n < 2 ? 0 : n * (n - 1) / 2; }

// T(a) = a(a+1)/2 = C(a+1,2)
constexpr i64 triangular(i64 a) { return a * (a + 1) / 2; }

// a with T(a) == w, if w is triangular
inline std::optional<i64> triangular_index(i64 w) {
    if (w < 0) return std::nullopt;
    i64 d = 8 * w + 1;
    i64 r = isqrt(d);
    if (r * r != d) return std::nullopt;
    return (r - 1) / 2;
}

// largest s >= 0 with C(s,2) <= m
inline i64 binom2_floor_index(i64 m) {
    assert(m >= 0);
    i64 s = (1 + isqrt(1 + 8 * m)) / 2;
    while (binom2(s) > m) --s;
    while (binom2(s + 1) <= m) ++s;
    return s;
}

}  // namespace linefeas
