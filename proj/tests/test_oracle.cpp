#include <catch2/catch_amalgamated.hpp>

#include "linefeas/closed_form.hpp"
#include "linefeas/oracle.hpp"

using namespace linefeas;

TEST_CASE("feasible set by brute force, small N") {
    auto r1 = feasible_set(1);
    REQUIRE(r1.feasible_m == std::vector<i64>{0});

    auto r5 = feasible_set(5);
    std::vector<i64> expect5;
    for (i64 m = 0; m <= 10; ++m)
        if (m != 9) expect5.push_back(m);
    REQUIRE(r5.feasible_m == expect5);
    REQUIRE(r5.nonfeasible_m() == std::vector<i64>{9});
    REQUIRE(r5.is_feasible(10));
    REQUIRE(!r5.is_feasible(9));
    REQUIRE(r5.sequences_examined > 0);

    REQUIRE_THROWS_AS(feasible_set(0), DomainError);
    REQUIRE_THROWS_AS(feasible_set(36), LimitExceededError);
}

TEST_CASE("every N realizes M=0 and M=C(N,2)") {
    for (i64 n = 1; n <= 12; ++n) {
        auto r = feasible_set(n);
        REQUIRE(r.is_feasible(0));
        REQUIRE(r.is_feasible(binom2(n)));
        REQUIRE(r.feasible_m.front() >= 0);
        REQUIRE(r.feasible_m.back() == binom2(n));
    }
}

TEST_CASE("brute force agrees with the formulas through N=16") {
    for (i64 n = 5; n <= 16; ++n) {
        auto r = feasible_set(n);
        REQUIRE(r.nonfeasible_m() == nonfeasible_intervals(n).values());
    }
}

TEST_CASE("worker count does not change the result") {
    for (int workers : {1, 2, 3, 8}) {
        OracleConfig cfg;
        cfg.workers = workers;
        auto r = feasible_set(12, cfg);
        REQUIRE(r.nonfeasible_m() == nonfeasible_intervals(12).values());
        REQUIRE(r.sequences_examined == feasible_set(12).sequences_examined);
    }
}

TEST_CASE("report serialization shape") {
    auto r = feasible_set(5);
    REQUIRE(r.to_json() ==
            "{\"n\":5,\"nonfeasible\":[9],\"count_feasible\":10,\"sequences_examined\":" +
                std::to_string(r.sequences_examined) + "}");
}

TEST_CASE("acyclic feasible sets") {
    REQUIRE(feasible_set_acyclic(1).feasible_m == std::vector<i64>{0});
    REQUIRE(feasible_set_acyclic(2).feasible_m == std::vector<i64>{0, 1});
    REQUIRE(feasible_set_acyclic(3).feasible_m == std::vector<i64>{0, 1, 2, 3});
    REQUIRE_THROWS_AS(feasible_set_acyclic(23), LimitExceededError);

    // acyclic-feasible is a subset of feasible
    for (i64 n = 1; n <= 10; ++n) {
        auto forest = feasible_set_acyclic(n);
        auto all = feasible_set(n);
        for (i64 m : forest.feasible_m) REQUIRE(all.is_feasible(m));
        REQUIRE(forest.is_feasible(binom2(n)));  // the star is a tree
    }
}

TEST_CASE("exact maximum with a fixed top degree") {
    REQUIRE(f_exact(6, 4) == 11);
    REQUIRE(f_exact(9, 6) == 24);
    for (i64 n = 1; n <= 8; ++n) REQUIRE(f_exact(n, 1) == 0);
    REQUIRE_THROWS_AS(f_exact(100, 3), LimitExceededError);
    REQUIRE_THROWS_AS(f_exact(6, 0), DomainError);

    // agreement with the closed form above half degree
    for (i64 n = 5; n <= 14; ++n)
        for (i64 delta = n / 2 + 1; delta <= n; ++delta)
            REQUIRE(f_exact(n, delta) == f_high(n, n - delta));
}

TEST_CASE("exact maximum growth in N and delta") {
    const i64 n_cap = 14;
    for (i64 n = 2; n <= n_cap; ++n)
        for (i64 delta = 2; delta <= n; ++delta) {
            i64 here = f_exact(n, delta);
            if (n + 1 <= n_cap) REQUIRE(f_exact(n + 1, delta) >= here + 1);
            if (delta + 1 <= n && n > binom2(delta + 1))
                REQUIRE(f_exact(n, delta + 1) >= here + 1);
            if (delta + 1 <= n && 2 * delta > n) REQUIRE(f_exact(n, delta + 1) >= here);
        }
}

TEST_CASE("exact acyclic maximum matches its closed form") {
    REQUIRE(g_exact(7, 3) == 9);
    for (i64 n = 2; n <= 12; ++n) {
        REQUIRE(g_exact(n, 2) == n - 1);
        REQUIRE(g_exact(n, n) == binom2(n));
        for (i64 delta = 2; delta <= n; ++delta) REQUIRE(g_exact(n, delta) == g_closed(n, delta));
    }
}
