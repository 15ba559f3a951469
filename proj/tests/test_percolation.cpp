#include <doctest.h>

#include <random>

#include "wsat/percolation.hpp"

using namespace wsat;

namespace {

Mask edge_bits(const VertexUniverse& u, std::initializer_list<std::pair<int, int>> verts) {
    Mask m;
    for (auto [a, i] : verts) m.set(u.bit(i, a));
    return m;
}

EdgeSet star_at_first_vertex(const ColoredHypergraph& host) {
    EdgeSet out;
    for (const Mask& e : host.edges)
        if (e.test(0)) out.push_back(e);
    return out;
}

} // namespace

TEST_SUITE_BEGIN("percolation");

TEST_CASE("closure of the full host is trivial") {
    const auto host = build_host({4}, {{2}});
    const auto res = closure(host, {{2}}, {{3}}, host.edges, CopyMode::colored);
    CHECK(res.edges == host.edges);
    CHECK(res.trace.steps.empty());
}

TEST_CASE("a star percolates the triangle pattern") {
    const auto host = build_host({4}, {{2}});
    const auto start = star_at_first_vertex(host);
    REQUIRE(start.size() == 3);
    const auto res = closure(host, {{2}}, {{3}}, start, CopyMode::colored);
    CHECK(res.edges == host.edges);
    CHECK(res.trace.steps.size() == 3);
    const auto verdict = verify_trace(host, {{2}}, {{3}}, start, res.trace, CopyMode::colored);
    CHECK(verdict.ok);
}

TEST_CASE("nothing percolates when no pattern fits") {
    const auto host = build_host({3}, {{2}});
    const auto res = closure(host, {{2}}, {{4}}, {}, CopyMode::colored);
    CHECK(res.edges.empty());
}

TEST_CASE("closure rejects start edges outside the host") {
    const auto host = build_host({4}, {{2}});
    VertexUniverse u({4});
    EdgeSet bad{edge_bits(u, {{0, 0}, {1, 0}, {2, 0}})};
    CHECK_THROWS_AS(closure(host, {{2}}, {{3}}, bad, CopyMode::colored), InvalidInput);
}

TEST_CASE("verify_trace rejects a witness that is not yet complete") {
    const auto host = build_host({4}, {{2}});
    const auto start = star_at_first_vertex(host);
    auto res = closure(host, {{2}}, {{3}}, start, CopyMode::colored);
    REQUIRE(res.trace.steps.size() == 3);
    // rewrite the first witness to lean on edges that are still missing:
    // {2,3} claims the copy on {2,3,4} whose edges {2,4},{3,4} come later
    auto tampered = res.trace;
    tampered.steps[0].parts = parts_from_indices(host.universe, {{1, 2, 3}}).parts;
    const auto verdict =
        verify_trace(host, {{2}}, {{3}}, start, tampered, CopyMode::colored);
    CHECK_FALSE(verdict.ok);
    CHECK(verdict.failed_step == 0);
    CHECK(verdict.reason == "witness incomplete");
}

TEST_CASE("verify_trace rejects foreign patterns and short traces") {
    const auto host = build_host({4}, {{2}});
    const auto start = star_at_first_vertex(host);
    auto res = closure(host, {{2}}, {{3}}, start, CopyMode::colored);
    auto wrong_pattern = res.trace;
    wrong_pattern.steps[0].pattern = {4};
    CHECK_FALSE(
        verify_trace(host, {{2}}, {{3}}, start, wrong_pattern, CopyMode::colored).ok);

    auto truncated = res.trace;
    truncated.steps.pop_back();
    const auto verdict =
        verify_trace(host, {{2}}, {{3}}, start, truncated, CopyMode::colored);
    CHECK_FALSE(verdict.ok);
    CHECK(verdict.reason == "trace does not reach the full host");
}

TEST_CASE("closure is independent of the scan order") {
    const auto host = build_host({4, 3}, {{1, 1}});
    const std::vector<ParamVec> S{{1, 1}}, R{{2, 2}, {3, 2}};
    std::mt19937_64 eng(3);
    for (int trial = 0; trial < 12; ++trial) {
        EdgeSet start;
        for (const Mask& e : host.edges)
            if (eng() % 3 == 0) start.push_back(e);
        const auto forward = closure(host, S, R, start, CopyMode::colored);
        std::vector<int> reversed(host.edges.size());
        for (std::size_t i = 0; i < reversed.size(); ++i)
            reversed[i] = static_cast<int>(host.edges.size() - 1 - i);
        const auto backward =
            closure(host, S, R, start, CopyMode::colored, UncoloredStrategy::automatic,
                    &reversed);
        CHECK(forward.edges == backward.edges);
        // saturating traces must re-verify; partial closures cannot
        if (forward.edges == host.edges) {
            CHECK(verify_trace(host, S, R, start, forward.trace, CopyMode::colored).ok);
            CHECK(verify_trace(host, S, R, start, backward.trace, CopyMode::colored).ok);
        }
    }
}

TEST_CASE("closure is monotone in the start set") {
    const auto host = build_host({3, 3}, {{2, 1}});
    const std::vector<ParamVec> S{{2, 1}}, R{{3, 2}};
    std::mt19937_64 eng(17);
    for (int trial = 0; trial < 12; ++trial) {
        EdgeSet small, large;
        for (const Mask& e : host.edges) {
            const auto roll = eng() % 4;
            if (roll == 0) small.push_back(e);
            if (roll <= 1) large.push_back(e);
        }
        for (const Mask& e : small) REQUIRE(edge_set_contains(large, e));
        const auto cs = closure(host, S, R, small, CopyMode::colored).edges;
        const auto cl = closure(host, S, R, large, CopyMode::colored).edges;
        for (const Mask& e : cs) CHECK(edge_set_contains(cl, e));
    }
}

TEST_CASE("colored closure is contained in the uncolored closure") {
    const auto host = build_host({3, 3}, {{1, 1}});
    const std::vector<ParamVec> S{{1, 1}}, R{{2, 2}};
    std::mt19937_64 eng(23);
    for (int trial = 0; trial < 8; ++trial) {
        EdgeSet start;
        for (const Mask& e : host.edges)
            if (eng() % 3 == 0) start.push_back(e);
        const auto colored = closure(host, S, R, start, CopyMode::colored).edges;
        const auto uncolored = closure(host, S, R, start, CopyMode::uncolored,
                                       UncoloredStrategy::exhaustive)
                                   .edges;
        for (const Mask& e : colored) CHECK(edge_set_contains(uncolored, e));
    }
}

TEST_CASE("uncolored closure flags the exhaustive fallback") {
    const auto host = build_host({4, 4}, {{2, 1}});
    const auto res = closure(host, {{2, 1}}, {{2, 2}}, host.edges, CopyMode::uncolored);
    CHECK(res.trace.fallback); // reduction conditions fail for this family
    const auto host2 = build_host({3, 3}, {{1, 1}});
    const auto res2 = closure(host2, {{1, 1}}, {{2, 2}}, host2.edges, CopyMode::uncolored);
    CHECK_FALSE(res2.trace.fallback);
}

TEST_CASE("colored brute force on the anchor instances") {
    {
        const auto host = build_host({4, 4}, {{1, 0}, {0, 1}});
        CHECK(cwsat_bruteforce(host, {{1, 0}, {0, 1}}, {{2, 1}, {1, 2}}) == 2);
    }
    {
        const auto host = build_host({4}, {{2}});
        CHECK(cwsat_bruteforce(host, {{2}}, {{3}}) == 3);
    }
    {
        // R(n) empty: every edge must be paid for
        const auto host = build_host({3}, {{2}});
        CHECK(cwsat_bruteforce(host, {{2}}, {{4}}) ==
              Count(static_cast<long>(host.edges.size())));
    }
}

TEST_CASE("oracle honors the edge cap") {
    const auto host = build_host({4}, {{2}});
    CHECK_THROWS_AS(cwsat_bruteforce(host, {{2}}, {{3}}, 5), InvalidInput);
}

TEST_CASE("uncolored brute force on small instances") {
    {
        const auto host = build_host({4}, {{2}});
        CHECK(wsat_bruteforce_uncolored(host, {{2}}, {{3}}) == 3);
    }
    {
        const auto host = build_host({3}, {{2}});
        CHECK(wsat_bruteforce_uncolored(host, {{2}}, {{4}}) ==
              Count(static_cast<long>(host.edges.size())));
    }
}

TEST_CASE("uncolored value never exceeds the colored value") {
    const std::vector<std::tuple<ParamVec, std::vector<ParamVec>, std::vector<ParamVec>>>
        instances{
            {{3, 3}, {{1, 1}}, {{2, 2}}},
            {{4, 2}, {{1, 1}}, {{2, 2}}},
            {{2, 2}, {{1, 0}, {0, 1}}, {{2, 1}, {1, 2}}},
            {{4, 3}, {{2, 1}}, {{2, 2}}},
        };
    for (const auto& [n, S, R] : instances) {
        const auto host = build_host(n, S);
        CHECK(wsat_bruteforce_uncolored(host, S, R, 24, UncoloredStrategy::exhaustive) <=
              cwsat_bruteforce(host, S, R));
    }
}

TEST_CASE("reduction strategy matches the exhaustive strategy") {
    const std::vector<std::tuple<ParamVec, std::vector<ParamVec>, std::vector<ParamVec>>>
        instances{
            {{3, 3}, {{1, 1}}, {{2, 2}}},
            {{3, 3}, {{1, 1}}, {{3, 2}}},
            {{4, 2}, {{1, 1}}, {{2, 2}}},
        };
    for (const auto& [n, S, R] : instances) {
        REQUIRE(reduction_conditions(S, R));
        const auto host = build_host(n, S);
        CHECK(wsat_bruteforce_uncolored(host, S, R, 24, UncoloredStrategy::exhaustive) ==
              wsat_bruteforce_uncolored(host, S, R, 24, UncoloredStrategy::reduction));
    }
}

TEST_SUITE_END();
