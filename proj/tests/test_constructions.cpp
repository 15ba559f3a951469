#include <doctest.h>

#include "wsat/constructions.hpp"
#include "wsat/grid.hpp"

using namespace wsat;

namespace {

Mask edge_bits(const VertexUniverse& u, std::initializer_list<std::pair<int, int>> verts) {
    Mask m;
    for (auto [a, i] : verts) m.set(u.bit(i, a));
    return m;
}

} // namespace

TEST_SUITE_BEGIN("constructions");

TEST_CASE("minimum-pattern construction, one color") {
    // n = 5, S = {2}, R = {3}: removed {12,14,15,34,35,45}, kept {13,23,24,25}
    const auto res = construct_min_r({5}, {{2}}, {{3}});
    VertexUniverse u({5});
    REQUIRE(res.removed.size() == 6);
    CHECK(res.surviving.size() == 4);
    CHECK(res.formula == 4);

    const std::vector<Mask> expected_order{
        edge_bits(u, {{0, 0}, {1, 0}}), edge_bits(u, {{0, 0}, {3, 0}}),
        edge_bits(u, {{0, 0}, {4, 0}}), edge_bits(u, {{2, 0}, {3, 0}}),
        edge_bits(u, {{2, 0}, {4, 0}}), edge_bits(u, {{3, 0}, {4, 0}})};
    for (std::size_t i = 0; i < expected_order.size(); ++i)
        CHECK(res.removed[i].edge == expected_order[i]);

    EdgeSet kept{edge_bits(u, {{0, 0}, {2, 0}}), edge_bits(u, {{1, 0}, {2, 0}}),
                 edge_bits(u, {{1, 0}, {3, 0}}), edge_bits(u, {{1, 0}, {4, 0}})};
    sort_edge_set(kept);
    CHECK(res.surviving == kept);

    const auto host = build_host({5}, {{2}});
    CHECK(verify_trace(host, {{2}}, {{3}}, res.surviving, res.order, CopyMode::colored).ok);
}

TEST_CASE("minimum-pattern construction with the pattern equal to the host") {
    const auto res = construct_min_r({3, 2}, {{1, 1}}, {{3, 2}});
    CHECK(res.removed.size() == 1); // only m = 0 contributes
    CHECK(res.removed[0].edge == edge_bits(VertexUniverse({3, 2}), {{0, 0}, {0, 1}}));
}

TEST_CASE("minimum-pattern construction in two colors") {
    const auto res = construct_min_r({3, 3}, {{1, 1}}, {{2, 2}});
    CHECK(res.surviving.size() == 5);
    CHECK(res.formula == 5);
    const auto host = build_host({3, 3}, {{1, 1}});
    CHECK(verify_trace(host, {{1, 1}}, {{2, 2}}, res.surviving, res.order,
                       CopyMode::colored)
              .ok);
    CHECK(cwsat_bruteforce(host, {{1, 1}}, {{2, 2}}) == 5);
}

TEST_CASE("minimum-pattern construction rejects families without a minimum") {
    CHECK_THROWS_AS(construct_min_r({4, 4}, {{1, 0}, {0, 1}}, {{2, 1}, {1, 2}}),
                    InvalidInput);
    // minimum exists but does not fit inside n
    CHECK_THROWS_AS(construct_min_r({2}, {{1}}, {{3}}), InvalidInput);
}

TEST_CASE("maximum-profile construction, one color") {
    const auto res = construct_max_s({5}, {{2}}, {{3}});
    VertexUniverse u({5});
    REQUIRE(res.removed.size() == 6);
    CHECK(res.surviving.size() == 4);
    // the survivors form the star at the first vertex
    for (const Mask& e : res.surviving) CHECK(e.test(0));
    // first added edge is {2,3}
    CHECK(res.removed.front().edge == edge_bits(u, {{1, 0}, {2, 0}}));
    const auto host = build_host({5}, {{2}});
    CHECK(verify_trace(host, {{2}}, {{3}}, res.surviving, res.order, CopyMode::colored).ok);
}

TEST_CASE("maximum-profile construction on the two-color anchor") {
    const auto res = construct_max_s({4, 4}, {{2, 1}}, {{2, 2}});
    CHECK(res.surviving.size() == 6);
    CHECK(res.formula == 6);
    const auto host = build_host({4, 4}, {{2, 1}});
    CHECK(verify_trace(host, {{2, 1}}, {{2, 2}}, res.surviving, res.order,
                       CopyMode::colored)
              .ok);
}

TEST_CASE("maximum-profile construction preconditions") {
    CHECK_THROWS_AS(construct_max_s({4, 4}, {{1, 0}, {0, 1}}, {{2, 1}, {1, 2}}),
                    InvalidInput);
    CHECK_THROWS_AS(construct_max_s({2}, {{1}}, {{3}}), InvalidInput); // R(n) empty
}

TEST_CASE("removed-edge count matches the inclusion-exclusion collapse") {
    GridSpec spec;
    spec.n_max = 4;
    long checked = 0;
    for (const auto& p : enumerate_grid(spec)) {
        const auto smax = componentwise_max_member(p.S);
        if (!smax) continue;
        const auto rn = fitting_in(p.R, p.n);
        if (rn.empty()) continue;
        const auto res = construct_max_s(p.n, p.S, p.R);
        Count expect = 0;
        for (std::size_t qbits = 1; qbits < (1u << rn.size()); ++qbits) {
            ParamVec mx(p.n.size(), 0);
            int members = 0;
            for (std::size_t j = 0; j < rn.size(); ++j)
                if (qbits >> j & 1) {
                    ++members;
                    for (std::size_t i = 0; i < mx.size(); ++i)
                        mx[i] = std::max(mx[i], rn[j][i]);
                }
            Count term = 1;
            for (std::size_t i = 0; i < p.n.size(); ++i)
                term *= binomial(p.n[i] - mx[i] + (*smax)[i], (*smax)[i]);
            expect += (members % 2 ? term : -term);
        }
        CHECK(Count(static_cast<long>(res.removed.size())) == expect);
        ++checked;
        if (checked >= 400) break;
    }
    CHECK(checked >= 400);
}

TEST_CASE("min-r removal count matches the collapsed q") {
    GridSpec spec;
    spec.n_max = 4;
    long checked = 0;
    for (const auto& p : enumerate_grid(spec)) {
        const auto rmin = componentwise_min_member(p.R);
        if (!rmin || !leq(*rmin, p.n)) continue;
        const auto res = construct_min_r(p.n, p.S, p.R);
        CHECK(Count(static_cast<long>(res.removed.size())) == q_single(p.n, p.S, *rmin));
        CHECK(Count(static_cast<long>(res.surviving.size())) ==
              cwsat_formula(p.n, p.S, p.R).cwsat);
        ++checked;
        if (checked >= 400) break;
    }
    CHECK(checked >= 400);
}

TEST_CASE("removal labels invert through maximal prefixes") {
    const ParamVec n{4, 3};
    const std::vector<ParamVec> S{{2, 1}, {1, 1}};
    const auto res = construct_min_r(n, S, {{2, 2}});
    VertexUniverse u(n);
    for (const auto& rm : res.removed) {
        const auto [m, tuple] = min_r_label(rm.edge, u);
        CHECK(m == rm.label);
        CHECK(tuple == rm.tuple);
    }
}

TEST_CASE("the profile-choice rule changes the survivors but not their count") {
    // two admissible profiles for m = (1,1) make the rules diverge
    const ParamVec n{4, 4};
    const std::vector<ParamVec> S{{1, 1}, {2, 2}};
    const std::vector<ParamVec> R{{3, 3}};
    const auto least = construct_min_r(n, S, R, SChoice::lex_least);
    const auto greatest = construct_min_r(n, S, R, SChoice::lex_greatest);
    CHECK(least.surviving.size() == greatest.surviving.size());
    CHECK(least.removed.size() == greatest.removed.size());
    const bool same_sets = least.surviving == greatest.surviving;
    MESSAGE("profile-choice rules produce identical survivor sets: ", same_sets);
    // both orders must be valid regardless
    const auto host = build_host(n, S);
    CHECK(verify_trace(host, S, R, least.surviving, least.order, CopyMode::colored).ok);
    CHECK(verify_trace(host, S, R, greatest.surviving, greatest.order, CopyMode::colored).ok);
}

TEST_CASE("construction orders percolate on a small grid") {
    GridSpec spec;
    spec.n_max = 3;
    spec.entry_max = 2;
    long checked = 0;
    for (const auto& p : enumerate_grid(spec)) {
        const auto host = build_host(p.n, p.S);
        if (host.edges.size() > 20) continue;
        const bool has_min =
            componentwise_min_member(p.R) && leq(*componentwise_min_member(p.R), p.n);
        const bool has_max =
            componentwise_max_member(p.S) && !fitting_in(p.R, p.n).empty();
        if (has_min) {
            const auto res = construct_min_r(p.n, p.S, p.R);
            CHECK(closure(host, p.S, p.R, res.surviving, CopyMode::colored).edges ==
                  host.edges);
            CHECK(verify_trace(host, p.S, p.R, res.surviving, res.order, CopyMode::colored)
                      .ok);
        }
        if (has_max) {
            const auto res = construct_max_s(p.n, p.S, p.R);
            CHECK(closure(host, p.S, p.R, res.surviving, CopyMode::colored).edges ==
                  host.edges);
            CHECK(verify_trace(host, p.S, p.R, res.surviving, res.order, CopyMode::colored)
                      .ok);
        }
        if (has_min || has_max) ++checked;
        if (checked >= 600) break;
    }
    CHECK(checked >= 300);
}

TEST_SUITE_END();
