#include <doctest.h>

#include <json.hpp>

#include "wsat/json_io.hpp"

using namespace wsat;

TEST_SUITE_BEGIN("json_io");

TEST_CASE("hypergraph documents round-trip") {
    const auto host = build_host({4, 4}, {{2, 1}});
    const auto text = hypergraph_to_json(host);
    const auto back = hypergraph_from_json(text);
    CHECK(back.universe.sizes == host.universe.sizes);
    CHECK(back.edges == host.edges);
    // and the re-serialization is byte-identical
    CHECK(hypergraph_to_json(back) == text);
}

TEST_CASE("hypergraph parsing rejects malformed documents") {
    CHECK_THROWS_AS(hypergraph_from_json("{"), InvalidInput);
    CHECK_THROWS_AS(hypergraph_from_json("{\"n\":[2]}"), InvalidInput);
    CHECK_THROWS_AS(hypergraph_from_json("{\"d\":2,\"n\":[2],\"edges\":[]}"), InvalidInput);
    CHECK_THROWS_AS(hypergraph_from_json("{\"n\":[2],\"edges\":[[[3,1]]]}"), InvalidInput);
}

TEST_CASE("colored traces round-trip") {
    const auto host = build_host({4}, {{2}});
    EdgeSet start;
    for (const Mask& e : host.edges)
        if (e.test(0)) start.push_back(e);
    const auto res = closure(host, {{2}}, {{3}}, start, CopyMode::colored);
    const auto text = trace_to_json(res.trace, host.universe);
    const auto back = trace_from_json(text, host.universe);
    CHECK(back.mode == CopyMode::colored);
    CHECK(back.start == res.trace.start);
    REQUIRE(back.steps.size() == res.trace.steps.size());
    for (std::size_t i = 0; i < back.steps.size(); ++i) {
        CHECK(back.steps[i].edge == res.trace.steps[i].edge);
        CHECK(back.steps[i].pattern == res.trace.steps[i].pattern);
        CHECK(back.steps[i].parts == res.trace.steps[i].parts);
    }
    CHECK(verify_trace(host, {{2}}, {{3}}, back.start, back, CopyMode::colored).ok);
}

TEST_CASE("uncolored traces carry vertex pairs in witnesses") {
    const auto host = build_host({4, 4}, {{2, 1}});
    const auto res = closure(host, {{2, 1}}, {{2, 2}}, {}, CopyMode::uncolored);
    // a single start edge percolates; from the empty start nothing moves
    CHECK(res.trace.steps.empty());

    EdgeSet start{host.edges[0]};
    const auto res2 = closure(host, {{2, 1}}, {{2, 2}}, start, CopyMode::uncolored);
    CHECK(res2.trace.fallback);
    CHECK_FALSE(res2.trace.steps.empty());
    const auto text = trace_to_json(res2.trace, host.universe);
    const auto back = trace_from_json(text, host.universe);
    CHECK(back.fallback);
    CHECK(back.steps.size() == res2.trace.steps.size());
    CHECK(verify_trace(host, {{2, 1}}, {{2, 2}}, back.start, back, CopyMode::uncolored).ok);
}

TEST_CASE("formula document matches the documented shape") {
    const auto res = cwsat_formula({4, 4}, {{2, 1}}, {{2, 2}});
    CHECK(formula_to_json({4, 4}, {{2, 1}}, {{2, 2}}, res) ==
          "{\"R\":[[2,2]],\"S\":[[2,1]],\"cwsat\":6,\"n\":[4,4],\"q\":18,"
          "\"tight_guaranteed\":true}");
}

TEST_CASE("construction document carries the removal ledger") {
    const auto res = construct_max_s({5}, {{2}}, {{3}});
    const auto text = construction_to_json(res, VertexUniverse({5}));
    const auto j = nlohmann::json::parse(text);
    CHECK(j.at("removed_count").get<int>() == 6);
    CHECK(j.at("formula").get<int>() == 4);
    CHECK(j.at("steps").size() == 6);
    // the embedded trace re-verifies
    const auto host = build_host({5}, {{2}});
    const auto back = trace_from_json(text, host.universe);
    CHECK(verify_trace(host, {{2}}, {{3}}, back.start, back, CopyMode::colored).ok);
}

TEST_CASE("certificate document mirrors the report") {
    const auto rep = certificate_report({4}, {{2}}, {{3}}, 2024);
    const auto j = nlohmann::json::parse(certificate_to_json(rep));
    CHECK(j.at("edge_count").get<int>() == 6);
    CHECK(j.at("dim_U").get<int>() == 3);
    CHECK(j.at("q").get<int>() == 3);
    CHECK(j.at("bound").get<int>() == 3);
    CHECK(j.at("formula_cwsat").get<int>() == 3);
    CHECK(j.at("support_ok").get<bool>());
    CHECK(j.at("tight_case").get<std::string>() == "max_s");
    CHECK(j.at("seed").get<std::uint64_t>() == 2024);
}

TEST_CASE("basis export carries verified rational blocks") {
    const auto basis = colorful_generic_basis({2, 3}, 5);
    const auto j = nlohmann::json::parse(basis_to_json(basis));
    CHECK(j.at("seed").get<std::uint64_t>() == 5);
    CHECK(j.at("verified_minors").get<bool>());
    REQUIRE(j.at("blocks").size() == 2);
    CHECK(j.at("blocks")[0].size() == 2);
    CHECK(j.at("blocks")[1].size() == 3);
    // entries parse back into the same rationals
    for (int b = 0; b < 2; ++b)
        for (std::size_t r = 0; r < j.at("blocks")[b].size(); ++r)
            for (std::size_t c = 0; c < j.at("blocks")[b][r].size(); ++c) {
                const Rational parsed = rational_from_string(
                    j.at("blocks")[b][r][c].get<std::string>());
                CHECK(parsed == basis.blocks[static_cast<std::size_t>(b)].at(
                                    static_cast<int>(r), static_cast<int>(c)));
            }
}

TEST_CASE("identical seeds reproduce identical documents") {
    const auto a = certificate_to_json(certificate_report({3, 3}, {{1, 1}}, {{2, 2}}, 99));
    const auto b = certificate_to_json(certificate_report({3, 3}, {{1, 1}}, {{2, 2}}, 99));
    CHECK(a == b);
    const auto c = basis_to_json(colorful_generic_basis({4}, 12));
    const auto d = basis_to_json(colorful_generic_basis({4}, 12));
    CHECK(c == d);
}

TEST_SUITE_END();
