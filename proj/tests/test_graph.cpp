#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>

#include "bunkbed/errors.hpp"
#include "bunkbed/graph.hpp"
#include "bunkbed/rng.hpp"

using namespace bunkbed;

TEST_CASE("parse_edge_list basics") {
    Graph g = parse_edge_list("0 1");
    CHECK(g.vertex_count() == 2);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}});

    Graph p2 = parse_edge_list("0 1\n1 2");
    CHECK(p2.vertex_count() == 3);
    CHECK(p2.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

    CHECK_THROWS_AS(parse_edge_list("0 0"), ParseError);
}

TEST_CASE("parse_edge_list headers, comments, dedup") {
    Graph g = parse_edge_list("# a comment\nn 4\n\n0 1\n1 0\n");
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 1);

    CHECK_THROWS_AS(parse_edge_list("0 x"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0 1 2"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("-1 0"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("n 2\n0 5"), ParseError);

    try {
        parse_edge_list("0 1\nbroken");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("graph validation") {
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), ValidationError);
    CHECK_THROWS_AS(Graph(2, {{0, 5}}), ValidationError);
    CHECK_THROWS_AS(Graph(-1, {}), ValidationError);
    CHECK_NOTHROW(Graph(0, {}));
}

TEST_CASE("components_within on the path 0-1-2") {
    Graph p2(3, {{0, 1}, {1, 2}});

    auto blocks = components_within(p2, 0b101); // {0,2}: middle vertex missing
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0] == 0b001);
    CHECK(blocks[1] == 0b100);

    blocks = components_within(p2, 0b111);
    REQUIRE(blocks.size() == 1);
    CHECK(blocks[0] == 0b111);

    CHECK(components_within(p2, 0).empty());
    CHECK_THROWS_AS(components_within(p2, 0b1000), ValidationError);
}

TEST_CASE("same_component") {
    Graph p2(3, {{0, 1}, {1, 2}});
    CHECK_FALSE(same_component(p2, 0b101, 0, 2));
    CHECK(same_component(p2, 0b111, 0, 2));

    Graph k2(2, {{0, 1}});
    CHECK(same_component(k2, 0b11, 0, 1));
    CHECK(same_component(k2, 0b01, 0, 0)); // reflexive

    CHECK_THROWS_AS(same_component(p2, 0b001, 0, 2), ValidationError); // 2 not in subset
}

TEST_CASE("components_within is a partition with connected blocks") {
    SampleStream rng(42, 0);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng.below(5));
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng.below(2)) edges.emplace_back(i, j);
        Graph g(n, edges);
        std::uint64_t s = rng.below(1ULL << n);

        auto blocks = components_within(g, s);
        std::uint64_t seen = 0;
        for (std::uint64_t b : blocks) {
            CHECK(b != 0);
            CHECK((b & seen) == 0); // pairwise disjoint
            seen |= b;
            // each block is internally connected
            int lead = std::countr_zero(b);
            for (std::uint64_t rest = b; rest; rest &= rest - 1)
                CHECK(same_component(g, s, lead, std::countr_zero(rest)));
        }
        CHECK(seen == s); // union is s

        // no edge of G[s] crosses blocks
        for (auto [x, y] : g.edges())
            if (((s >> x) & 1ULL) && ((s >> y) & 1ULL))
                CHECK(same_component(g, s, x, y));
    }
}
