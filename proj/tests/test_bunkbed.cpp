#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "bunkbed/bunkbed_graph.hpp"
#include "bunkbed/errors.hpp"
#include "bunkbed/json_io.hpp"
#include "bunkbed/rng.hpp"

using namespace bunkbed;

TEST_CASE("bunkbed of K2") {
    BunkbedGraph bb(Graph(2, {{0, 1}}));
    CHECK(bb.vertex_count() == 4);
    CHECK(bb.edge_count() == 4);
    // fixed edge order: minus copy, plus copy, verticals
    CHECK(bb.edges()[0] == BBEdge{0, 1, BBEdgeClass::minus_horizontal});
    CHECK(bb.edges()[1] == BBEdge{2, 3, BBEdgeClass::plus_horizontal});
    CHECK(bb.edges()[2] == BBEdge{0, 2, BBEdgeClass::vertical});
    CHECK(bb.edges()[3] == BBEdge{1, 3, BBEdgeClass::vertical});
    CHECK(bb.vertex_name(0) == "0-");
    CHECK(bb.vertex_name(3) == "1+");
}

TEST_CASE("smallest bunkbed: one isolated vertex") {
    BunkbedGraph bb(Graph(1, {}));
    CHECK(bb.vertex_count() == 2);
    CHECK(bb.edge_count() == 1);
    CHECK(bb.edges()[0].cls == BBEdgeClass::vertical);
}

TEST_CASE("bunkbed of the path 0-1-2") {
    BunkbedGraph bb(Graph(3, {{0, 1}, {1, 2}}));
    CHECK(bb.vertex_count() == 6);
    CHECK(bb.edge_count() == 7); // 2*2 horizontal + 3 vertical
}

TEST_CASE("variable_of_edge identifies the two horizontal copies") {
    BunkbedGraph bb(Graph(2, {{0, 1}}));
    VariableId minus_copy = variable_of_edge(bb, BBEdge{0, 1, BBEdgeClass::minus_horizontal});
    VariableId plus_copy = variable_of_edge(bb, BBEdge{2, 3, BBEdgeClass::plus_horizontal});
    CHECK(minus_copy == plus_copy);
    CHECK(minus_copy.kind == VariableId::Kind::edge);

    VariableId vert = variable_of_edge(bb, BBEdge{0, 2, BBEdgeClass::vertical});
    CHECK(vert == VariableId{VariableId::Kind::vertex, 0});

    CHECK_THROWS_AS(variable_of_edge(bb, BBEdge{0, 3, BBEdgeClass::minus_horizontal}), ValidationError);
}

TEST_CASE("variable fibers: two edges per H variable, one per V variable") {
    SampleStream rng(7, 0);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + static_cast<int>(rng.below(4));
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng.below(2)) edges.emplace_back(i, j);
        BunkbedGraph bb{Graph(n, edges)};
        CHECK(bb.variable_count() == bb.base_edge_count() + n);

        std::map<std::pair<int, int>, int> fiber; // (kind, index) -> count
        for (int e = 0; e < bb.edge_count(); ++e) {
            VariableId w = bb.variable_of_edge_index(e);
            ++fiber[{static_cast<int>(w.kind), w.index}];
        }
        for (auto& [key, count] : fiber)
            CHECK(count == (key.first == static_cast<int>(VariableId::Kind::edge) ? 2 : 1));
    }
}

TEST_CASE("each layer of the bunkbed is a copy of the base graph") {
    Graph g(4, {{0, 1}, {1, 2}, {0, 3}});
    BunkbedGraph bb(g);
    int minus_edges = 0, plus_edges = 0;
    for (const BBEdge& e : bb.edges()) {
        if (e.cls == BBEdgeClass::minus_horizontal) {
            CHECK(g.has_edge(e.a, e.b));
            ++minus_edges;
        }
        if (e.cls == BBEdgeClass::plus_horizontal) {
            CHECK(g.has_edge(e.a - g.vertex_count(), e.b - g.vertex_count()));
            ++plus_edges;
        }
    }
    CHECK(minus_edges == g.edge_count());
    CHECK(plus_edges == g.edge_count());
}

TEST_CASE("uniform assignment") {
    BunkbedGraph bb(Graph(2, {{0, 1}}));
    SymmetricAssignment a = uniform_assignment(bb, Rat(1, 2));
    CHECK(a.value(VariableId{VariableId::Kind::edge, 0}) == Rat(1, 2));
    CHECK(a.value(VariableId{VariableId::Kind::vertex, 1}) == Rat(1, 2));

    CHECK_NOTHROW(uniform_assignment(bb, Rat(0)));
    CHECK_NOTHROW(uniform_assignment(bb, Rat(1)));
    CHECK_THROWS_AS(uniform_assignment(bb, Rat(3, 2)), ValidationError);
    CHECK_THROWS_AS(uniform_assignment(bb, Rat(-1, 2)), ValidationError);
    CHECK_THROWS_AS(SymmetricAssignment({Rat(2)}, {}), ValidationError);
}

TEST_CASE("assignment JSON round trip") {
    BunkbedGraph bb(Graph(3, {{0, 1}, {1, 2}}));
    std::vector<Rat> h{Rat(1, 3), Rat(2, 7)};
    std::vector<Rat> v{Rat(0), Rat(1), Rat(5, 8)};
    SymmetricAssignment a(h, v);
    SymmetricAssignment back = assignment_from_json(bb, assignment_to_json(bb, a));
    CHECK(back.edge_values() == h);
    CHECK(back.vertex_values() == v);

    nlohmann::json broken = assignment_to_json(bb, a);
    broken.erase("V(0)");
    CHECK_THROWS_AS(assignment_from_json(bb, broken), ValidationError);
}
