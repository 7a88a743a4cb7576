#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>
#include <set>

#include "bunkbed/cuts.hpp"
#include "bunkbed/errors.hpp"
#include "bunkbed/rng.hpp"

using namespace bunkbed;

namespace {
// K2 bunkbed vertex bits: u-=0, v-=1, u+=2, v+=3.
// Edge indices: 0 = u-v-, 1 = u+v+, 2 = u-u+, 3 = v-v+.
const BunkbedGraph kK2{Graph(2, {{0, 1}})};

BunkbedGraph random_bunkbed(SampleStream& rng, int max_n) {
    int n = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n - 1)));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.below(2)) edges.emplace_back(i, j);
    return BunkbedGraph{Graph(n, edges)};
}
} // namespace

TEST_CASE("boundary on K2") {
    CHECK(boundary_mask(kK2, Cut{0b0011}) == 0b1100); // {u-,v-}: both verticals
    CHECK(boundary_mask(kK2, Cut{0b1001}) == 0b1111); // {u-,v+}: everything
    CHECK(boundary_mask(kK2, Cut{0}) == 0);
    CHECK(boundary_mask(kK2, Cut{0b1111}) == 0);

    auto edges = boundary(kK2, Cut{0b0011});
    REQUIRE(edges.size() == 2);
    CHECK(edges[0].cls == BBEdgeClass::vertical);
    CHECK(edges[1].cls == BBEdgeClass::vertical);
}

TEST_CASE("a cut and its complement share the boundary") {
    SampleStream rng(11, 0);
    for (int trial = 0; trial < 300; ++trial) {
        BunkbedGraph bb = random_bunkbed(rng, 5);
        std::uint64_t all = (1ULL << bb.vertex_count()) - 1;
        Cut a{rng.below(all + 1)};
        CHECK(boundary_mask(bb, a) == boundary_mask(bb, Cut{all & ~a.members}));
    }
}

TEST_CASE("height and support") {
    CHECK(height(kK2, Cut{0b1001}, 0) == 1);
    CHECK(height(kK2, Cut{0b1001}, 1) == 1);
    CHECK(height(kK2, Cut{0b0101}, 0) == 2);
    CHECK(height(kK2, Cut{0}, 0) == 0);

    CHECK(support_mask(kK2, Cut{0b1001}) == 0b11);
    CHECK(support_mask(kK2, Cut{0b0101}) == 0);
    CHECK(support_mask(kK2, Cut{0b1111}) == 0);
    CHECK(support(kK2, Cut{0b1001}) == std::vector<VertexId>{0, 1});
}

TEST_CASE("support of a collection") {
    std::vector<Cut> single{Cut{0b1001}};
    CHECK(support_of_collection(kK2, single) == 0b11);

    std::vector<Cut> pair{Cut{0b0101}, Cut{0b1001}}; // empty support union {u,v}
    CHECK(support_of_collection(kK2, pair) == 0b11);

    std::vector<Cut> repeated{Cut{0b1001}, Cut{0b1001}, Cut{0b1001}};
    CHECK(support_of_collection(kK2, repeated) == support_mask(kK2, Cut{0b1001}));

    std::vector<Cut> empty;
    CHECK_THROWS_AS(support_of_collection(kK2, empty), ValidationError);
}

TEST_CASE("support is exactly the vertical part of the boundary") {
    SampleStream rng(12, 0);
    for (int trial = 0; trial < 300; ++trial) {
        BunkbedGraph bb = random_bunkbed(rng, 5);
        Cut a{rng.below(1ULL << bb.vertex_count())};
        std::uint64_t bmask = boundary_mask(bb, a);
        std::uint64_t vertical_part = bmask >> (2 * bb.base_edge_count());
        CHECK(support_mask(bb, a) == vertical_part);
    }
}

TEST_CASE("family enumeration on K2") {
    CutFamily minus = enumerate_family(kK2, 0, 1, TargetSide::minus_target);
    REQUIRE(minus.cuts.size() == 4); // 2^(2n-2)
    CHECK(minus.cuts[0].members == 0b0001); // {u-}
    CHECK(minus.cuts[1].members == 0b0101); // {u-,u+}
    CHECK(minus.cuts[2].members == 0b1001); // {u-,v+}
    CHECK(minus.cuts[3].members == 0b1101); // {u-,u+,v+}

    CutFamily plus = enumerate_family(kK2, 0, 1, TargetSide::plus_target);
    REQUIRE(plus.cuts.size() == 4);
    CHECK(plus.cuts[0].members == 0b0001); // {u-}
    CHECK(plus.cuts[1].members == 0b0011); // {u-,v-}
    CHECK(plus.cuts[2].members == 0b0101); // {u-,u+}
    CHECK(plus.cuts[3].members == 0b0111); // {u-,u+,v-}

    CHECK_THROWS_AS(enumerate_family(kK2, 0, 0, TargetSide::minus_target), ValidationError);
    CHECK_THROWS_AS(enumerate_family(kK2, 0, 7, TargetSide::minus_target), ValidationError);
}

TEST_CASE("family sizes and overlap") {
    SampleStream rng(13, 0);
    for (int trial = 0; trial < 20; ++trial) {
        BunkbedGraph bb = random_bunkbed(rng, 5);
        int n = bb.base_vertex_count();
        VertexId u = 0, v = n - 1;
        CutFamily minus = enumerate_family(bb, u, v, TargetSide::minus_target);
        CutFamily plus = enumerate_family(bb, u, v, TargetSide::plus_target);
        CHECK(minus.cuts.size() == (1ULL << (2 * n - 2)));
        CHECK(plus.cuts.size() == (1ULL << (2 * n - 2)));

        std::set<std::uint64_t> ms;
        for (Cut a : minus.cuts) ms.insert(a.members);
        std::size_t overlap = 0;
        for (Cut a : plus.cuts) overlap += ms.count(a.members);
        CHECK(overlap == (1ULL << (2 * n - 3)));

        CHECK(std::is_sorted(minus.cuts.begin(), minus.cuts.end(),
                             [](Cut a, Cut b) { return a.members < b.members; }));
    }
}

TEST_CASE("T membership") {
    CHECK(is_in_t(kK2, 0, 1, Cut{0b1001}));       // supp {u,v}, edge present
    CHECK_FALSE(is_in_t(kK2, 0, 1, Cut{0b0001})); // supp {u} only

    BunkbedGraph p2{Graph(3, {{0, 1}, {1, 2}})};
    // {u-,v-}: support {0,2} has no edge in the path
    CHECK_FALSE(is_in_t(p2, 0, 2, Cut{0b000101}));
    // {u-,w-,v-}: support {0,1,2} connected
    CHECK(is_in_t(p2, 0, 2, Cut{0b000111}));
}

TEST_CASE("cuts in T- fix the layer pattern at u and v") {
    SampleStream rng(14, 0);
    for (int trial = 0; trial < 50; ++trial) {
        BunkbedGraph bb = random_bunkbed(rng, 5);
        int n = bb.base_vertex_count();
        VertexId u = 0, v = n - 1;
        for (Cut a : enumerate_family(bb, u, v, TargetSide::minus_target).cuts) {
            if (!is_in_t(bb, u, v, a)) continue;
            CHECK_FALSE(a.contains(n + u)); // h_u = 1 with u_- in A
            CHECK(a.contains(n + v));       // h_v = 1 with v_- out
        }
    }
}
