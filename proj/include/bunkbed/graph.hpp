#ifndef BUNKBED_GRAPH_HPP
#define BUNKBED_GRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace bunkbed {

using VertexId = int;

// Finite simple graph on vertices 0..n-1. Immutable after construction;
// vertex subsets are bitmasks, so n is capped at 32 (the doubled bunkbed
// vertex set must still fit in 64 bits).
class Graph {
public:
    static constexpr int kMaxVertices = 32;

    Graph() = default;
    // Validates: no self-loops, endpoints in range. Edges are deduplicated
    // and stored sorted as (min,max) pairs.
    Graph(int vertex_count, std::vector<std::pair<VertexId, VertexId>> edge_list);

    int vertex_count() const { return n_; }
    const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool has_edge(VertexId x, VertexId y) const;
    // neighbours of x as a bitmask
    std::uint64_t adjacency_mask(VertexId x) const { return adj_[static_cast<std::size_t>(x)]; }
    std::uint64_t all_vertices_mask() const { return n_ == 0 ? 0 : (n_ == 64 ? ~0ULL : (1ULL << n_) - 1); }

    // index of edge {x,y} in the sorted edge list, or -1
    int edge_index(VertexId x, VertexId y) const;

    void check_vertex(VertexId x) const;

private:
    int n_ = 0;
    std::vector<std::pair<VertexId, VertexId>> edges_;
    std::vector<std::uint64_t> adj_;
};

// Line-oriented edge list: "x y" per edge, '#' comments and blank lines
// ignored, optional "n <count>" header to declare isolated vertices.
Graph parse_edge_list(const std::string& text);

Graph load_graph_file(const std::string& path);

// Connected components of the induced subgraph G[s], s a vertex bitmask.
// Blocks are returned as bitmasks, sorted by their lowest vertex.
std::vector<std::uint64_t> components_within(const Graph& g, std::uint64_t s);

// True iff a and b lie in the same component of G[s]. Both must be in s.
bool same_component(const Graph& g, std::uint64_t s, VertexId a, VertexId b);

// Internal fast path: no validation, a must be in s.
std::uint64_t component_of(const Graph& g, std::uint64_t s, VertexId a);

std::uint64_t vertex_set_to_mask(const Graph& g, const std::vector<VertexId>& vs);
std::vector<VertexId> mask_to_vertices(std::uint64_t mask);

} // namespace bunkbed

#endif
