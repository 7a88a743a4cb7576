#include "bunkbed/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>

#include "bunkbed/errors.hpp"

namespace bunkbed {

Graph::Graph(int vertex_count, std::vector<std::pair<VertexId, VertexId>> edge_list)
    : n_(vertex_count) {
    if (n_ < 0) throw ValidationError("vertex count must be nonnegative");
    if (n_ > kMaxVertices)
        throw ValidationError("vertex count " + std::to_string(n_) + " exceeds supported maximum " +
                              std::to_string(kMaxVertices));
    for (auto& [x, y] : edge_list) {
        if (x == y) throw ValidationError("self-loop at vertex " + std::to_string(x));
        if (x < 0 || x >= n_ || y < 0 || y >= n_)
            throw ValidationError("edge {" + std::to_string(x) + "," + std::to_string(y) +
                                  "} has an endpoint outside [0," + std::to_string(n_) + ")");
        if (x > y) std::swap(x, y);
    }
    std::sort(edge_list.begin(), edge_list.end());
    edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
    edges_ = std::move(edge_list);
    adj_.assign(static_cast<std::size_t>(n_), 0);
    for (auto [x, y] : edges_) {
        adj_[static_cast<std::size_t>(x)] |= 1ULL << y;
        adj_[static_cast<std::size_t>(y)] |= 1ULL << x;
    }
}

bool Graph::has_edge(VertexId x, VertexId y) const {
    check_vertex(x);
    check_vertex(y);
    return (adj_[static_cast<std::size_t>(x)] >> y) & 1ULL;
}

int Graph::edge_index(VertexId x, VertexId y) const {
    if (x > y) std::swap(x, y);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(x, y));
    if (it == edges_.end() || *it != std::make_pair(x, y)) return -1;
    return static_cast<int>(it - edges_.begin());
}

void Graph::check_vertex(VertexId x) const {
    if (x < 0 || x >= n_)
        throw ValidationError("vertex " + std::to_string(x) + " out of range [0," + std::to_string(n_) + ")");
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int declared = -1;
    int max_label = -1;
    std::vector<std::pair<VertexId, VertexId>> edges;
    while (std::getline(in, line)) {
        ++line_no;
        std::string::size_type first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        std::string tok;
        ls >> tok;
        if (tok == "n") {
            long count = -1;
            if (!(ls >> count) || count < 0)
                throw ParseError("line " + std::to_string(line_no) + ": bad vertex-count header");
            std::string extra;
            if (ls >> extra)
                throw ParseError("line " + std::to_string(line_no) + ": trailing tokens after header");
            declared = std::max(declared, static_cast<int>(count));
            continue;
        }
        long x, y;
        std::istringstream es(line);
        std::string extra;
        if (!(es >> x >> y))
            throw ParseError("line " + std::to_string(line_no) + ": expected 'x y'");
        if (es >> extra)
            throw ParseError("line " + std::to_string(line_no) + ": trailing tokens after edge");
        if (x < 0 || y < 0)
            throw ParseError("line " + std::to_string(line_no) + ": negative vertex label");
        if (x == y)
            throw ParseError("line " + std::to_string(line_no) + ": self-loop at vertex " + std::to_string(x));
        edges.emplace_back(static_cast<VertexId>(x), static_cast<VertexId>(y));
        max_label = std::max(max_label, static_cast<int>(std::max(x, y)));
    }
    int n = std::max(declared, max_label + 1);
    if (declared >= 0 && max_label >= declared)
        throw ParseError("header declares " + std::to_string(declared) + " vertices but label " +
                         std::to_string(max_label) + " appears");
    return Graph(n, std::move(edges));
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open graph file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_edge_list(ss.str());
}

std::uint64_t component_of(const Graph& g, std::uint64_t s, VertexId a) {
    std::uint64_t reach = 1ULL << a;
    for (;;) {
        std::uint64_t frontier = reach;
        std::uint64_t grown = reach;
        while (frontier) {
            int x = std::countr_zero(frontier);
            frontier &= frontier - 1;
            grown |= g.adjacency_mask(x) & s;
        }
        if (grown == reach) return reach;
        reach = grown;
    }
}

std::vector<std::uint64_t> components_within(const Graph& g, std::uint64_t s) {
    if (s & ~g.all_vertices_mask()) throw ValidationError("vertex subset contains out-of-range vertices");
    std::vector<std::uint64_t> blocks;
    std::uint64_t left = s;
    while (left) {
        int x = std::countr_zero(left);
        std::uint64_t block = component_of(g, s, x);
        blocks.push_back(block);
        left &= ~block;
    }
    return blocks;
}

bool same_component(const Graph& g, std::uint64_t s, VertexId a, VertexId b) {
    g.check_vertex(a);
    g.check_vertex(b);
    if (!((s >> a) & 1ULL)) throw ValidationError("vertex " + std::to_string(a) + " not in subset");
    if (!((s >> b) & 1ULL)) throw ValidationError("vertex " + std::to_string(b) + " not in subset");
    return (component_of(g, s, a) >> b) & 1ULL;
}

std::uint64_t vertex_set_to_mask(const Graph& g, const std::vector<VertexId>& vs) {
    std::uint64_t m = 0;
    for (VertexId v : vs) {
        g.check_vertex(v);
        m |= 1ULL << v;
    }
    return m;
}

std::vector<VertexId> mask_to_vertices(std::uint64_t mask) {
    std::vector<VertexId> out;
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

} // namespace bunkbed
