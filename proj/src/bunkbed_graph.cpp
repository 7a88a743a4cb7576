#include "bunkbed/bunkbed_graph.hpp"

#include <algorithm>

#include "bunkbed/errors.hpp"

namespace bunkbed {

BunkbedGraph::BunkbedGraph(Graph base) : base_(std::move(base)) {
    const int n = base_.vertex_count();
    edges_.reserve(2 * base_.edges().size() + static_cast<std::size_t>(n));
    for (auto [x, y] : base_.edges())
        edges_.push_back(BBEdge{x, y, BBEdgeClass::minus_horizontal});
    for (auto [x, y] : base_.edges())
        edges_.push_back(BBEdge{n + x, n + y, BBEdgeClass::plus_horizontal});
    for (int x = 0; x < n; ++x)
        edges_.push_back(BBEdge{x, n + x, BBEdgeClass::vertical});
}

BunkbedGraph build_bunkbed(const Graph& g) { return BunkbedGraph(g); }

int BunkbedGraph::vertex_index(BBVertex v) const {
    base_.check_vertex(v.base);
    return v.sign == Sign::minus ? v.base : base_.vertex_count() + v.base;
}

BBVertex BunkbedGraph::vertex_at(int index) const {
    const int n = base_.vertex_count();
    if (index < 0 || index >= 2 * n) throw ValidationError("bunkbed vertex index out of range");
    return index < n ? BBVertex{index, Sign::minus} : BBVertex{index - n, Sign::plus};
}

std::vector<BBVertex> BunkbedGraph::vertices() const {
    std::vector<BBVertex> out;
    out.reserve(static_cast<std::size_t>(vertex_count()));
    for (int i = 0; i < vertex_count(); ++i) out.push_back(vertex_at(i));
    return out;
}

std::string BunkbedGraph::vertex_name(int index) const {
    BBVertex v = vertex_at(index);
    return std::to_string(v.base) + (v.sign == Sign::minus ? "-" : "+");
}

std::string BunkbedGraph::variable_name(VariableId w) const {
    if (w.kind == VariableId::Kind::vertex) return "V(" + std::to_string(w.index) + ")";
    auto [x, y] = base_.edges().at(static_cast<std::size_t>(w.index));
    return "H(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

VariableId BunkbedGraph::variable_of_edge_index(int edge_index) const {
    const int e = base_.edge_count();
    if (edge_index < 0 || edge_index >= edge_count()) throw ValidationError("edge index out of range");
    if (edge_index < e) return VariableId{VariableId::Kind::edge, edge_index};
    if (edge_index < 2 * e) return VariableId{VariableId::Kind::edge, edge_index - e};
    return VariableId{VariableId::Kind::vertex, edge_index - 2 * e};
}

VariableId variable_of_edge(const BunkbedGraph& bb, const BBEdge& e) {
    for (int i = 0; i < bb.edge_count(); ++i) {
        const BBEdge& cand = bb.edges()[static_cast<std::size_t>(i)];
        if (cand == e || (cand.a == e.b && cand.b == e.a && cand.cls == e.cls))
            return bb.variable_of_edge_index(i);
    }
    throw ValidationError("edge is not part of this bunkbed graph");
}

SymmetricAssignment::SymmetricAssignment(std::vector<Rat> edge_values, std::vector<Rat> vertex_values)
    : h_(std::move(edge_values)), v_(std::move(vertex_values)) {
    auto check = [](const Rat& q) {
        if (q < 0 || q > 1) throw ValidationError("q-value " + rat_str(q) + " outside [0,1]");
    };
    for (const Rat& q : h_) check(q);
    for (const Rat& q : v_) check(q);
}

const Rat& SymmetricAssignment::value(VariableId w) const {
    const auto& vec = (w.kind == VariableId::Kind::edge) ? h_ : v_;
    if (w.index < 0 || w.index >= static_cast<int>(vec.size()))
        throw ValidationError("assignment does not cover requested variable");
    return vec[static_cast<std::size_t>(w.index)];
}

SymmetricAssignment uniform_assignment(const BunkbedGraph& bb, const Rat& q) {
    if (q < 0 || q > 1) throw ValidationError("uniform q-value " + rat_str(q) + " outside [0,1]");
    return SymmetricAssignment(std::vector<Rat>(static_cast<std::size_t>(bb.base_edge_count()), q),
                               std::vector<Rat>(static_cast<std::size_t>(bb.base_vertex_count()), q));
}

} // namespace bunkbed
