#ifndef BUNKBED_BUNKBED_GRAPH_HPP
#define BUNKBED_BUNKBED_GRAPH_HPP

#include <string>
#include <vector>

#include "bunkbed/graph.hpp"
#include "bunkbed/rational.hpp"

namespace bunkbed {

enum class Sign { minus, plus };

// One of the two copies of a base vertex.
struct BBVertex {
    VertexId base = 0;
    Sign sign = Sign::minus;

    bool operator==(const BBVertex&) const = default;
};

enum class BBEdgeClass { minus_horizontal, plus_horizontal, vertical };

// Variables of the closure polynomials. The two horizontal copies of a base
// edge share one H variable (that is the symmetry constraint, enforced
// structurally); every vertical edge has its own V variable.
struct VariableId {
    enum class Kind { edge, vertex };
    Kind kind = Kind::edge;
    int index = 0; // edge index into Graph::edges(), or base vertex id

    bool operator==(const VariableId&) const = default;
};

struct BBEdge {
    // endpoints as bunkbed vertex indices: x_- = x, x_+ = n + x
    int a = 0;
    int b = 0;
    BBEdgeClass cls = BBEdgeClass::vertical;

    bool operator==(const BBEdge&) const = default;
};

// The graph G x K2: two copies of G plus a vertical edge per vertex.
// Vertex order is fixed: all minus vertices in base order, then all plus
// vertices. Edge order is fixed: minus copies of the base edges (in base
// edge order), then plus copies, then verticals (in base vertex order).
// Both orders are load-bearing: cut bitmasks, boundary bitmasks and monomial
// packing all index into them.
class BunkbedGraph {
public:
    BunkbedGraph() = default;
    explicit BunkbedGraph(Graph base);

    const Graph& base() const { return base_; }
    int base_vertex_count() const { return base_.vertex_count(); }
    int base_edge_count() const { return base_.edge_count(); }

    int vertex_count() const { return 2 * base_.vertex_count(); }
    int edge_count() const { return static_cast<int>(edges_.size()); } // 2|E| + n
    const std::vector<BBEdge>& edges() const { return edges_; }

    int variable_count() const { return base_.edge_count() + base_.vertex_count(); }

    int vertex_index(BBVertex v) const;
    BBVertex vertex_at(int index) const;
    std::vector<BBVertex> vertices() const;

    std::string vertex_name(int index) const;      // "3-" / "3+"
    std::string variable_name(VariableId w) const; // "H(0,1)" / "V(3)"

    // Variable of edge i in the fixed edge order.
    VariableId variable_of_edge_index(int edge_index) const;

private:
    Graph base_;
    std::vector<BBEdge> edges_;
};

BunkbedGraph build_bunkbed(const Graph& g);

// Validates e is an edge of bb, then maps it to its variable.
VariableId variable_of_edge(const BunkbedGraph& bb, const BBEdge& e);

// q-values (closure probabilities) for every variable, exact rationals in [0,1].
class SymmetricAssignment {
public:
    SymmetricAssignment() = default;
    SymmetricAssignment(std::vector<Rat> edge_values, std::vector<Rat> vertex_values);

    const Rat& value(VariableId w) const;
    int edge_variable_count() const { return static_cast<int>(h_.size()); }
    int vertex_variable_count() const { return static_cast<int>(v_.size()); }
    const std::vector<Rat>& edge_values() const { return h_; }
    const std::vector<Rat>& vertex_values() const { return v_; }

private:
    std::vector<Rat> h_;
    std::vector<Rat> v_;
};

SymmetricAssignment uniform_assignment(const BunkbedGraph& bb, const Rat& q);

} // namespace bunkbed

#endif
