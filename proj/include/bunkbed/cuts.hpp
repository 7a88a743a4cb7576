#ifndef BUNKBED_CUTS_HPP
#define BUNKBED_CUTS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "bunkbed/bunkbed_graph.hpp"

namespace bunkbed {

// A vertex subset of the bunkbed graph, as a bitmask over the fixed vertex
// order (minus block, then plus block).
struct Cut {
    std::uint64_t members = 0;

    bool operator==(const Cut&) const = default;
    bool contains(int bb_vertex_index) const { return (members >> bb_vertex_index) & 1ULL; }
};

enum class TargetSide { minus_target, plus_target };

// All cuts containing u_- and excluding the target copy of v. The target is
// v_- for minus_target, v_+ for plus_target; the other copy of v is free.
struct CutFamily {
    TargetSide side = TargetSide::minus_target;
    VertexId u = 0;
    VertexId v = 0;
    std::vector<Cut> cuts; // ascending bitmask order
};

// edges of bb with exactly one endpoint in the cut, as a bitmask over the
// fixed edge order
std::uint64_t boundary_mask(const BunkbedGraph& bb, Cut a);
std::vector<BBEdge> boundary(const BunkbedGraph& bb, Cut a);

// |{x_-, x_+} ∩ A|
int height(const BunkbedGraph& bb, Cut a, VertexId x);

// base vertices with height exactly 1, i.e. the cut differs between the two
// layers there; as a bitmask this is minus-block XOR plus-block
std::uint64_t support_mask(const BunkbedGraph& bb, Cut a);
std::vector<VertexId> support(const BunkbedGraph& bb, Cut a);

// union of the supports of a nonempty collection
std::uint64_t support_of_collection(const BunkbedGraph& bb, std::span<const Cut> cuts);

CutFamily enumerate_family(const BunkbedGraph& bb, VertexId u, VertexId v, TargetSide side);

// true iff u and v both have height 1 and lie in the same component of the
// base graph restricted to the support
bool is_in_t(const BunkbedGraph& bb, VertexId u, VertexId v, Cut a);

// bunkbed vertex index of the excluded target copy
int target_vertex_index(const BunkbedGraph& bb, VertexId v, TargetSide side);

} // namespace bunkbed

#endif
