#include "bunkbed/cuts.hpp"

#include <bit>

#include "bunkbed/errors.hpp"

namespace bunkbed {

std::uint64_t boundary_mask(const BunkbedGraph& bb, Cut a) {
    std::uint64_t out = 0;
    const auto& edges = bb.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        std::uint64_t in_a = ((a.members >> edges[i].a) ^ (a.members >> edges[i].b)) & 1ULL;
        out |= in_a << i;
    }
    return out;
}

std::vector<BBEdge> boundary(const BunkbedGraph& bb, Cut a) {
    std::vector<BBEdge> out;
    std::uint64_t mask = boundary_mask(bb, a);
    while (mask) {
        int i = std::countr_zero(mask);
        mask &= mask - 1;
        out.push_back(bb.edges()[static_cast<std::size_t>(i)]);
    }
    return out;
}

int height(const BunkbedGraph& bb, Cut a, VertexId x) {
    bb.base().check_vertex(x);
    const int n = bb.base_vertex_count();
    return static_cast<int>((a.members >> x) & 1ULL) + static_cast<int>((a.members >> (n + x)) & 1ULL);
}

std::uint64_t support_mask(const BunkbedGraph& bb, Cut a) {
    const int n = bb.base_vertex_count();
    const std::uint64_t low = bb.base().all_vertices_mask();
    return (a.members ^ (a.members >> n)) & low;
}

std::vector<VertexId> support(const BunkbedGraph& bb, Cut a) {
    return mask_to_vertices(support_mask(bb, a));
}

std::uint64_t support_of_collection(const BunkbedGraph& bb, std::span<const Cut> cuts) {
    if (cuts.empty()) throw ValidationError("support of an empty cut collection is undefined");
    std::uint64_t s = 0;
    for (Cut a : cuts) s |= support_mask(bb, a);
    return s;
}

int target_vertex_index(const BunkbedGraph& bb, VertexId v, TargetSide side) {
    bb.base().check_vertex(v);
    return side == TargetSide::minus_target ? v : bb.base_vertex_count() + v;
}

CutFamily enumerate_family(const BunkbedGraph& bb, VertexId u, VertexId v, TargetSide side) {
    bb.base().check_vertex(u);
    bb.base().check_vertex(v);
    if (u == v) throw ValidationError("cut families require u != v");
    const int nn = bb.vertex_count();
    const int free_bits = nn - 2;
    if (free_bits > 22)
        throw SizeGuardError("cut family would have 2^" + std::to_string(free_bits) + " members; refusing");

    const int u_bit = u; // u_-
    const int t_bit = target_vertex_index(bb, v, side);

    std::vector<int> free_positions;
    free_positions.reserve(static_cast<std::size_t>(free_bits));
    for (int i = 0; i < nn; ++i)
        if (i != u_bit && i != t_bit) free_positions.push_back(i);

    CutFamily fam;
    fam.side = side;
    fam.u = u;
    fam.v = v;
    fam.cuts.reserve(1ULL << free_bits);
    // Depositing counter bits into the free positions in ascending position
    // order preserves ascending order of the full masks.
    for (std::uint64_t k = 0; k < (1ULL << free_bits); ++k) {
        std::uint64_t m = 1ULL << u_bit;
        for (int j = 0; j < free_bits; ++j)
            if ((k >> j) & 1ULL) m |= 1ULL << free_positions[static_cast<std::size_t>(j)];
        fam.cuts.push_back(Cut{m});
    }
    return fam;
}

bool is_in_t(const BunkbedGraph& bb, VertexId u, VertexId v, Cut a) {
    std::uint64_t s = support_mask(bb, a);
    if (!((s >> u) & 1ULL) || !((s >> v) & 1ULL)) return false;
    return same_component(bb.base(), s, u, v);
}

} // namespace bunkbed
