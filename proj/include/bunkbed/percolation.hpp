#ifndef BUNKBED_PERCOLATION_HPP
#define BUNKBED_PERCOLATION_HPP

#include <cstdint>
#include <vector>

#include "bunkbed/bunkbed_graph.hpp"
#include "bunkbed/cuts.hpp"
#include "bunkbed/poly.hpp"

namespace bunkbed {

// Caps shared by the exponential-size operations. Every cap can be raised by
// callers that know what they are doing; the defaults keep single runs in
// seconds and memory in the tens of megabytes.
inline constexpr int kDefaultEdgeCap = 22;        // 2^|E(bb)| enumerations
inline constexpr std::uint64_t kExpansionTermCap = 1ULL << 22;

// P(u_- not connected to the target copy of v) as an exact polynomial in the
// closure variables. Computed over closed edge sets: the indicator "this
// closed set separates the endpoints" is Moebius-transformed over the subset
// lattice, which yields exactly the inclusion-exclusion expansion of the cut
// family after the symmetry collapse, without touching the doubly
// exponential list of cut subsets.
Polynomial nonconnection_polynomial(const BunkbedGraph& bb, VertexId u, VertexId v, TargetSide side,
                                    int edge_cap = kDefaultEdgeCap);

struct ExpansionResult {
    Polynomial poly;
    bool truncated = false;
    int r_used = 0;
};

// The same polynomial by literal inclusion-exclusion over unordered
// r-subsets of the cut family, sign (-1)^(r+1), optionally truncated at
// r_max (r_max <= 0 means all sizes). Small families only.
ExpansionResult nonconnection_expansion(const BunkbedGraph& bb, VertexId u, VertexId v, TargetSide side,
                                        int r_max = 0);

// f = P(u_- </-> v_+) - P(u_- </-> v_-); the bunkbed inequality says this is
// nonnegative.
Polynomial f_polynomial(const BunkbedGraph& bb, VertexId u, VertexId v, int edge_cap = kDefaultEdgeCap);

// Brute-force reference: P(s <-> t) by enumerating all 2^|E(bb)| open/closed
// configurations with union-find connectivity. Deliberately shares no code
// with the polynomial route above. The connectivity indicator depends only
// on (bb, s, t), so one evaluator can price many assignments.
class OracleEvaluator {
public:
    OracleEvaluator(const BunkbedGraph& bb, int s_index, int t_index, int edge_cap = kDefaultEdgeCap);

    Rat probability(const SymmetricAssignment& a) const;

private:
    const BunkbedGraph& bb_;
    int m_;
    std::vector<bool> connected_; // indexed by closed-edge mask
};

Rat oracle_probability(const BunkbedGraph& bb, const SymmetricAssignment& a, BBVertex s, BBVertex t,
                       int edge_cap = kDefaultEdgeCap);

struct MonteCarloResult {
    Rat estimate;       // successes / samples
    double stderr_est;  // sqrt(phat(1-phat)/samples)
    std::uint64_t successes = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

// Connection frequency under per-sample counter-based randomness: sample i
// draws identical bits for identical (seed, i), so results are reproducible
// and schedule-independent.
MonteCarloResult monte_carlo(const BunkbedGraph& bb, const SymmetricAssignment& a, BBVertex s, BBVertex t,
                             std::uint64_t samples, std::uint64_t seed);

// Uniform-q restrictions computed directly as univariate polynomials. A
// subset DP counts spanning-connected edge sets for every vertex subset of
// the bunkbed graph, giving P(component of s = W) as a polynomial in q; the
// per-vertex-subset tables depend only on the graph, so one engine serves
// every endpoint pair. Feasible well past the point where the multivariate
// expansion is not.
class DiagonalEngine {
public:
    explicit DiagonalEngine(const BunkbedGraph& bb);

    // P(s not connected to t) on the diagonal, s and t bunkbed vertex indices
    UniPoly nonconnection(int s_index, int t_index) const;
    UniPoly f_diagonal(VertexId u, VertexId v) const;

private:
    const BunkbedGraph& bb_;
    int nn_;
    std::vector<std::uint32_t> adj_;       // bunkbed adjacency masks
    std::vector<std::uint16_t> ecount_;    // edges inside W
    std::vector<std::uint8_t> bcount_;     // |boundary(W)|
    std::vector<std::vector<std::int64_t>> rw_; // per W: polynomial in q of P(open part spans W), scaled; see .cpp
};

UniPoly diagonal_f(const BunkbedGraph& bb, VertexId u, VertexId v);

} // namespace bunkbed

#endif
