#ifndef BUNKBED_THRESHOLD_HPP
#define BUNKBED_THRESHOLD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "bunkbed/bunkbed_graph.hpp"
#include "bunkbed/percolation.hpp"
#include "bunkbed/poly.hpp"

namespace bunkbed {

struct SignSample {
    Rat point;
    int sign = 0; // sign of the diagonal f at the point
};

// Certified positivity radius of f on the diagonal: f(q) > 0 for all
// q in (0, q_star]. Root counts come from exact sign-variation counting
// (Descartes on the unit interval, Sturm chains when that is inconclusive),
// so the radius is a proof, not a sample.
struct DiagonalThreshold {
    bool vacuous = false;      // f identically zero (u, v in different components)
    bool hard_failure = false; // positivity near zero refuted; implementation bug signal
    Rat q_star;
    Rat precision;
    UniPoly f_diagonal;
    std::vector<SignSample> certificate; // exact sign evaluations at the probe points
    bool unit_interval_root_free = false;
    std::string note;
};

DiagonalThreshold uniform_threshold(const BunkbedGraph& bb, VertexId u, VertexId v, const Rat& precision);

// Same computation with a caller-owned engine, so one per-graph table serves
// every endpoint pair of a sweep.
DiagonalThreshold uniform_threshold(const DiagonalEngine& engine, const BunkbedGraph& bb, VertexId u,
                                    VertexId v, const Rat& precision);

// Re-evaluates every certified sign and checks f(q_star) > 0.
bool certificate_valid(const DiagonalThreshold& t);

struct SampleViolation {
    std::uint64_t trial = 0;
    std::vector<Rat> edge_values;
    std::vector<Rat> vertex_values;
    Rat value;
};

// Evidence that f stays positive on the box (0, epsilon]^vars: every trial
// draws each variable uniformly from {k*epsilon/64 : k = 1..64} and f is
// evaluated exactly. A violation halves epsilon and retries.
struct SampledBound {
    bool vacuous = false;
    bool pass = false;
    bool bisected = false;
    Rat epsilon_requested;
    Rat epsilon_final;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<SampleViolation> violations; // kept from failing attempts, verbatim
    std::string note;
};

SampledBound sampled_bound(const BunkbedGraph& bb, VertexId u, VertexId v, const Rat& epsilon,
                           std::uint64_t trials, std::uint64_t seed, int edge_cap = kDefaultEdgeCap);

// Core sampler on an explicit polynomial; lets tests exercise the violation
// and bisection paths with synthetic inputs.
SampledBound sampled_bound_on_polynomial(const Polynomial& f, int edge_vars, int vertex_vars,
                                         const Rat& epsilon, std::uint64_t trials, std::uint64_t seed);

} // namespace bunkbed

#endif
