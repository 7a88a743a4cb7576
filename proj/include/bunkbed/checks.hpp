#ifndef BUNKBED_CHECKS_HPP
#define BUNKBED_CHECKS_HPP

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "bunkbed/bunkbed_graph.hpp"
#include "bunkbed/cuts.hpp"
#include "bunkbed/percolation.hpp"
#include "bunkbed/poly.hpp"

namespace bunkbed {

// Structured pass/fail evidence for one check on one (graph, u, v) instance.
struct VerificationReport {
    std::string check;
    int u = 0;
    int v = 0;
    bool pass = false;
    nlohmann::json details = nlohmann::json::object();
    nlohmann::json witnesses = nlohmann::json::array();
    nlohmann::json counterexamples = nlohmann::json::array();
};

// The measure-preserving partner of a cut a in S+ \ T+: if v is not in the
// support, a itself; otherwise a with the two layers swapped on the support
// component of v. The image lies in S- \ T-, has the same support and the
// same event monomial.
Cut cancellation_partner(const BunkbedGraph& bb, VertexId u, VertexId v, Cut a);

// Checks that the partner map is a monomial-preserving bijection
// S+ \ T+  ->  S- \ T-, and that the two first-order sums outside T cancel
// to the exact zero polynomial.
VerificationReport verify_cancellation(const BunkbedGraph& bb, VertexId u, VertexId v,
                                       bool collect_witnesses = true);

// For a in T-: the all-minus copy of its support, {x_- : x in supp(a)}.
Cut domination_witness(const BunkbedGraph& bb, VertexId u, VertexId v, Cut a);

// Checks that for every A in T- the witness lies in T+, its event monomial
// strictly divides A's, and the strictness is explained by a squared H
// variable on a support path from u to v.
VerificationReport verify_domination(const BunkbedGraph& bb, VertexId u, VertexId v,
                                     bool collect_witnesses = true);

// Swap the two layers on the support component of v, simultaneously in every
// cut of the collection. Requires u and v not connected in the base graph
// restricted to the union of supports. An involution that preserves the
// union-of-boundaries monomial.
std::vector<Cut> flip_target_component(const BunkbedGraph& bb, VertexId u, VertexId v,
                                       std::span<const Cut> cuts);

// Order-r check: the signed difference of event monomials over unordered
// r-subsets of S+ and of S- leaves only monomials strictly divisible by the
// event monomial of some cut in T+. Also re-runs the underlying mechanisms:
// flip-cancellation for collections whose support does not connect u to v,
// and the all-minus support witness for those that do.
VerificationReport verify_higher_order(const BunkbedGraph& bb, VertexId u, VertexId v, int r,
                                       bool collect_witnesses = true);

struct DecompositionEntry {
    Cut leader;
    Monomial monomial;
    Polynomial g; // zero constant term when the decomposition succeeds
};

struct Decomposition {
    bool pass = false;
    std::vector<DecompositionEntry> leaders; // one per cut of T+, cut-mask order
    Polynomial residual;                     // zero iff every term found a home
    Polynomial f;
    bool reconstruction_ok = false; // sum of monomial*(1+g) rebuilt f exactly
};

// Writes f as sum over C in T+ of P(E_C) * (1 + g_C) with every g_C
// vanishing at 0, by greedy assignment of the remaining monomials to strict
// divisors (fewest-variable divisor first, canonical order tiebreak).
Decomposition decompose_f(const BunkbedGraph& bb, VertexId u, VertexId v,
                          int edge_cap = kDefaultEdgeCap);

} // namespace bunkbed

#endif
