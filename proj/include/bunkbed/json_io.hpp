#ifndef BUNKBED_JSON_IO_HPP
#define BUNKBED_JSON_IO_HPP

#include <json.hpp>

#include "bunkbed/bunkbed_graph.hpp"
#include "bunkbed/checks.hpp"
#include "bunkbed/cuts.hpp"
#include "bunkbed/percolation.hpp"
#include "bunkbed/threshold.hpp"

namespace bunkbed {

nlohmann::json graph_to_json(const Graph& g);
nlohmann::json bunkbed_to_json(const BunkbedGraph& bb);

// {"H(0,1)": "1/2", ...}
nlohmann::json assignment_to_json(const BunkbedGraph& bb, const SymmetricAssignment& a);
SymmetricAssignment assignment_from_json(const BunkbedGraph& bb, const nlohmann::json& j);

// sorted vertex-name list
nlohmann::json cut_to_json(const BunkbedGraph& bb, Cut a);

nlohmann::json report_to_json(const BunkbedGraph& bb, const VerificationReport& rep);
nlohmann::json decomposition_to_json(const BunkbedGraph& bb, const Decomposition& d);
nlohmann::json threshold_to_json(const DiagonalThreshold& t);
nlohmann::json sampled_to_json(const BunkbedGraph& bb, const SampledBound& s);
nlohmann::json monte_carlo_to_json(const MonteCarloResult& r);

} // namespace bunkbed

#endif
