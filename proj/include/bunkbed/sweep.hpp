#ifndef BUNKBED_SWEEP_HPP
#define BUNKBED_SWEEP_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include <json.hpp>

#include "bunkbed/graph.hpp"
#include "bunkbed/rational.hpp"

namespace bunkbed {

// Runs fn(0..count-1), possibly on several threads. Callers must write
// results into per-index slots so the output is identical for any thread
// count. The first exception (by index) is rethrown.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn);

// All graphs on exactly n labelled vertices, one per edge subset, in
// ascending edge-subset order (edge bit order: (0,1),(0,2),(1,2),(0,3),...).
std::vector<Graph> all_labeled_graphs(int n);

// Instance = (graph, ordered pair u != v). Graphs are enumerated for every
// vertex count in [2, max_vertices]; a graph with an isolated top vertex is
// a genuinely different instance from its smaller twin because the bunkbed
// adds a vertical edge per vertex.
struct InstanceSet {
    struct Instance {
        int graph_index;
        VertexId u;
        VertexId v;
    };
    std::vector<Graph> graphs;
    std::vector<Instance> instances;
};

InstanceSet build_instances(int max_vertices);

struct SweepOptions {
    int max_vertices = 5;
    int r_max = 2;              // higher-order checks for r = 2..r_max
    int decompose_edge_cap = 16; // decompose when 2|E|+n fits
    std::string precision = "1/1024";
    unsigned threads = 1;
};

// Aggregate run of every check over every instance; the acceptance suite
// and the CLI sweep command share this.
nlohmann::json run_sweep(const SweepOptions& opts);

} // namespace bunkbed

#endif
