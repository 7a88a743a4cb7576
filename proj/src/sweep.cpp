#include "bunkbed/sweep.hpp"

#include <atomic>
#include <exception>
#include <thread>

#include "bunkbed/checks.hpp"
#include "bunkbed/errors.hpp"
#include "bunkbed/json_io.hpp"
#include "bunkbed/threshold.hpp"

namespace bunkbed {

using nlohmann::json;

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn) {
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_bad{count};
    std::vector<std::exception_ptr> errors(count);
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
                std::size_t cur = first_bad.load();
                while (i < cur && !first_bad.compare_exchange_weak(cur, i)) {
                }
            }
        }
    };
    std::vector<std::thread> pool;
    unsigned nthreads = std::min<std::size_t>(threads, count);
    pool.reserve(nthreads);
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    if (first_bad.load() < count) std::rethrow_exception(errors[first_bad.load()]);
}

std::vector<Graph> all_labeled_graphs(int n) {
    if (n < 0 || n > 6) throw ValidationError("labelled-graph enumeration supports 0..6 vertices");
    std::vector<std::pair<VertexId, VertexId>> all_pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) all_pairs.emplace_back(i, j);
    const std::size_t pair_count = all_pairs.size();
    std::vector<Graph> out;
    out.reserve(1ULL << pair_count);
    for (std::uint64_t mask = 0; mask < (1ULL << pair_count); ++mask) {
        std::vector<std::pair<VertexId, VertexId>> edges;
        for (std::size_t k = 0; k < pair_count; ++k)
            if ((mask >> k) & 1ULL) edges.push_back(all_pairs[k]);
        out.emplace_back(n, std::move(edges));
    }
    return out;
}

InstanceSet build_instances(int max_vertices) {
    InstanceSet set;
    for (int n = 2; n <= max_vertices; ++n) {
        std::vector<Graph> graphs = all_labeled_graphs(n);
        for (Graph& g : graphs) {
            int gi = static_cast<int>(set.graphs.size());
            for (VertexId u = 0; u < n; ++u)
                for (VertexId v = 0; v < n; ++v)
                    if (u != v) set.instances.push_back(InstanceSet::Instance{gi, u, v});
            set.graphs.push_back(std::move(g));
        }
    }
    return set;
}

json run_sweep(const SweepOptions& opts) {
    if (opts.max_vertices < 2) throw ValidationError("sweep needs at least 2 vertices");
    InstanceSet set = build_instances(opts.max_vertices);
    const Rat precision = parse_rat(opts.precision);

    struct Row {
        bool cancellation = false;
        bool domination = false;
        std::vector<std::pair<int, bool>> higher; // (r, pass)
        int decompose = -1; // -1 skipped
        int threshold = -1; // -1 not applicable (disconnected)
        json failure;       // null unless something failed
    };
    std::vector<Row> rows(set.instances.size());

    std::vector<BunkbedGraph> bunkbeds;
    bunkbeds.reserve(set.graphs.size());
    for (const Graph& g : set.graphs) bunkbeds.emplace_back(g);

    // instances of one graph are contiguous; iterate graph-major so the
    // per-graph diagonal tables are built once and shared across its pairs
    std::vector<std::pair<std::size_t, std::size_t>> ranges(set.graphs.size(), {0, 0});
    for (std::size_t i = 0; i < set.instances.size(); ++i) {
        auto& r = ranges[static_cast<std::size_t>(set.instances[i].graph_index)];
        if (r.second == 0) r.first = i;
        r.second = i + 1;
    }

    parallel_for(set.graphs.size(), opts.threads, [&](std::size_t gi) {
        const BunkbedGraph& bb = bunkbeds[gi];
        DiagonalEngine engine(bb);
        for (std::size_t i = ranges[gi].first; i < ranges[gi].second; ++i) {
        const auto& inst = set.instances[i];
        Row& row = rows[i];
        json fails = json::array();

        VerificationReport c1 = verify_cancellation(bb, inst.u, inst.v, false);
        row.cancellation = c1.pass;
        if (!c1.pass) fails.push_back(json{{"check", "cancellation"}});

        VerificationReport c2 = verify_domination(bb, inst.u, inst.v, false);
        row.domination = c2.pass;
        if (!c2.pass) fails.push_back(json{{"check", "domination"}});

        const std::uint64_t family_size = 1ULL << (2 * bb.base_vertex_count() - 2);
        for (int r = 2; r <= opts.r_max; ++r) {
            if (static_cast<std::uint64_t>(r) > family_size) break;
            try {
                VerificationReport c3 = verify_higher_order(bb, inst.u, inst.v, r, false);
                row.higher.emplace_back(r, c3.pass);
                if (!c3.pass) fails.push_back(json{{"check", "higher-order"}, {"r", r}});
            } catch (const SizeGuardError&) {
                break; // larger r only gets bigger; checks that ran still count
            }
        }

        if (bb.edge_count() <= opts.decompose_edge_cap) {
            Decomposition d = decompose_f(bb, inst.u, inst.v, opts.decompose_edge_cap);
            row.decompose = d.pass ? 1 : 0;
            if (!d.pass) fails.push_back(json{{"check", "decompose"}});
        }

        if (same_component(bb.base(), bb.base().all_vertices_mask(), inst.u, inst.v)) {
            DiagonalThreshold t = uniform_threshold(engine, bb, inst.u, inst.v, precision);
            bool ok = !t.hard_failure && !t.vacuous && t.q_star > 0 && certificate_valid(t);
            row.threshold = ok ? 1 : 0;
            if (!ok) fails.push_back(json{{"check", "threshold"}});
        }

        if (!fails.empty())
            row.failure = json{{"graph", graph_to_json(bb.base())},
                               {"u", inst.u},
                               {"v", inst.v},
                               {"failed", fails}};
        }
    });

    json checks = json::object();
    auto bump = [&checks](const std::string& name, bool pass) {
        if (!checks.contains(name)) checks[name] = json{{"instances", 0}, {"passed", 0}};
        checks[name]["instances"] = checks[name]["instances"].get<std::uint64_t>() + 1;
        if (pass) checks[name]["passed"] = checks[name]["passed"].get<std::uint64_t>() + 1;
    };

    json failures = json::array();
    bool all_pass = true;
    for (const Row& row : rows) {
        bump("cancellation", row.cancellation);
        bump("domination", row.domination);
        all_pass = all_pass && row.cancellation && row.domination;
        for (auto [r, pass] : row.higher) {
            bump("higher-order r=" + std::to_string(r), pass);
            all_pass = all_pass && pass;
        }
        if (row.decompose >= 0) {
            bump("decompose", row.decompose == 1);
            all_pass = all_pass && row.decompose == 1;
        }
        if (row.threshold >= 0) {
            bump("threshold", row.threshold == 1);
            all_pass = all_pass && row.threshold == 1;
        }
        if (!row.failure.is_null() && failures.size() < 50) failures.push_back(row.failure);
    }

    return json{{"graphs", set.graphs.size()},
                {"instances", set.instances.size()},
                {"max_vertices", opts.max_vertices},
                {"r_max", opts.r_max},
                {"checks", checks},
                {"failures", failures},
                {"pass", all_pass}};
}

} // namespace bunkbed
