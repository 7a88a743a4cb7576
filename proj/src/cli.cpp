#include "bunkbed/cli.hpp"

#include <fstream>

#include "bunkbed/checks.hpp"
#include "bunkbed/errors.hpp"
#include "bunkbed/json_io.hpp"
#include "bunkbed/rng.hpp"
#include "bunkbed/sweep.hpp"
#include "bunkbed/threshold.hpp"

namespace bunkbed {

using nlohmann::json;

namespace {

json config_echo(const RunConfig& c) {
    return json{{"command", c.command}, {"graph", c.graph_path},
                {"u", c.u},             {"v", c.v},
                {"r_max", c.r_max},     {"trials", c.trials},
                {"seed", c.seed},       {"precision", c.precision},
                {"epsilon", c.epsilon}, {"uniform", c.uniform},
                {"max_vertices", c.max_vertices},
                {"threads", c.threads}, {"edge_cap", c.edge_cap}};
}

Graph require_graph(const RunConfig& c) {
    if (c.graph_path.empty()) throw ValidationError("--graph is required for this command");
    return load_graph_file(c.graph_path);
}

void require_pair(const RunConfig& c) {
    if (c.u < 0 || c.v < 0) throw ValidationError("--u and --v are required for this command");
}

bool uniform_value_given(const RunConfig& c) { return !c.uniform.empty() && c.uniform != "true"; }

json family_json(const BunkbedGraph& bb, VertexId u, VertexId v, const CutFamily& fam) {
    constexpr std::size_t kListCap = 1024;
    json cuts = json::array();
    for (std::size_t i = 0; i < fam.cuts.size() && i < kListCap; ++i) {
        Cut a = fam.cuts[i];
        cuts.push_back(json{{"vertices", cut_to_json(bb, a)},
                            {"support", mask_to_vertices(support_mask(bb, a))},
                            {"in_t", is_in_t(bb, u, v, a)},
                            {"monomial", monomial_text(
                                 Monomial::from_edge_mask(bb, boundary_mask(bb, a)), bb)}});
    }
    json out{{"count", fam.cuts.size()}, {"cuts", cuts}};
    if (fam.cuts.size() > kListCap) out["cuts_truncated"] = true;
    return out;
}

RunResult cmd_bunkbed(const RunConfig& c) {
    BunkbedGraph bb(require_graph(c));
    json result{{"bunkbed", bunkbed_to_json(bb)}};
    if (uniform_value_given(c))
        result["assignment"] = assignment_to_json(bb, uniform_assignment(bb, parse_rat(c.uniform)));
    return RunResult{0, result,
                     "bunkbed: " + std::to_string(bb.vertex_count()) + " vertices, " +
                         std::to_string(bb.edge_count()) + " edges"};
}

RunResult cmd_cuts(const RunConfig& c) {
    BunkbedGraph bb(require_graph(c));
    require_pair(c);
    CutFamily minus = enumerate_family(bb, c.u, c.v, TargetSide::minus_target);
    CutFamily plus = enumerate_family(bb, c.u, c.v, TargetSide::plus_target);
    json result{{"minus_family", family_json(bb, c.u, c.v, minus)},
                {"plus_family", family_json(bb, c.u, c.v, plus)}};
    return RunResult{0, result,
                     "cuts: " + std::to_string(minus.cuts.size()) + " per side"};
}

RunResult cmd_poly(const RunConfig& c) {
    BunkbedGraph bb(require_graph(c));
    require_pair(c);
    Polynomial minus, plus;
    bool truncated = false;
    if (c.r_max_given) {
        ExpansionResult em = nonconnection_expansion(bb, c.u, c.v, TargetSide::minus_target, c.r_max);
        ExpansionResult ep = nonconnection_expansion(bb, c.u, c.v, TargetSide::plus_target, c.r_max);
        truncated = em.truncated || ep.truncated;
        minus = std::move(em.poly);
        plus = std::move(ep.poly);
    } else {
        minus = nonconnection_polynomial(bb, c.u, c.v, TargetSide::minus_target, c.edge_cap);
        plus = nonconnection_polynomial(bb, c.u, c.v, TargetSide::plus_target, c.edge_cap);
    }
    Polynomial f = subtract(plus, minus);
    json result{{"minus", json{{"polynomial", canonical_text(minus, bb)}, {"terms", minus.term_count()}}},
                {"plus", json{{"polynomial", canonical_text(plus, bb)}, {"terms", plus.term_count()}}},
                {"f", json{{"polynomial", canonical_text(f, bb)}, {"terms", f.term_count()}}},
                {"uniform_polynomial", diagonal_restriction(f).text()},
                {"truncated", truncated}};
    json evaluations = json::array();
    if (uniform_value_given(c)) {
        Rat q = parse_rat(c.uniform);
        SymmetricAssignment a = uniform_assignment(bb, q);
        evaluations.push_back(json{{"q", rat_str(q)},
                                   {"minus", rat_str(evaluate(minus, a))},
                                   {"plus", rat_str(evaluate(plus, a))},
                                   {"f", rat_str(evaluate(f, a))}});
    }
    result["evaluations"] = evaluations;
    return RunResult{0, result, "poly: f(q) = " + diagonal_restriction(f).text()};
}

RunResult cmd_verify(const RunConfig& c) {
    BunkbedGraph bb(require_graph(c));
    require_pair(c);
    json claims = json::object();
    bool pass = true;

    VerificationReport c1 = verify_cancellation(bb, c.u, c.v);
    claims["cancellation"] = report_to_json(bb, c1);
    pass = pass && c1.pass;

    VerificationReport c2 = verify_domination(bb, c.u, c.v);
    claims["domination"] = report_to_json(bb, c2);
    pass = pass && c2.pass;

    const std::uint64_t family_size = 1ULL << (2 * bb.base_vertex_count() - 2);
    for (int r = 2; r <= c.r_max && static_cast<std::uint64_t>(r) <= family_size; ++r) {
        std::string key = "higher_order_r" + std::to_string(r);
        try {
            VerificationReport c3 = verify_higher_order(bb, c.u, c.v, r);
            claims[key] = report_to_json(bb, c3);
            pass = pass && c3.pass;
        } catch (const SizeGuardError& e) {
            claims[key] = json{{"skipped", "size_guard"}, {"message", e.what()}};
            break;
        }
    }

    json decomposition;
    try {
        Decomposition d = decompose_f(bb, c.u, c.v, c.edge_cap);
        decomposition = decomposition_to_json(bb, d);
        pass = pass && d.pass;
    } catch (const SizeGuardError& e) {
        decomposition = json{{"skipped", "size_guard"}, {"message", e.what()}};
    }

    json result{{"claims", claims}, {"decomposition", decomposition}, {"pass", pass}};
    return RunResult{pass ? 0 : 1, result, std::string("verify: ") + (pass ? "PASS" : "FAIL")};
}

RunResult cmd_epsilon(const RunConfig& c) {
    BunkbedGraph bb(require_graph(c));
    require_pair(c);
    DiagonalThreshold t = uniform_threshold(bb, c.u, c.v, parse_rat(c.precision));
    bool threshold_ok = t.vacuous || (!t.hard_failure && t.q_star > 0 && certificate_valid(t));

    json sampled;
    bool sampled_ok = true;
    try {
        SampledBound s = sampled_bound(bb, c.u, c.v, parse_rat(c.epsilon), c.trials, c.seed, c.edge_cap);
        sampled = sampled_to_json(bb, s);
        sampled_ok = s.pass;
    } catch (const SizeGuardError& e) {
        sampled = json{{"skipped", "size_guard"}, {"message", e.what()}};
    }

    bool pass = threshold_ok && sampled_ok;
    json result{{"diagonal", threshold_to_json(t)}, {"sampled", sampled}, {"pass", pass}};
    std::string human = "epsilon: ";
    human += t.vacuous ? "vacuous (f = 0)" : (threshold_ok ? "q* = " + rat_str(t.q_star) : "FAIL");
    return RunResult{pass ? 0 : 1, result, human};
}

RunResult cmd_simulate(const RunConfig& c) {
    BunkbedGraph bb(require_graph(c));
    require_pair(c);
    Rat q = uniform_value_given(c) ? parse_rat(c.uniform) : Rat(1, 2);
    SymmetricAssignment a = uniform_assignment(bb, q);
    MonteCarloResult same = monte_carlo(bb, a, BBVertex{c.u, Sign::minus}, BBVertex{c.v, Sign::minus},
                                        c.trials, c.seed);
    MonteCarloResult cross = monte_carlo(bb, a, BBVertex{c.u, Sign::minus}, BBVertex{c.v, Sign::plus},
                                         c.trials, c.seed);
    json result{{"assignment", assignment_to_json(bb, a)},
                {"v_minus", monte_carlo_to_json(same)},
                {"v_plus", monte_carlo_to_json(cross)},
                {"pass", true}};
    return RunResult{0, result,
                     "simulate: P(u-~v-) ~ " + rat_str(same.estimate) + ", P(u-~v+) ~ " +
                         rat_str(cross.estimate)};
}

RunResult cmd_oracle_compare(const RunConfig& c) {
    BunkbedGraph bb(require_graph(c));
    require_pair(c);
    Polynomial minus = nonconnection_polynomial(bb, c.u, c.v, TargetSide::minus_target, c.edge_cap);
    Polynomial plus = nonconnection_polynomial(bb, c.u, c.v, TargetSide::plus_target, c.edge_cap);
    OracleEvaluator minus_oracle(bb, c.u, c.v, c.edge_cap);
    OracleEvaluator plus_oracle(bb, c.u, bb.base_vertex_count() + c.v, c.edge_cap);

    const int ne = bb.base_edge_count();
    const int nv = bb.base_vertex_count();
    bool pass = true;
    json comparisons = json::array();
    std::uint64_t count = c.trials == 0 ? 10 : c.trials;
    for (std::uint64_t k = 0; k < count; ++k) {
        SampleStream rng(c.seed, k);
        std::vector<Rat> h(static_cast<std::size_t>(ne)), v(static_cast<std::size_t>(nv));
        for (Rat& x : h) x = Rat(Int(rng.below(17)), 16);
        for (Rat& x : v) x = Rat(Int(rng.below(17)), 16);
        SymmetricAssignment a(h, v);
        for (TargetSide side : {TargetSide::minus_target, TargetSide::plus_target}) {
            const Polynomial& p = side == TargetSide::minus_target ? minus : plus;
            const OracleEvaluator& oracle = side == TargetSide::minus_target ? minus_oracle : plus_oracle;
            Rat from_poly = evaluate(p, a);
            Rat from_oracle = Rat(1) - oracle.probability(a);
            bool equal = from_poly == from_oracle;
            pass = pass && equal;
            comparisons.push_back(json{{"assignment_index", k},
                                       {"target", side == TargetSide::minus_target ? "v_minus" : "v_plus"},
                                       {"polynomial", rat_str(from_poly)},
                                       {"oracle", rat_str(from_oracle)},
                                       {"equal", equal}});
        }
    }
    json result{{"comparisons", comparisons}, {"assignments", count}, {"pass", pass}};
    return RunResult{pass ? 0 : 1, result,
                     std::string("oracle-compare: ") + (pass ? "PASS" : "FAIL")};
}

RunResult cmd_sweep(const RunConfig& c) {
    SweepOptions opts;
    opts.max_vertices = c.max_vertices;
    opts.r_max = c.r_max;
    opts.precision = c.precision;
    opts.threads = c.threads;
    json result = run_sweep(opts);
    bool pass = result.at("pass").get<bool>();
    return RunResult{pass ? 0 : 1, result,
                     "sweep: " + std::to_string(result.at("instances").get<std::uint64_t>()) +
                         " instances, " + (pass ? "PASS" : "FAIL")};
}

} // namespace

RunResult run_command(const RunConfig& config) {
    RunResult result;
    try {
        if (config.command == "bunkbed") result = cmd_bunkbed(config);
        else if (config.command == "cuts") result = cmd_cuts(config);
        else if (config.command == "poly") result = cmd_poly(config);
        else if (config.command == "verify") result = cmd_verify(config);
        else if (config.command == "epsilon") result = cmd_epsilon(config);
        else if (config.command == "simulate") result = cmd_simulate(config);
        else if (config.command == "oracle-compare") result = cmd_oracle_compare(config);
        else if (config.command == "sweep") result = cmd_sweep(config);
        else throw ValidationError("unknown command '" + config.command + "'");
    } catch (const std::exception& e) {
        const char* kind = dynamic_cast<const SizeGuardError*>(&e)    ? "size_guard"
                           : dynamic_cast<const ParseError*>(&e)      ? "parse"
                           : dynamic_cast<const ValidationError*>(&e) ? "validation"
                                                                      : "internal";
        json report{{"schema", 1},
                    {"command", config.command},
                    {"config", config_echo(config)},
                    {"error", json{{"type", kind}, {"message", e.what()}}}};
        return RunResult{2, report, std::string("error: ") + e.what()};
    }

    json wrapped{{"schema", 1},
                 {"command", config.command},
                 {"config", config_echo(config)},
                 {"pass", result.exit_code == 0},
                 {"result", result.report}};
    result.report = std::move(wrapped);
    return result;
}

} // namespace bunkbed
