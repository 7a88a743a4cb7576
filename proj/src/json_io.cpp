#include "bunkbed/json_io.hpp"

#include "bunkbed/errors.hpp"

namespace bunkbed {

using nlohmann::json;

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (auto [x, y] : g.edges()) edges.push_back(json::array({x, y}));
    return json{{"n", g.vertex_count()}, {"edges", edges}};
}

json bunkbed_to_json(const BunkbedGraph& bb) {
    json vertices = json::array();
    for (int i = 0; i < bb.vertex_count(); ++i) vertices.push_back(bb.vertex_name(i));
    json edges = json::array();
    for (int i = 0; i < bb.edge_count(); ++i) {
        const BBEdge& e = bb.edges()[static_cast<std::size_t>(i)];
        const char* cls = e.cls == BBEdgeClass::minus_horizontal ? "minus_horizontal"
                          : e.cls == BBEdgeClass::plus_horizontal ? "plus_horizontal"
                                                                  : "vertical";
        edges.push_back(json{{"a", bb.vertex_name(e.a)},
                             {"b", bb.vertex_name(e.b)},
                             {"class", cls},
                             {"variable", bb.variable_name(bb.variable_of_edge_index(i))}});
    }
    json variables = json::array();
    for (int i = 0; i < bb.base_edge_count(); ++i)
        variables.push_back(bb.variable_name(VariableId{VariableId::Kind::edge, i}));
    for (int x = 0; x < bb.base_vertex_count(); ++x)
        variables.push_back(bb.variable_name(VariableId{VariableId::Kind::vertex, x}));
    return json{{"base", graph_to_json(bb.base())},
                {"vertices", vertices},
                {"edges", edges},
                {"variables", variables}};
}

json assignment_to_json(const BunkbedGraph& bb, const SymmetricAssignment& a) {
    json out = json::object();
    for (int i = 0; i < bb.base_edge_count(); ++i) {
        VariableId w{VariableId::Kind::edge, i};
        out[bb.variable_name(w)] = rat_str(a.value(w));
    }
    for (int x = 0; x < bb.base_vertex_count(); ++x) {
        VariableId w{VariableId::Kind::vertex, x};
        out[bb.variable_name(w)] = rat_str(a.value(w));
    }
    return out;
}

SymmetricAssignment assignment_from_json(const BunkbedGraph& bb, const json& j) {
    std::vector<Rat> h(static_cast<std::size_t>(bb.base_edge_count()));
    std::vector<Rat> v(static_cast<std::size_t>(bb.base_vertex_count()));
    for (int i = 0; i < bb.base_edge_count(); ++i) {
        std::string key = bb.variable_name(VariableId{VariableId::Kind::edge, i});
        if (!j.contains(key)) throw ValidationError("assignment is missing variable " + key);
        h[static_cast<std::size_t>(i)] = parse_rat(j.at(key).get<std::string>());
    }
    for (int x = 0; x < bb.base_vertex_count(); ++x) {
        std::string key = bb.variable_name(VariableId{VariableId::Kind::vertex, x});
        if (!j.contains(key)) throw ValidationError("assignment is missing variable " + key);
        v[static_cast<std::size_t>(x)] = parse_rat(j.at(key).get<std::string>());
    }
    return SymmetricAssignment(std::move(h), std::move(v));
}

json cut_to_json(const BunkbedGraph& bb, Cut a) {
    json out = json::array();
    for (int i = 0; i < bb.vertex_count(); ++i)
        if (a.contains(i)) out.push_back(bb.vertex_name(i));
    return out;
}

json report_to_json(const BunkbedGraph& bb, const VerificationReport& rep) {
    return json{{"check", rep.check},
                {"graph", graph_to_json(bb.base())},
                {"u", rep.u},
                {"v", rep.v},
                {"pass", rep.pass},
                {"details", rep.details},
                {"witnesses", rep.witnesses},
                {"counterexamples", rep.counterexamples}};
}

json decomposition_to_json(const BunkbedGraph& bb, const Decomposition& d) {
    json leaders = json::array();
    for (const DecompositionEntry& e : d.leaders) {
        leaders.push_back(json{{"cut", cut_to_json(bb, e.leader)},
                               {"monomial", monomial_text(e.monomial, bb)},
                               {"g", canonical_text(e.g, bb)},
                               {"g_terms", e.g.term_count()},
                               {"g_constant_term_zero", e.g.coefficient(Monomial{}) == 0}});
    }
    json out{{"pass", d.pass},
             {"leaders", leaders},
             {"residual", canonical_text(d.residual, bb)},
             {"reconstruction_ok", d.reconstruction_ok},
             {"f_terms", d.f.term_count()}};
    if (d.f.term_count() <= 500)
        out["f"] = canonical_text(d.f, bb);
    else
        out["f_text_omitted"] = true;
    return out;
}

json threshold_to_json(const DiagonalThreshold& t) {
    json cert = json::array();
    for (const SignSample& s : t.certificate)
        cert.push_back(json{{"q", rat_str(s.point)}, {"sign", s.sign}});
    json out{{"method", "diagonal_sign_counting"},
             {"vacuous", t.vacuous},
             {"hard_failure", t.hard_failure},
             {"precision", rat_str(t.precision)},
             {"f_diagonal", t.f_diagonal.text()},
             {"unit_interval_root_free", t.unit_interval_root_free},
             {"certificate", cert}};
    if (!t.vacuous && !t.hard_failure) out["q_star"] = rat_str(t.q_star);
    if (!t.note.empty()) out["note"] = t.note;
    return out;
}

json sampled_to_json(const BunkbedGraph& bb, const SampledBound& s) {
    json violations = json::array();
    for (const SampleViolation& v : s.violations) {
        json a = json::object();
        for (int i = 0; i < bb.base_edge_count(); ++i)
            a[bb.variable_name(VariableId{VariableId::Kind::edge, i})] =
                rat_str(v.edge_values[static_cast<std::size_t>(i)]);
        for (int x = 0; x < bb.base_vertex_count(); ++x)
            a[bb.variable_name(VariableId{VariableId::Kind::vertex, x})] =
                rat_str(v.vertex_values[static_cast<std::size_t>(x)]);
        violations.push_back(json{{"trial", v.trial}, {"assignment", a}, {"value", rat_str(v.value)}});
    }
    json out{{"method", "box_sampling"},
             {"vacuous", s.vacuous},
             {"pass", s.pass},
             {"bisected", s.bisected},
             {"epsilon_requested", rat_str(s.epsilon_requested)},
             {"epsilon_final", rat_str(s.epsilon_final)},
             {"trials", s.trials},
             {"seed", s.seed},
             {"violations", violations}};
    if (!s.note.empty()) out["note"] = s.note;
    return out;
}

json monte_carlo_to_json(const MonteCarloResult& r) {
    return json{{"estimate", rat_str(r.estimate)},
                {"stderr", r.stderr_est},
                {"successes", r.successes},
                {"samples", r.samples},
                {"seed", r.seed}};
}

} // namespace bunkbed
