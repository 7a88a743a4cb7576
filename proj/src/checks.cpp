#include "bunkbed/checks.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "bunkbed/errors.hpp"

namespace bunkbed {

namespace {

using nlohmann::json;

json cut_names(const BunkbedGraph& bb, Cut a) {
    json out = json::array();
    for (int i = 0; i < bb.vertex_count(); ++i)
        if (a.contains(i)) out.push_back(bb.vertex_name(i));
    return out;
}

void check_pair(const BunkbedGraph& bb, VertexId u, VertexId v) {
    bb.base().check_vertex(u);
    bb.base().check_vertex(v);
    if (u == v) throw ValidationError("u and v must be distinct");
}

// layer swap on the vertices of comp (a base-vertex mask)
Cut flip_cut(Cut a, std::uint64_t comp, int n) {
    std::uint64_t keep = a.members & ~(comp | (comp << n));
    std::uint64_t to_plus = (a.members & comp) << n;
    std::uint64_t to_minus = (a.members >> n) & comp;
    return Cut{keep | to_plus | to_minus};
}

// per-instance lookup tables over all subsets S of the base vertex set
struct SupportTables {
    std::vector<std::uint8_t> uv_connected;    // u,v in S and same component of G[S]
    std::vector<std::uint8_t> whole_connected; // G[S] has a single component
    std::vector<std::uint64_t> comp_v;         // component of v in G[S]; 0 if v not in S

    SupportTables(const BunkbedGraph& bb, VertexId u, VertexId v) {
        const Graph& g = bb.base();
        const std::size_t count = 1ULL << g.vertex_count();
        uv_connected.assign(count, 0);
        whole_connected.assign(count, 0);
        comp_v.assign(count, 0);
        for (std::uint64_t s = 1; s < count; ++s) {
            int low = std::countr_zero(s);
            whole_connected[s] = component_of(g, s, low) == s;
            if ((s >> v) & 1ULL) {
                comp_v[s] = component_of(g, s, v);
                uv_connected[s] = ((s >> u) & 1ULL) && ((comp_v[s] >> u) & 1ULL);
            }
        }
    }
};

bool in_family(const BunkbedGraph& bb, VertexId u, VertexId v, TargetSide side, Cut a) {
    return a.contains(u) && !a.contains(target_vertex_index(bb, v, side));
}

// shortest path from u to v inside G[s]; s must connect them
std::vector<int> bfs_path(const Graph& g, std::uint64_t s, VertexId u, VertexId v) {
    std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<int> queue{u};
    parent[static_cast<std::size_t>(u)] = u;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int x = queue[head];
        if (x == v) break;
        std::uint64_t nb = g.adjacency_mask(x) & s;
        while (nb) {
            int y = std::countr_zero(nb);
            nb &= nb - 1;
            if (parent[static_cast<std::size_t>(y)] < 0) {
                parent[static_cast<std::size_t>(y)] = x;
                queue.push_back(y);
            }
        }
    }
    std::vector<int> path;
    for (int x = v; x != u; x = parent[static_cast<std::size_t>(x)]) path.push_back(x);
    path.push_back(u);
    std::reverse(path.begin(), path.end());
    return path;
}

void for_each_combination(int total, int r, const std::function<void(std::span<const int>)>& fn) {
    if (r > total) return;
    std::vector<int> idx(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
    for (;;) {
        fn(idx);
        int pos = r - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == total - r + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int j = pos + 1; j < r; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

std::uint64_t binomial_guard(int total, int r) {
    long double running = 1.0L;
    for (int i = 1; i <= r; ++i) {
        running = running * (total - i + 1) / i;
        if (running > static_cast<long double>(kExpansionTermCap))
            throw SizeGuardError("C(" + std::to_string(total) + "," + std::to_string(r) +
                                 ") subsets exceed the enumeration cap");
    }
    return static_cast<std::uint64_t>(running);
}

} // namespace

Cut cancellation_partner(const BunkbedGraph& bb, VertexId u, VertexId v, Cut a) {
    check_pair(bb, u, v);
    if (!in_family(bb, u, v, TargetSide::plus_target, a))
        throw ValidationError("cut is not a (u_- , v_+) cut containing u_-");
    if (is_in_t(bb, u, v, a))
        throw ValidationError("cut lies in T+; the partner map is defined outside it");
    std::uint64_t s = support_mask(bb, a);
    if (!((s >> v) & 1ULL)) return a;
    return flip_cut(a, component_of(bb.base(), s, v), bb.base_vertex_count());
}

VerificationReport verify_cancellation(const BunkbedGraph& bb, VertexId u, VertexId v,
                                       bool collect_witnesses) {
    CutFamily fam_plus = enumerate_family(bb, u, v, TargetSide::plus_target);
    CutFamily fam_minus = enumerate_family(bb, u, v, TargetSide::minus_target);
    SupportTables tables(bb, u, v);
    const int n = bb.base_vertex_count();

    VerificationReport rep;
    rep.check = "cancellation";
    rep.u = u;
    rep.v = v;

    auto note_failure = [&rep](json item) {
        if (rep.counterexamples.size() < 100) rep.counterexamples.push_back(std::move(item));
    };

    std::size_t minus_outside_t = 0;
    Polynomial sum_minus;
    for (Cut a : fam_minus.cuts) {
        std::uint64_t s = support_mask(bb, a);
        if (tables.uv_connected[s]) continue;
        ++minus_outside_t;
        sum_minus.add_term(Monomial::from_edge_mask(bb, boundary_mask(bb, a)), 1);
    }

    std::vector<std::uint8_t> seen(1ULL << bb.vertex_count(), 0);
    std::size_t plus_outside_t = 0;
    std::size_t fixed_points = 0;
    Polynomial sum_plus;
    for (Cut a : fam_plus.cuts) {
        std::uint64_t s = support_mask(bb, a);
        if (tables.uv_connected[s]) continue;
        ++plus_outside_t;

        Monomial ma = Monomial::from_edge_mask(bb, boundary_mask(bb, a));
        sum_plus.add_term(ma, 1);

        Cut b = ((s >> v) & 1ULL) ? flip_cut(a, tables.comp_v[s], n) : a;
        if (b == a) ++fixed_points;

        bool image_in_family = in_family(bb, u, v, TargetSide::minus_target, b);
        std::uint64_t sb = support_mask(bb, b);
        bool support_kept = sb == s;
        bool image_outside_t = !tables.uv_connected[sb];
        Monomial mbm = Monomial::from_edge_mask(bb, boundary_mask(bb, b));
        bool mono_kept = mbm == ma;
        Cut back = ((sb >> v) & 1ULL) ? flip_cut(b, tables.comp_v[sb], n) : b;
        bool involutive = back == a;
        bool fresh = !seen[b.members];
        seen[b.members] = 1;

        if (image_in_family && support_kept && image_outside_t && mono_kept && involutive && fresh) {
            if (collect_witnesses)
                rep.witnesses.push_back(json{{"cut", cut_names(bb, a)},
                                             {"image", cut_names(bb, b)},
                                             {"monomial", monomial_text(ma, bb)},
                                             {"checked", "image in family, support and monomial preserved"}});
        } else {
            note_failure(json{{"cut", cut_names(bb, a)},
                              {"image", cut_names(bb, b)},
                              {"image_in_family", image_in_family},
                              {"support_preserved", support_kept},
                              {"image_outside_t", image_outside_t},
                              {"monomial_preserved", mono_kept},
                              {"involutive", involutive},
                              {"image_unseen", fresh}});
        }
    }

    if (plus_outside_t != minus_outside_t)
        note_failure(json{{"reason", "family sizes outside T differ"},
                          {"plus_side", plus_outside_t},
                          {"minus_side", minus_outside_t}});

    Polynomial difference = subtract(sum_plus, sum_minus);
    if (!difference.is_zero())
        note_failure(json{{"reason", "first-order sums outside T do not cancel"},
                          {"difference_terms", difference.term_count()}});

    rep.details = json{{"s_plus_outside_t", plus_outside_t},
                       {"s_minus_outside_t", minus_outside_t},
                       {"t_plus_size", fam_plus.cuts.size() - plus_outside_t},
                       {"t_minus_size", fam_minus.cuts.size() - minus_outside_t},
                       {"fixed_points", fixed_points},
                       {"cancellation_zero", difference.is_zero()}};
    rep.pass = rep.counterexamples.empty();
    return rep;
}

Cut domination_witness(const BunkbedGraph& bb, VertexId u, VertexId v, Cut a) {
    check_pair(bb, u, v);
    if (!in_family(bb, u, v, TargetSide::minus_target, a) || !is_in_t(bb, u, v, a))
        throw ValidationError("domination witness requires a cut in T-");
    return Cut{support_mask(bb, a)};
}

VerificationReport verify_domination(const BunkbedGraph& bb, VertexId u, VertexId v,
                                     bool collect_witnesses) {
    CutFamily fam_minus = enumerate_family(bb, u, v, TargetSide::minus_target);
    SupportTables tables(bb, u, v);
    const Graph& g = bb.base();
    const int n = bb.base_vertex_count();

    VerificationReport rep;
    rep.check = "domination";
    rep.u = u;
    rep.v = v;

    std::unordered_map<std::uint64_t, std::vector<int>> path_cache;
    std::size_t t_minus_size = 0;

    for (Cut a : fam_minus.cuts) {
        std::uint64_t s = support_mask(bb, a);
        if (!tables.uv_connected[s]) continue;
        ++t_minus_size;

        Cut b{s};
        Monomial ma = Monomial::from_edge_mask(bb, boundary_mask(bb, a));
        Monomial mb = Monomial::from_edge_mask(bb, boundary_mask(bb, b));

        bool witness_in_t_plus =
            in_family(bb, u, v, TargetSide::plus_target, b) && tables.uv_connected[support_mask(bb, b)];
        bool strict = strictly_divides(mb, ma);

        auto it = path_cache.find(s);
        if (it == path_cache.end()) it = path_cache.emplace(s, bfs_path(g, s, u, v)).first;
        const std::vector<int>& path = it->second;

        int square_edge = -1;
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            // consecutive layer change minus -> plus along the path
            if (a.contains(path[i]) && a.contains(n + path[i + 1])) {
                int e = g.edge_index(path[i], path[i + 1]);
                if ((ma.h2 >> e) & 1ULL) {
                    square_edge = e;
                    break;
                }
            }
        }

        if (witness_in_t_plus && strict && square_edge >= 0) {
            if (collect_witnesses)
                rep.witnesses.push_back(
                    json{{"cut", cut_names(bb, a)},
                         {"witness", cut_names(bb, b)},
                         {"witness_monomial", monomial_text(mb, bb)},
                         {"monomial", monomial_text(ma, bb)},
                         {"square_variable",
                          bb.variable_name(VariableId{VariableId::Kind::edge, square_edge})},
                         {"checked", "witness in T+, strict division, squared path variable"}});
        } else if (rep.counterexamples.size() < 100) {
            rep.counterexamples.push_back(json{{"cut", cut_names(bb, a)},
                                               {"witness", cut_names(bb, b)},
                                               {"witness_in_t_plus", witness_in_t_plus},
                                               {"strict_division", strict},
                                               {"square_mechanism_found", square_edge >= 0}});
        }
    }

    rep.details = json{{"t_minus_size", t_minus_size}};
    rep.pass = rep.counterexamples.empty();
    return rep;
}

std::vector<Cut> flip_target_component(const BunkbedGraph& bb, VertexId u, VertexId v,
                                       std::span<const Cut> cuts) {
    check_pair(bb, u, v);
    std::uint64_t s = support_of_collection(bb, cuts);
    bool connected = ((s >> u) & 1ULL) && ((s >> v) & 1ULL) && same_component(bb.base(), s, u, v);
    if (connected)
        throw ValidationError("u and v are connected within the collection support; flip undefined");
    std::uint64_t comp = ((s >> v) & 1ULL) ? component_of(bb.base(), s, v) : 0;
    std::vector<Cut> out;
    out.reserve(cuts.size());
    for (Cut a : cuts) out.push_back(flip_cut(a, comp, bb.base_vertex_count()));
    return out;
}

VerificationReport verify_higher_order(const BunkbedGraph& bb, VertexId u, VertexId v, int r,
                                       bool collect_witnesses) {
    if (r < 2) throw ValidationError("higher-order check requires r >= 2");
    CutFamily fam_plus = enumerate_family(bb, u, v, TargetSide::plus_target);
    CutFamily fam_minus = enumerate_family(bb, u, v, TargetSide::minus_target);
    const int family_size = static_cast<int>(fam_plus.cuts.size());
    if (r > family_size)
        throw ValidationError("r = " + std::to_string(r) + " exceeds the family size " +
                              std::to_string(family_size));
    binomial_guard(family_size, r);

    SupportTables tables(bb, u, v);
    const int n = bb.base_vertex_count();

    VerificationReport rep;
    rep.check = "higher-order";
    rep.u = u;
    rep.v = v;
    auto note_failure = [&rep](json item) {
        if (rep.counterexamples.size() < 100) rep.counterexamples.push_back(std::move(item));
    };

    std::vector<std::uint64_t> bmask_plus, smask_plus, bmask_minus, smask_minus;
    for (Cut a : fam_plus.cuts) {
        bmask_plus.push_back(boundary_mask(bb, a));
        smask_plus.push_back(support_mask(bb, a));
    }
    for (Cut a : fam_minus.cuts) {
        bmask_minus.push_back(boundary_mask(bb, a));
        smask_minus.push_back(support_mask(bb, a));
    }

    // T+ cuts and their event monomials, for witness scans
    std::vector<std::pair<Monomial, std::uint64_t>> t_plus; // (monomial, cut mask)
    for (std::size_t i = 0; i < fam_plus.cuts.size(); ++i)
        if (tables.uv_connected[smask_plus[i]])
            t_plus.emplace_back(Monomial::from_edge_mask(bb, bmask_plus[i]), fam_plus.cuts[i].members);
    std::sort(t_plus.begin(), t_plus.end(), [](const auto& a, const auto& b) {
        if (!(a.first == b.first)) return canonical_less(a.first, b.first);
        return a.second < b.second;
    });

    // event monomial of the all-minus copy of a support set, cached
    std::vector<Monomial> support_witness_mono(1ULL << n);
    std::vector<std::uint8_t> support_witness_known(1ULL << n, 0);
    auto witness_monomial = [&](std::uint64_t s) -> const Monomial& {
        if (!support_witness_known[s]) {
            support_witness_mono[s] = Monomial::from_edge_mask(bb, boundary_mask(bb, Cut{s}));
            support_witness_known[s] = 1;
        }
        return support_witness_mono[s];
    };

    Polynomial delta;
    std::size_t connected_plus = 0, connected_minus = 0;
    std::size_t noncon_plus = 0, noncon_minus = 0;
    std::size_t flip_fixed_points = 0;
    std::size_t dir_witness_strict = 0, dir_equal = 0, dir_reversed = 0;

    std::vector<std::uint64_t> flipped(static_cast<std::size_t>(r)), original(static_cast<std::size_t>(r));
    for_each_combination(family_size, r, [&](std::span<const int> idx) {
        std::uint64_t bor = 0, sor = 0;
        for (int i : idx) {
            bor |= bmask_plus[static_cast<std::size_t>(i)];
            sor |= smask_plus[static_cast<std::size_t>(i)];
        }
        Monomial mono = Monomial::from_edge_mask(bb, bor);
        delta.add_term(mono, 1);

        if (tables.uv_connected[sor]) {
            ++connected_plus;
            const Monomial& mb = witness_monomial(sor);
            if (!mb.divides(mono))
                note_failure(json{{"reason", "support witness does not divide collection monomial"},
                                  {"support", mask_to_vertices(sor)},
                                  {"monomial", monomial_text(mono, bb)}});
            if (mb == mono)
                ++dir_equal;
            else
                ++dir_witness_strict;
            if (strictly_divides(mono, mb)) ++dir_reversed;
        } else {
            ++noncon_plus;
            std::uint64_t comp = tables.comp_v[sor];
            std::uint64_t fb = 0, fs = 0;
            bool images_ok = true;
            for (std::size_t k = 0; k < idx.size(); ++k) {
                Cut a = fam_plus.cuts[static_cast<std::size_t>(idx[k])];
                Cut f = flip_cut(a, comp, n);
                original[k] = a.members;
                flipped[k] = f.members;
                images_ok = images_ok && in_family(bb, u, v, TargetSide::minus_target, f);
                fb |= boundary_mask(bb, f);
                fs |= support_mask(bb, f);
            }
            std::sort(flipped.begin(), flipped.end());
            std::sort(original.begin(), original.end());
            bool distinct_images =
                std::adjacent_find(flipped.begin(), flipped.end()) == flipped.end();
            if (flipped == original) ++flip_fixed_points;
            Monomial fm = Monomial::from_edge_mask(bb, fb);
            if (!images_ok || !distinct_images || fs != sor || !(fm == mono))
                note_failure(json{{"reason", "flip image is not a monomial-preserving minus-side collection"},
                                  {"support", mask_to_vertices(sor)},
                                  {"images_in_minus_family", images_ok},
                                  {"images_distinct", distinct_images},
                                  {"support_preserved", fs == sor},
                                  {"monomial_preserved", fm == mono}});
        }
    });

    for_each_combination(family_size, r, [&](std::span<const int> idx) {
        std::uint64_t bor = 0, sor = 0;
        for (int i : idx) {
            bor |= bmask_minus[static_cast<std::size_t>(i)];
            sor |= smask_minus[static_cast<std::size_t>(i)];
        }
        delta.add_term(Monomial::from_edge_mask(bb, bor), -1);
        if (tables.uv_connected[sor])
            ++connected_minus;
        else
            ++noncon_minus;
    });

    if (noncon_plus != noncon_minus)
        note_failure(json{{"reason", "non-connected collection counts differ between sides"},
                          {"plus_side", noncon_plus},
                          {"minus_side", noncon_minus}});

    // the claim itself: every surviving monomial has a strict divisor in T+
    auto survivors = delta.canonical_terms();
    std::size_t witness_samples = 0;
    for (const auto& [mono, coef] : survivors) {
        std::uint64_t s = mono.v;
        bool valid_support = tables.uv_connected[s];
        const char* via = nullptr;
        bool ok = false;
        if (valid_support) {
            std::uint64_t wmask = tables.whole_connected[s] ? s : tables.comp_v[s];
            const Monomial& mw = witness_monomial(wmask);
            if (strictly_divides(mw, mono)) {
                ok = true;
                via = tables.whole_connected[s] ? "full_support" : "component_restriction";
            }
        }
        if (!ok) {
            for (const auto& [mw, cm] : t_plus)
                if (strictly_divides(mw, mono)) {
                    ok = true;
                    via = "scan";
                    break;
                }
        }
        if (!ok) {
            note_failure(json{{"reason", "no strict divisor in T+"},
                              {"monomial", monomial_text(mono, bb)},
                              {"coefficient", coef.str()},
                              {"support_connects_uv", valid_support}});
        } else if (collect_witnesses && witness_samples < 20) {
            // report the canonically smallest witness for reproducibility
            for (const auto& [mw, cm] : t_plus)
                if (strictly_divides(mw, mono)) {
                    rep.witnesses.push_back(json{{"monomial", monomial_text(mono, bb)},
                                                 {"coefficient", coef.str()},
                                                 {"witness", cut_names(bb, Cut{cm})},
                                                 {"witness_monomial", monomial_text(mw, bb)},
                                                 {"found_via", via}});
                    ++witness_samples;
                    break;
                }
        }
    }

    rep.details = json{{"r", r},
                       {"family_size", family_size},
                       {"surviving_monomials", survivors.size()},
                       {"connected_collections", json{{"plus", connected_plus}, {"minus", connected_minus}}},
                       {"cancelled_collections", json{{"plus", noncon_plus}, {"minus", noncon_minus}}},
                       {"flip_fixed_points", flip_fixed_points},
                       {"division_direction",
                        json{{"witness_strictly_divides_collection", dir_witness_strict},
                             {"witness_equals_collection", dir_equal},
                             {"collection_strictly_divides_witness", dir_reversed}}}};
    rep.pass = rep.counterexamples.empty();
    return rep;
}

Decomposition decompose_f(const BunkbedGraph& bb, VertexId u, VertexId v, int edge_cap) {
    Decomposition out;
    out.f = f_polynomial(bb, u, v, edge_cap);

    CutFamily fam_plus = enumerate_family(bb, u, v, TargetSide::plus_target);
    SupportTables tables(bb, u, v);

    std::unordered_map<Monomial, std::size_t, MonomialHash> leader_of; // monomial -> leader index
    Polynomial leading;
    for (Cut c : fam_plus.cuts) {
        if (!tables.uv_connected[support_mask(bb, c)]) continue;
        Monomial m = Monomial::from_edge_mask(bb, boundary_mask(bb, c));
        leader_of.try_emplace(m, out.leaders.size()); // first cut in mask order wins ties
        out.leaders.push_back(DecompositionEntry{c, m, Polynomial{}});
        leading.add_term(m, 1);
    }

    // witness monomials, fewest distinct variables first, canonical tiebreak
    std::vector<Monomial> witnesses;
    witnesses.reserve(leader_of.size());
    for (const auto& [m, i] : leader_of) witnesses.push_back(m);
    std::sort(witnesses.begin(), witnesses.end(), [](const Monomial& a, const Monomial& b) {
        int va = std::popcount(a.h1) + std::popcount(a.v);
        int vb = std::popcount(b.h1) + std::popcount(b.v);
        if (va != vb) return va < vb;
        return canonical_less(a, b);
    });

    Polynomial rest = subtract(out.f, leading);
    for (const auto& [m, c] : rest.canonical_terms()) {
        bool assigned = false;
        for (const Monomial& w : witnesses) {
            if (strictly_divides(w, m)) {
                out.leaders[leader_of.at(w)].g.add_term(m.quotient(w), c);
                assigned = true;
                break;
            }
        }
        if (!assigned) out.residual.add_term(m, c);
    }

    bool g_constants_zero = true;
    Polynomial rebuilt = out.residual;
    for (const DecompositionEntry& entry : out.leaders) {
        if (entry.g.coefficient(Monomial{}) != 0) g_constants_zero = false;
        Polynomial factor = add(Polynomial::constant(1), entry.g);
        rebuilt = add(rebuilt, multiply_monomial(factor, entry.monomial, 1));
    }
    out.reconstruction_ok = rebuilt == out.f;
    out.pass = out.residual.is_zero() && g_constants_zero && out.reconstruction_ok;
    return out;
}

} // namespace bunkbed
