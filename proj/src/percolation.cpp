#include "bunkbed/percolation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "bunkbed/errors.hpp"
#include "bunkbed/rng.hpp"

namespace bunkbed {

namespace {

struct EdgeEnds {
    std::vector<int> a, b;
    explicit EdgeEnds(const BunkbedGraph& bb) {
        for (const BBEdge& e : bb.edges()) {
            a.push_back(e.a);
            b.push_back(e.b);
        }
    }
};

// tiny union-find over at most 64 vertices, used once per configuration
struct MiniUf {
    int parent[64];
    void reset(int n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int x, int y) {
        int rx = find(x), ry = find(y);
        if (rx != ry) parent[rx] = ry;
    }
};

void check_pair(const BunkbedGraph& bb, VertexId u, VertexId v) {
    bb.base().check_vertex(u);
    bb.base().check_vertex(v);
    if (u == v) throw ValidationError("u and v must be distinct");
}

// separation indicator over all closed-edge masks: entry K is 1 when closing
// exactly the edges of K disconnects s from t
std::vector<std::int64_t> separation_table(const BunkbedGraph& bb, int s, int t) {
    const int m = bb.edge_count();
    const int nn = bb.vertex_count();
    const EdgeEnds ends(bb);
    std::vector<std::int64_t> c(1ULL << m);
    MiniUf uf;
    const std::uint64_t all = (m == 64) ? ~0ULL : (1ULL << m) - 1;
    for (std::uint64_t closed = 0; closed <= all; ++closed) {
        uf.reset(nn);
        std::uint64_t open = all & ~closed;
        while (open) {
            int e = std::countr_zero(open);
            open &= open - 1;
            uf.unite(ends.a[static_cast<std::size_t>(e)], ends.b[static_cast<std::size_t>(e)]);
        }
        c[closed] = (uf.find(s) == uf.find(t)) ? 0 : 1;
        if (closed == all) break;
    }
    return c;
}

} // namespace

Polynomial nonconnection_polynomial(const BunkbedGraph& bb, VertexId u, VertexId v, TargetSide side,
                                    int edge_cap) {
    check_pair(bb, u, v);
    const int m = bb.edge_count();
    if (m > edge_cap)
        throw SizeGuardError("nonconnection polynomial over " + std::to_string(m) +
                             " bunkbed edges exceeds cap " + std::to_string(edge_cap));

    const int s = u; // u_-
    const int t = target_vertex_index(bb, v, side);
    std::vector<std::int64_t> c = separation_table(bb, s, t);

    // Subset Moebius transform: afterwards c[M] is the coefficient of the
    // squarefree edge-level monomial prod_{e in M} q_e in P(s </-> t).
    for (int i = 0; i < m; ++i) {
        const std::uint64_t bit = 1ULL << i;
        for (std::uint64_t mask = 0; mask < c.size(); ++mask)
            if (mask & bit) c[mask] -= c[mask ^ bit];
    }

    // collapse the two horizontal copies of each base edge onto one variable
    Polynomial out;
    for (std::uint64_t mask = 0; mask < c.size(); ++mask)
        if (c[mask] != 0) out.add_term(Monomial::from_edge_mask(bb, mask), Int(c[mask]));
    return out;
}

ExpansionResult nonconnection_expansion(const BunkbedGraph& bb, VertexId u, VertexId v, TargetSide side,
                                        int r_max) {
    check_pair(bb, u, v);
    CutFamily fam = enumerate_family(bb, u, v, side);
    const int family_size = static_cast<int>(fam.cuts.size());
    const int r_eff = (r_max <= 0) ? family_size : std::min(r_max, family_size);

    std::uint64_t term_budget = 0;
    {
        // sum of binomials, stopping early once over the cap
        long double running = 1.0L;
        for (int r = 1; r <= r_eff; ++r) {
            running = running * (family_size - r + 1) / r;
            if (running > static_cast<long double>(kExpansionTermCap) ||
                term_budget > kExpansionTermCap) {
                throw SizeGuardError("inclusion-exclusion expansion would exceed " +
                                     std::to_string(kExpansionTermCap) + " subsets; lower r_max");
            }
            term_budget += static_cast<std::uint64_t>(running);
        }
        if (term_budget > kExpansionTermCap)
            throw SizeGuardError("inclusion-exclusion expansion would exceed " +
                                 std::to_string(kExpansionTermCap) + " subsets; lower r_max");
    }

    std::vector<std::uint64_t> bmask;
    bmask.reserve(fam.cuts.size());
    for (Cut a : fam.cuts) bmask.push_back(boundary_mask(bb, a));

    Polynomial out;
    std::vector<int> idx;
    for (int r = 1; r <= r_eff; ++r) {
        const Int sign = (r % 2 == 1) ? 1 : -1;
        idx.assign(static_cast<std::size_t>(r), 0);
        std::iota(idx.begin(), idx.end(), 0);
        for (;;) {
            std::uint64_t un = 0;
            for (int i : idx) un |= bmask[static_cast<std::size_t>(i)];
            out.add_term(Monomial::from_edge_mask(bb, un), sign);
            // next r-combination of {0..family_size-1}
            int pos = r - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == family_size - r + pos) --pos;
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
            for (int j = pos + 1; j < r; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return ExpansionResult{std::move(out), r_eff < family_size, r_eff};
}

Polynomial f_polynomial(const BunkbedGraph& bb, VertexId u, VertexId v, int edge_cap) {
    return subtract(nonconnection_polynomial(bb, u, v, TargetSide::plus_target, edge_cap),
                    nonconnection_polynomial(bb, u, v, TargetSide::minus_target, edge_cap));
}

OracleEvaluator::OracleEvaluator(const BunkbedGraph& bb, int s_index, int t_index, int edge_cap)
    : bb_(bb), m_(bb.edge_count()) {
    if (m_ > edge_cap)
        throw SizeGuardError("oracle over " + std::to_string(m_) + " bunkbed edges exceeds cap " +
                             std::to_string(edge_cap));
    if (s_index < 0 || s_index >= bb.vertex_count() || t_index < 0 || t_index >= bb.vertex_count())
        throw ValidationError("oracle endpoint out of range");

    const int nn = bb_.vertex_count();
    const EdgeEnds ends(bb_);
    MiniUf uf;
    const std::uint64_t all = (1ULL << m_) - 1;
    connected_.resize(1ULL << m_);
    for (std::uint64_t closed = 0; closed <= all; ++closed) {
        uf.reset(nn);
        std::uint64_t open = all & ~closed;
        while (open) {
            int e = std::countr_zero(open);
            open &= open - 1;
            uf.unite(ends.a[static_cast<std::size_t>(e)], ends.b[static_cast<std::size_t>(e)]);
        }
        connected_[closed] = uf.find(s_index) == uf.find(t_index);
        if (closed == all) break;
    }
}

Rat OracleEvaluator::probability(const SymmetricAssignment& a) const {
    // closed-edge weight num_e, open-edge weight den - num_e, over a shared
    // denominator; the probability is sum over connected configurations of
    // the per-edge weight product, divided by den^m
    Int den(1);
    std::vector<Rat> q;
    q.reserve(static_cast<std::size_t>(m_));
    for (int e = 0; e < m_; ++e) {
        q.push_back(a.value(bb_.variable_of_edge_index(e)));
        den = boost::multiprecision::lcm(den, rat_den(q.back()));
    }
    std::vector<Int> closed_w, open_w;
    for (int e = 0; e < m_; ++e) {
        Int w = rat_num(q[static_cast<std::size_t>(e)]) * (den / rat_den(q[static_cast<std::size_t>(e)]));
        closed_w.push_back(w);
        open_w.push_back(den - w);
    }

    Int total(0);
    const std::uint64_t all = (1ULL << m_) - 1;
    // fast path: products and their sum provably fit in 128 bits
    if (den <= 0xffffffffULL && (msb(den) + 1) * m_ + m_ <= 120) {
        using u128 = unsigned __int128;
        std::vector<std::uint64_t> cw(static_cast<std::size_t>(m_)), ow(static_cast<std::size_t>(m_));
        for (int e = 0; e < m_; ++e) {
            cw[static_cast<std::size_t>(e)] = closed_w[static_cast<std::size_t>(e)].convert_to<std::uint64_t>();
            ow[static_cast<std::size_t>(e)] = open_w[static_cast<std::size_t>(e)].convert_to<std::uint64_t>();
        }
        u128 acc = 0;
        for (std::uint64_t closed = 0; closed <= all; ++closed) {
            if (connected_[closed]) {
                u128 prod = 1;
                for (int e = 0; e < m_; ++e)
                    prod *= ((closed >> e) & 1ULL) ? cw[static_cast<std::size_t>(e)]
                                                   : ow[static_cast<std::size_t>(e)];
                acc += prod;
            }
            if (closed == all) break;
        }
        total = Int(static_cast<std::uint64_t>(acc >> 64));
        total <<= 64;
        total += Int(static_cast<std::uint64_t>(acc));
    } else {
        for (std::uint64_t closed = 0; closed <= all; ++closed) {
            if (connected_[closed]) {
                Int prod(1);
                for (int e = 0; e < m_; ++e)
                    prod *= ((closed >> e) & 1ULL) ? closed_w[static_cast<std::size_t>(e)]
                                                   : open_w[static_cast<std::size_t>(e)];
                total += prod;
            }
            if (closed == all) break;
        }
    }
    Int denom = 1;
    for (int e = 0; e < m_; ++e) denom *= den;
    return Rat(total, denom);
}

Rat oracle_probability(const BunkbedGraph& bb, const SymmetricAssignment& a, BBVertex s, BBVertex t,
                       int edge_cap) {
    return OracleEvaluator(bb, bb.vertex_index(s), bb.vertex_index(t), edge_cap).probability(a);
}

MonteCarloResult monte_carlo(const BunkbedGraph& bb, const SymmetricAssignment& a, BBVertex s, BBVertex t,
                             std::uint64_t samples, std::uint64_t seed) {
    if (samples == 0) throw ValidationError("monte_carlo requires at least one sample");
    const int m = bb.edge_count();
    const int nn = bb.vertex_count();
    const int si = bb.vertex_index(s);
    const int ti = bb.vertex_index(t);
    const EdgeEnds ends(bb);

    struct EdgeProb {
        std::uint64_t num = 0, den = 1;
        bool fits = true;
        Rat q;
    };
    std::vector<EdgeProb> probs(static_cast<std::size_t>(m));
    for (int e = 0; e < m; ++e) {
        EdgeProb& ep = probs[static_cast<std::size_t>(e)];
        ep.q = a.value(bb.variable_of_edge_index(e));
        Int num = rat_num(ep.q), den = rat_den(ep.q);
        ep.fits = num >= 0 && num <= 0xffffffffffffffffULL && den <= 0xffffffffffffffffULL;
        if (ep.fits) {
            ep.num = num.convert_to<std::uint64_t>();
            ep.den = den.convert_to<std::uint64_t>();
        }
    }

    std::uint64_t successes = 0;
    MiniUf uf;
    for (std::uint64_t i = 0; i < samples; ++i) {
        SampleStream rng(seed, i);
        uf.reset(nn);
        for (int e = 0; e < m; ++e) {
            const EdgeProb& ep = probs[static_cast<std::size_t>(e)];
            bool closed;
            if (ep.fits) {
                closed = rng.bernoulli(ep.num, ep.den);
            } else {
                std::uint64_t draw = rng.next();
                closed = Rat(Int(draw), Int(1) << 64) < ep.q;
            }
            if (!closed) uf.unite(ends.a[static_cast<std::size_t>(e)], ends.b[static_cast<std::size_t>(e)]);
        }
        if (uf.find(si) == uf.find(ti)) ++successes;
    }

    MonteCarloResult r;
    r.successes = successes;
    r.samples = samples;
    r.seed = seed;
    r.estimate = Rat(Int(successes), Int(samples));
    const double phat = static_cast<double>(successes) / static_cast<double>(samples);
    r.stderr_est = std::sqrt(phat * (1.0 - phat) / static_cast<double>(samples));
    return r;
}

DiagonalEngine::DiagonalEngine(const BunkbedGraph& bb) : bb_(bb), nn_(bb.vertex_count()) {
    const int m = bb.edge_count();
    if (nn_ > 16 || m > 36)
        throw SizeGuardError("diagonal engine supports at most 8 base vertices and 36 bunkbed edges");

    adj_.assign(static_cast<std::size_t>(nn_), 0);
    for (const BBEdge& e : bb.edges()) {
        adj_[static_cast<std::size_t>(e.a)] |= 1u << e.b;
        adj_[static_cast<std::size_t>(e.b)] |= 1u << e.a;
    }

    const std::size_t nsub = 1ULL << nn_;
    ecount_.assign(nsub, 0);
    for (std::uint32_t w = 1; w < nsub; ++w) {
        int p = std::countr_zero(w);
        std::uint32_t rest = w & (w - 1);
        ecount_[w] = static_cast<std::uint16_t>(ecount_[rest] +
                                                std::popcount(adj_[static_cast<std::size_t>(p)] & rest));
    }
    bcount_.assign(nsub, 0);
    for (std::uint32_t w = 0; w < nsub; ++w) {
        int cnt = 0;
        for (const BBEdge& e : bb.edges())
            cnt += static_cast<int>(((w >> e.a) ^ (w >> e.b)) & 1u);
        bcount_[w] = static_cast<std::uint8_t>(cnt);
    }

    std::vector<std::vector<std::int64_t>> binom(static_cast<std::size_t>(m) + 1);
    for (int k = 0; k <= m; ++k) {
        binom[static_cast<std::size_t>(k)].assign(static_cast<std::size_t>(k) + 1, 0);
        binom[static_cast<std::size_t>(k)][0] = 1;
        for (int j = 1; j <= k; ++j)
            binom[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] =
                binom[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j - 1)] +
                (j <= k - 1 ? binom[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j)] : 0);
    }

    // conn[W][j] = number of j-edge subsets of the edges inside W whose open
    // part spans and connects W. Peeled off by the component of the lowest
    // vertex: every edge subset of W splits uniquely as (connected part on
    // W', arbitrary part on W \ W') with no crossing edges, so
    //   (1+x)^{e(W)} = sum_{W' ∋ pivot} conn_{W'} * (1+x)^{e(W\W')}.
    std::vector<std::vector<std::int64_t>> conn(nsub);
    for (std::uint32_t w = 1; w < nsub; ++w) {
        const int e = ecount_[w];
        conn[w] = binom[static_cast<std::size_t>(e)];
        const std::uint32_t pivot = w & (~w + 1);
        const std::uint32_t rest = w ^ pivot;
        std::uint32_t sub = rest;
        do {
            sub = (sub - 1) & rest;
            const std::uint32_t wp = pivot | sub;
            if (wp == w) continue;
            const auto& cp = conn[wp];
            const auto& br = binom[static_cast<std::size_t>(ecount_[w & ~wp])];
            auto& target = conn[w];
            for (std::size_t i = 0; i < cp.size(); ++i) {
                if (cp[i] == 0) continue;
                for (std::size_t j = 0; j < br.size(); ++j) target[i + j] -= cp[i] * br[j];
            }
        } while (sub != 0);
    }

    // rw[W](q) = P(open edges inside W connect all of W) =
    //   sum_j conn[W][j] (1-q)^j q^{e(W)-j}, as integer coefficients in q
    rw_.assign(nsub, {});
    for (std::uint32_t w = 1; w < nsub; ++w) {
        const int e = ecount_[w];
        std::vector<std::int64_t> r(static_cast<std::size_t>(e) + 1, 0);
        for (int j = 0; j <= e; ++j) {
            const std::int64_t cj = conn[w][static_cast<std::size_t>(j)];
            if (cj == 0) continue;
            for (int i = 0; i <= j; ++i) {
                const std::int64_t term = cj * ((i % 2 == 0) ? 1 : -1) *
                                          binom[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
                r[static_cast<std::size_t>(e - j + i)] += term;
            }
        }
        rw_[w] = std::move(r);
    }
}

UniPoly DiagonalEngine::nonconnection(int s_index, int t_index) const {
    if (s_index < 0 || s_index >= nn_ || t_index < 0 || t_index >= nn_ || s_index == t_index)
        throw ValidationError("invalid endpoints for diagonal restriction");
    // P(s </-> t) = sum over W = component of s: all boundary edges closed,
    // inside part connects W, everything else free
    const int m = bb_.edge_count();
    std::vector<Int> acc(static_cast<std::size_t>(m) + 1);
    const std::size_t nsub = 1ULL << nn_;
    for (std::uint32_t w = 1; w < nsub; ++w) {
        if (!((w >> s_index) & 1u) || ((w >> t_index) & 1u)) continue;
        const auto& r = rw_[w];
        const int shift = bcount_[w];
        for (std::size_t k = 0; k < r.size(); ++k)
            if (r[k] != 0) acc[k + static_cast<std::size_t>(shift)] += r[k];
    }
    return UniPoly(std::move(acc));
}

UniPoly DiagonalEngine::f_diagonal(VertexId u, VertexId v) const {
    check_pair(bb_, u, v);
    const int n = bb_.base_vertex_count();
    UniPoly plus = nonconnection(u, n + v);
    plus -= nonconnection(u, v);
    return plus;
}

UniPoly diagonal_f(const BunkbedGraph& bb, VertexId u, VertexId v) {
    return DiagonalEngine(bb).f_diagonal(u, v);
}

} // namespace bunkbed
