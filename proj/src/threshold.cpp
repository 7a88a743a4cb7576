#include "bunkbed/threshold.hpp"

#include <algorithm>

#include "bunkbed/errors.hpp"
#include "bunkbed/rng.hpp"

namespace bunkbed {

namespace {

using Coeffs = std::vector<Int>;

void trim(Coeffs& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Coeffs& p) { return static_cast<int>(p.size()) - 1; }

Coeffs derivative(const Coeffs& p) {
    Coeffs out;
    for (std::size_t k = 1; k < p.size(); ++k) out.push_back(Int(k) * p[k]);
    trim(out);
    return out;
}

Int content(const Coeffs& p) {
    Int g(0);
    for (const Int& c : p) g = boost::multiprecision::gcd(g, c);
    return g == 0 ? Int(1) : g;
}

void make_primitive(Coeffs& p) {
    Int g = content(p);
    if (g == 1) return;
    for (Int& c : p) c /= g;
}

int sign_at(const Coeffs& p, const Rat& x) {
    Rat acc(0);
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
    return acc.sign();
}

// pseudo-remainder of a by b scaled by a positive multiple of lc(b)^k, so the
// sign matches the true remainder's
Coeffs prem_positive(Coeffs a, const Coeffs& b) {
    const Int& lc = b.back();
    int steps = 0;
    while (degree(a) >= degree(b) && !a.empty()) {
        int shift = degree(a) - degree(b);
        Int top = a.back();
        for (Int& c : a) c *= lc;
        for (std::size_t k = 0; k < b.size(); ++k)
            a[k + static_cast<std::size_t>(shift)] -= top * b[k];
        trim(a);
        ++steps;
    }
    if (lc < 0 && steps % 2 == 1)
        for (Int& c : a) c = -c;
    make_primitive(a);
    return a;
}

// primitive polynomial gcd over Z[x], positive leading coefficient
Coeffs poly_gcd(Coeffs a, Coeffs b) {
    trim(a);
    trim(b);
    make_primitive(a);
    make_primitive(b);
    while (!b.empty()) {
        if (degree(a) < degree(b)) std::swap(a, b);
        if (b.empty()) break;
        Coeffs r = prem_positive(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() < 0)
        for (Int& c : a) c = -c;
    return a;
}

// exact division, used only where divisibility is guaranteed
Coeffs exact_divide(Coeffs num, const Coeffs& den) {
    Coeffs q(num.size() - den.size() + 1, Int(0));
    for (int k = degree(num); k >= degree(den); --k) {
        Int& top = num[static_cast<std::size_t>(k)];
        if (top == 0) continue;
        if (top % den.back() != 0) throw std::logic_error("polynomial division expected to be exact");
        Int factor = top / den.back();
        int shift = k - degree(den);
        q[static_cast<std::size_t>(shift)] = factor;
        for (std::size_t j = 0; j < den.size(); ++j)
            num[static_cast<std::size_t>(shift) + j] -= factor * den[j];
    }
    trim(num);
    if (!num.empty()) throw std::logic_error("polynomial division expected to be exact");
    return q;
}

Coeffs square_free_part(Coeffs p) {
    make_primitive(p);
    if (degree(p) <= 1) return p;
    Coeffs g = poly_gcd(p, derivative(p));
    if (degree(g) == 0) return p;
    Coeffs out = exact_divide(p, g);
    make_primitive(out);
    return out;
}

std::vector<Coeffs> sturm_chain(const Coeffs& squarefree) {
    std::vector<Coeffs> chain{squarefree, derivative(squarefree)};
    make_primitive(chain[0]);
    make_primitive(chain[1]);
    while (!chain.back().empty() && degree(chain.back()) > 0) {
        Coeffs r = prem_positive(chain[chain.size() - 2], chain.back());
        for (Int& c : r) c = -c;
        if (r.empty()) break;
        chain.push_back(std::move(r));
    }
    return chain;
}

int sign_variations(const std::vector<Coeffs>& chain, const Rat& x) {
    int vars = 0;
    int prev = 0;
    for (const Coeffs& p : chain) {
        if (p.empty()) continue;
        int s = sign_at(p, x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++vars;
        prev = s;
    }
    return vars;
}

// Descartes test after mapping (0,1) onto (0,inf): zero sign variations in
// (1+x)^d g(1/(1+x)) certify that g has no root in the open unit interval.
bool no_roots_in_unit_interval(const Coeffs& g) {
    Coeffs h(g.rbegin(), g.rend()); // q^d g(1/q)
    trim(h);
    if (h.empty()) return true;
    for (std::size_t k = h.size() - 1; k > 0; --k) // Taylor shift by 1
        for (std::size_t j = h.size() - 1; j >= k; --j) h[j - 1] += h[j];
    int vars = 0, prev = 0;
    for (const Int& c : h) {
        int s = c.sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++vars;
        prev = s;
    }
    return vars == 0;
}

} // namespace

DiagonalThreshold uniform_threshold(const BunkbedGraph& bb, VertexId u, VertexId v, const Rat& precision) {
    return uniform_threshold(DiagonalEngine(bb), bb, u, v, precision);
}

DiagonalThreshold uniform_threshold(const DiagonalEngine& engine, const BunkbedGraph& bb, VertexId u,
                                    VertexId v, const Rat& precision) {
    if (precision <= 0 || precision >= 1) throw ValidationError("precision must lie in (0,1)");
    DiagonalThreshold out;
    out.precision = precision;
    out.f_diagonal = engine.f_diagonal(u, v);

    const bool connected = same_component(bb.base(), bb.base().all_vertices_mask(), u, v);
    if (out.f_diagonal.is_zero()) {
        if (connected) {
            out.hard_failure = true;
            out.note = "diagonal of f vanishes identically although u and v are connected";
        } else {
            out.vacuous = true;
            out.note = "u and v lie in different components; f is identically zero";
        }
        return out;
    }

    const int low = out.f_diagonal.low_degree();
    if (out.f_diagonal.coefficient(low) <= 0) {
        out.hard_failure = true;
        out.note = "lowest-order diagonal coefficient is not positive";
        return out;
    }

    // g = f / q^low; positive at 0+, so positivity on (0,x] is exactly
    // root-freeness of g there plus a positive endpoint
    Coeffs g(out.f_diagonal.coeffs().begin() + low, out.f_diagonal.coeffs().end());

    auto certify = [&](const Rat& x) {
        out.certificate.push_back(SignSample{x, sign_of(Rat(out.f_diagonal(x)))});
    };

    if (no_roots_in_unit_interval(g)) {
        out.unit_interval_root_free = true;
        int end_sign = sign_at(g, Rat(1));
        if (end_sign > 0) {
            out.q_star = 1;
        } else if (end_sign == 0) {
            out.q_star = Rat(1) - precision;
        } else {
            out.hard_failure = true;
            out.note = "negative value at q=1 despite a root-free unit interval";
            return out;
        }
        certify(Rat(1, 2));
        certify(out.q_star);
        return out;
    }

    std::vector<Coeffs> chain = sturm_chain(square_free_part(g));
    const int at_zero = sign_variations(chain, Rat(0));

    auto roots_up_to = [&](const Rat& x) { return at_zero - sign_variations(chain, x); };

    Rat lo(0), hi(1);
    if (sign_at(g, Rat(1)) > 0 && roots_up_to(Rat(1)) == 0) {
        out.q_star = 1;
        certify(Rat(1, 2));
        certify(out.q_star);
        return out;
    }
    for (int iter = 0; iter < 300; ++iter) {
        if (lo > 0 && hi - lo <= precision) break;
        Rat mid = (lo + hi) / 2;
        int s = sign_at(g, mid);
        if (s > 0 && roots_up_to(mid) == 0) {
            lo = mid;
            certify(mid);
        } else {
            hi = mid;
        }
    }
    if (lo == 0) {
        out.hard_failure = true;
        out.note = "could not certify any positive radius";
        return out;
    }
    out.q_star = lo;
    return out;
}

bool certificate_valid(const DiagonalThreshold& t) {
    if (t.vacuous || t.hard_failure) return false;
    if (t.q_star <= 0) return false;
    if (sign_of(Rat(t.f_diagonal(t.q_star))) <= 0) return false;
    for (const SignSample& s : t.certificate)
        if (sign_of(Rat(t.f_diagonal(s.point))) != s.sign) return false;
    return true;
}

SampledBound sampled_bound_on_polynomial(const Polynomial& f, int edge_vars, int vertex_vars,
                                         const Rat& epsilon, std::uint64_t trials, std::uint64_t seed) {
    if (epsilon <= 0 || epsilon > 1) throw ValidationError("epsilon must lie in (0,1]");
    SampledBound out;
    out.epsilon_requested = epsilon;
    out.epsilon_final = epsilon;
    out.trials = trials;
    out.seed = seed;

    if (f.is_zero()) {
        out.vacuous = true;
        out.pass = true;
        out.note = "polynomial is identically zero; nothing to sample";
        return out;
    }
    if (trials == 0) {
        out.vacuous = true;
        out.pass = true;
        out.note = "no trials requested; no evidence";
        return out;
    }

    Rat eps = epsilon;
    for (int attempt = 0; attempt < 64; ++attempt) {
        bool all_positive = true;
        for (std::uint64_t trial = 0; trial < trials; ++trial) {
            SampleStream rng(seed, static_cast<std::uint64_t>(attempt) * trials + trial);
            std::vector<Rat> hq(static_cast<std::size_t>(edge_vars));
            std::vector<Rat> vq(static_cast<std::size_t>(vertex_vars));
            for (Rat& q : hq) q = Rat(Int(1 + rng.below(64)) * rat_num(eps), Int(64) * rat_den(eps));
            for (Rat& q : vq) q = Rat(Int(1 + rng.below(64)) * rat_num(eps), Int(64) * rat_den(eps));
            SymmetricAssignment a(hq, vq);
            Rat value = evaluate(f, a);
            if (value <= 0) {
                all_positive = false;
                if (out.violations.size() < 5)
                    out.violations.push_back(SampleViolation{trial, hq, vq, value});
            }
        }
        if (all_positive) {
            out.pass = true;
            out.epsilon_final = eps;
            return out;
        }
        out.bisected = true;
        eps /= 2;
        out.epsilon_final = eps;
    }
    out.pass = false;
    out.note = "no positive box found after 64 halvings";
    return out;
}

SampledBound sampled_bound(const BunkbedGraph& bb, VertexId u, VertexId v, const Rat& epsilon,
                           std::uint64_t trials, std::uint64_t seed, int edge_cap) {
    Polynomial f = f_polynomial(bb, u, v, edge_cap);
    SampledBound out = sampled_bound_on_polynomial(f, bb.base_edge_count(), bb.base_vertex_count(),
                                                   epsilon, trials, seed);
    if (f.is_zero()) out.note = "f identically zero (u and v lie in different components)";
    return out;
}

} // namespace bunkbed
